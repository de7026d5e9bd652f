#ifndef SPHFIR_WIGNER_HPP
#define SPHFIR_WIGNER_HPP

#include <vector>

#include <Eigen/Dense>

#include "sphfir/harmonics.hpp"
#include "sphfir/sphere.hpp"

namespace sphfir {

// Index convention used everywhere: row m and column n run -l..l
// left-to-right / top-to-bottom, so entry (m, n) lives at [m+l][n+l].

/// Little Wigner d-matrix d_l(beta), real orthogonal (2l+1)^2.
/// d_l(0) = I and the middle column satisfies
/// d_l^{m0}(beta) = sqrt((l-m)!/(l+m)!) P_l^m(cos beta).
Eigen::MatrixXd little_d(int l, double beta);

/// d_0..d_{L-1} in one pass (the recursion over l is shared).
std::vector<Eigen::MatrixXd> little_d_all(int L, double beta);

/// D_l^{mn}(alpha, beta, gamma) = e^{-j m alpha} d_l^{mn}(beta) e^{-j n gamma}.
/// Unitary; D_l(identity) = I. For g(u) = f(Ru) the coefficients transform
/// as row vectors: G_l = F_l D_l(R).
Eigen::MatrixXcd wigner_D(int l, const EulerAngles& e);
std::vector<Eigen::MatrixXcd> wigner_D_all(int L, const EulerAngles& e);

Eigen::MatrixXcd wigner_D_from_rotation(int l, const Rotation& r);
std::vector<Eigen::MatrixXcd> wigner_D_all_from_rotation(int L, const Rotation& r);

}  // namespace sphfir

#endif
