#ifndef SPHFIR_HARMONICS_HPP
#define SPHFIR_HARMONICS_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "sphfir/sphere.hpp"

namespace sphfir {

using complexd = std::complex<double>;

/// Associated Legendre P_l^m(x) for 0 <= m <= l, |x| <= 1, with the
/// Condon-Shortley phase folded in (P_1^1(x) = -sqrt(1-x^2)).
double assoc_legendre(int l, int m, double x);

/// Normalization c_l^m = sqrt((2l+1)/(4pi) * (l-m)!/(l+m)!), |m| <= l.
/// Evaluated in log-gamma space so large degrees do not overflow.
double norm_const(int l, int m);

/// Y_l^m(beta, alpha) = c_l^m P_l^m(cos beta) e^{-j m alpha}.
/// Note the e^{-j m alpha} sign. Negative m via
/// Y_l^{-m} = (-1)^m conj(Y_l^m).
complexd eval_Y(int l, int m, double beta, double alpha);

/// Column vector [Y_l^{-l}, ..., Y_l^{l}]^T at a point.
Eigen::VectorXcd eval_Y_column(int l, double beta, double alpha);
Eigen::VectorXcd eval_Y_column(int l, const Eigen::Vector3d& u);

/// Latitude parts c_l^m P_l^m(x) for all 0 <= m <= l < L at one x, packed
/// as out[l*(l+1)/2 + m]. Stable m-diagonal seed plus upward l recurrence
/// on the normalized functions; usable well past l = 128.
void normalized_legendre_table(int L, double x, std::vector<double>& out);

inline std::size_t legendre_index(int l, int m) {
  return static_cast<std::size_t>(l) * (l + 1) / 2 + m;
}

}  // namespace sphfir

#endif
