#ifndef SPHFIR_SO3_HPP
#define SPHFIR_SO3_HPP

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "sphfir/transform.hpp"
#include "sphfir/wigner.hpp"

namespace sphfir {

// Brute-force SO(3) Fourier machinery. This is the oracle side of the
// projected-convolution equivalences: everything here is quadratic or worse
// in the node count and meant for small bandwidths (L <= 6).

/// Tensor grid over (alpha, beta, gamma) with normalized Haar weights
/// dR = (8 pi^2)^{-1} sin(beta) d(alpha) d(beta) d(gamma); weights sum to 1.
struct So3Grid {
  SphereGrid sphere;                 // (beta, alpha) part
  std::vector<double> gamma_nodes;   // uniform on [0, 2pi)
  std::vector<double> gamma_weights; // 2pi/n_gamma each
  int bandwidth = 0;                 // design L; quadrature exact below it

  int n_gamma() const { return static_cast<int>(gamma_nodes.size()); }
  std::size_t size() const { return sphere.size() * gamma_nodes.size(); }
  std::size_t index(int i, int j, int k) const {
    return sphere.index(i, j) * gamma_nodes.size() + k;
  }
  double haar_weight(int i, int j, int k) const {
    return sphere.node_weight(i, j) * gamma_weights[k] / (8.0 * kPi * kPi);
  }
  EulerAngles node(int i, int j, int k) const {
    return EulerAngles(sphere.alpha_nodes[j], sphere.beta_nodes[i], gamma_nodes[k]);
  }
  double weight_sum() const;
};

So3Grid make_so3_grid(int L, int oversample = 2);

using So3Samples = Eigen::VectorXcd;
using So3Function = std::function<complexd(const EulerAngles&)>;

So3Samples sample_so3(const So3Function& f, const So3Grid& grid);

/// Lift a sphere function to SO(3): f~(R) = f(R n), constant in gamma.
So3Samples lift_samples(const Spectrum& f, const So3Grid& grid);

/// Matrix coefficient of a lifted spectrum: only the middle row nonzero,
/// F~(l)^{0n} = F_l^n / (4 pi c_l^0).
Eigen::MatrixXcd lift_spectrum(const Eigen::RowVectorXcd& f_l);
std::vector<Eigen::MatrixXcd> lift_spectrum(const Spectrum& f);

/// F(l) = int f(R) D_l(R)^dagger dR for l < grid.bandwidth, by quadrature.
std::vector<Eigen::MatrixXcd> so3_analyze_bruteforce(const So3Samples& f,
                                                     const So3Grid& grid);

/// f(R) = sum_l (2l+1) Trace[F(l) D_l(R)].
complexd so3_synthesize(const std::vector<Eigen::MatrixXcd>& coeffs,
                        const EulerAngles& e);
complexd so3_synthesize(const std::vector<Eigen::MatrixXcd>& coeffs,
                        const Rotation& r);

/// (1/2pi) int g(alpha, beta, gamma) d(gamma), returned on the grid's
/// sphere part.
SampledField project_to_sphere(const So3Samples& g, const So3Grid& grid);

/// g(V) = int h(R) f(R^-1 V) dR by quadrature. Off-grid values of f come
/// from its brute-force transform, which is exact when f is bandlimited
/// below the grid's design bandwidth.
So3Samples so3_convolve_bruteforce(const So3Samples& h, const So3Samples& f,
                                   const So3Grid& grid);

}  // namespace sphfir

#endif
