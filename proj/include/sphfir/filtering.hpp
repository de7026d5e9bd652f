#ifndef SPHFIR_FILTERING_HPP
#define SPHFIR_FILTERING_HPP

#include <vector>

#include <Eigen/Dense>

#include "sphfir/so3.hpp"
#include "sphfir/spectrum.hpp"
#include "sphfir/transform.hpp"
#include "sphfir/wigner.hpp"

namespace sphfir {

/// One FIR tap: a weighted rotated copy of the input, g += b f(R u).
struct FirTap {
  complexd weight;
  Rotation rotation;
};

/// Per-degree transfer matrices H(l), l = 0..L-1, each (2l+1)^2.
/// Spectra are row vectors, so application multiplies on the right
/// (G_l = F_l H(l)) and cascade(H1, H2) = H1(l) H2(l) means "H1 first".
class TransferFunction {
public:
  TransferFunction() = default;
  explicit TransferFunction(int bandwidth);

  static TransferFunction identity(int bandwidth);

  int bandwidth() const { return L_; }
  Eigen::MatrixXcd& operator[](int l) { return mats_[l]; }
  const Eigen::MatrixXcd& operator[](int l) const { return mats_[l]; }

private:
  int L_ = 0;
  std::vector<Eigen::MatrixXcd> mats_;
};

/// H(l) = sum_k b_k D_l(R_k).
TransferFunction fir_transfer(const std::vector<FirTap>& taps, int L);

/// Axially-symmetric kernel with central coefficients h0:
/// H(l) = (2pi / c_l^0) h0[l] I.
TransferFunction axisym_transfer(const std::vector<complexd>& h0);

/// Pure rotation filter, H(l) = D_l(R).
TransferFunction rotation_transfer(const EulerAngles& e, int L);

/// G_l = F_l H(l), applied up to min(bandwidths).
Spectrum apply(const TransferFunction& h, const Spectrum& f);

/// Convenience: spectrum of u -> f(Ru).
Spectrum rotate_spectrum(const Spectrum& f, const EulerAngles& e);

/// Per-degree product H1(l) H2(l).
TransferFunction cascade(const TransferFunction& h1, const TransferFunction& h2);

/// Left (axially-symmetric) convolution: G_l = (2pi / c_l^0) F_l H_l^0.
/// Throws unless H is axially symmetric to 1e-10.
Spectrum left_convolve(const Spectrum& f, const Spectrum& h);

/// Rotation-style convolution g(R) = int f*(u) h(Ru) du; coefficients are
/// the rank-one matrices G(l) = F_l^dagger H_l / (2l+1).
std::vector<Eigen::MatrixXcd> rotation_convolve(const Spectrum& f,
                                                const Spectrum& h);

/// The 5-tap lowpass: center weight 0.5 plus 0.125 at pole shifts of
/// pi/32 along the 0 and 90 degree meridians (and their inverses).
std::vector<FirTap> five_point_taps();
TransferFunction five_point_lowpass(int L);

/// 3-point meridian average: 0.5 f(u) + 0.25 f(R_b0 u) + 0.25 f(R_b0^T u).
std::vector<FirTap> three_point_taps(double beta0);
TransferFunction three_point_lowpass(double beta0, int L);

struct ButterflyParams {
  double sigma = 0.05;
  double lambda = 1.0;   // dilation: tap colatitudes scale to lambda*beta_k
  int n_beta = 12;
  int n_alpha = 12;
  double beta_max = kPi / 2.0;
  bool orthogonal = false;  // false: x-oriented (cos alpha); true: y (sin alpha)
};

/// FIR taps sampling the butterfly kernel
/// h(beta, alpha) = tan(beta/2) cos(alpha) exp(-tan^2(beta/2) / (2 sigma))
/// on an n_beta x n_alpha angular grid, with gamma_k = -alpha_k.
/// Dilation moves the tap rotations out to lambda*beta_k while keeping the
/// prototype weights, which stretches the kernel footprint by lambda.
/// lambda*beta_max beyond pi is rejected.
std::vector<FirTap> butterfly_taps(const ButterflyParams& p);

/// Frobenius norm of H(l) per degree; an optional normalizer divides each
/// value by that spectrum's ||F_l|| (zero norms are rejected).
std::vector<double> transfer_norms(const TransferFunction& h,
                                   const Spectrum* normalize_by = nullptr);

/// ||F_l(delta) H(l)|| / ||F_l(delta)||, the impulse-normalized response
/// curve of the frequency-response plots.
std::vector<double> delta_normalized_response(const TransferFunction& h);

/// Synthesis of apply(H, delta_spectrum(L)) on the given grid.
SampledField impulse_response(const TransferFunction& h, const SphereGrid& grid);

}  // namespace sphfir

#endif
