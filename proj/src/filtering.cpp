#include "sphfir/filtering.hpp"

#include <cmath>
#include <stdexcept>

namespace sphfir {

TransferFunction::TransferFunction(int bandwidth) : L_(bandwidth) {
  if (bandwidth < 1) throw std::domain_error("TransferFunction: bandwidth must be >= 1");
  mats_.resize(bandwidth);
  for (int l = 0; l < bandwidth; ++l)
    mats_[l] = Eigen::MatrixXcd::Zero(2 * l + 1, 2 * l + 1);
}

TransferFunction TransferFunction::identity(int bandwidth) {
  TransferFunction h(bandwidth);
  for (int l = 0; l < bandwidth; ++l)
    h.mats_[l] = Eigen::MatrixXcd::Identity(2 * l + 1, 2 * l + 1);
  return h;
}

TransferFunction fir_transfer(const std::vector<FirTap>& taps, int L) {
  if (taps.empty()) throw std::domain_error("fir_transfer: no taps");
  TransferFunction h(L);
  for (const FirTap& tap : taps) {
    const std::vector<Eigen::MatrixXcd> d = wigner_D_all_from_rotation(L, tap.rotation);
    for (int l = 0; l < L; ++l) h[l] += tap.weight * d[l];
  }
  return h;
}

TransferFunction axisym_transfer(const std::vector<complexd>& h0) {
  const int L = static_cast<int>(h0.size());
  if (L < 1) throw std::domain_error("axisym_transfer: empty coefficient list");
  TransferFunction h(L);
  for (int l = 0; l < L; ++l) {
    const complexd s = kTwoPi / norm_const(l, 0) * h0[l];
    h[l] = s * Eigen::MatrixXcd::Identity(2 * l + 1, 2 * l + 1);
  }
  return h;
}

TransferFunction rotation_transfer(const EulerAngles& e, int L) {
  TransferFunction h(L);
  std::vector<Eigen::MatrixXcd> d = wigner_D_all(L, e);
  for (int l = 0; l < L; ++l) h[l] = std::move(d[l]);
  return h;
}

Spectrum apply(const TransferFunction& h, const Spectrum& f) {
  const int L = std::min(h.bandwidth(), f.bandwidth());
  Spectrum out(L, false);
  for (int l = 0; l < L; ++l) out[l] = f[l] * h[l];
  if (f.real_valued() && out.conjugate_symmetric(1e-10)) out.set_real_valued(true);
  return out;
}

Spectrum rotate_spectrum(const Spectrum& f, const EulerAngles& e) {
  return apply(rotation_transfer(e, f.bandwidth()), f);
}

TransferFunction cascade(const TransferFunction& h1, const TransferFunction& h2) {
  if (h1.bandwidth() != h2.bandwidth())
    throw std::invalid_argument("cascade: bandwidth mismatch");
  TransferFunction h(h1.bandwidth());
  for (int l = 0; l < h.bandwidth(); ++l) h[l] = h1[l] * h2[l];
  return h;
}

Spectrum left_convolve(const Spectrum& f, const Spectrum& h) {
  if (f.bandwidth() != h.bandwidth())
    throw std::invalid_argument("left_convolve: bandwidth mismatch");
  if (!h.axially_symmetric(1e-10))
    throw std::domain_error("left_convolve: kernel is not axially symmetric");
  Spectrum out(f.bandwidth(), false);
  for (int l = 0; l < f.bandwidth(); ++l)
    out[l] = (kTwoPi / norm_const(l, 0)) * h.coeff(l, 0) * f[l];
  if (f.real_valued() && out.conjugate_symmetric(1e-10)) out.set_real_valued(true);
  return out;
}

std::vector<Eigen::MatrixXcd> rotation_convolve(const Spectrum& f, const Spectrum& h) {
  if (f.bandwidth() != h.bandwidth())
    throw std::invalid_argument("rotation_convolve: bandwidth mismatch");
  std::vector<Eigen::MatrixXcd> out(f.bandwidth());
  for (int l = 0; l < f.bandwidth(); ++l)
    out[l] = (f[l].adjoint() * h[l]) / (2.0 * l + 1.0);
  return out;
}

std::vector<FirTap> five_point_taps() {
  const Rotation r1 = Rotation::from_euler(EulerAngles(0.0, kPi / 32.0, 0.0));
  const Rotation r2 = Rotation::from_euler(EulerAngles(kPi / 2.0, kPi / 32.0, -kPi / 2.0));
  return {{0.5, Rotation::identity()},
          {0.125, r1},
          {0.125, r1.transpose()},
          {0.125, r2},
          {0.125, r2.transpose()}};
}

TransferFunction five_point_lowpass(int L) { return fir_transfer(five_point_taps(), L); }

std::vector<FirTap> three_point_taps(double beta0) {
  const Rotation r = Rotation::from_euler(EulerAngles(0.0, beta0, 0.0));
  return {{0.5, Rotation::identity()}, {0.25, r}, {0.25, r.transpose()}};
}

TransferFunction three_point_lowpass(double beta0, int L) {
  return fir_transfer(three_point_taps(beta0), L);
}

std::vector<FirTap> butterfly_taps(const ButterflyParams& p) {
  if (p.sigma <= 0.0) throw std::domain_error("butterfly_taps: sigma must be > 0");
  if (p.lambda <= 0.0) throw std::domain_error("butterfly_taps: lambda must be > 0");
  if (p.n_beta < 1 || p.n_alpha < 1)
    throw std::domain_error("butterfly_taps: grid counts must be positive");
  if (p.lambda * p.beta_max > kPi + 1e-12)
    throw std::domain_error("butterfly_taps: dilation pushes taps past beta = pi");

  std::vector<FirTap> taps;
  taps.reserve(static_cast<std::size_t>(p.n_beta) * p.n_alpha);
  for (int i = 0; i < p.n_beta; ++i) {
    const double beta = p.beta_max * (i + 1) / p.n_beta;  // (0, beta_max]
    const double t = std::tan(0.5 * beta);
    const double envelope = std::exp(-t * t / (2.0 * p.sigma));
    for (int j = 0; j < p.n_alpha; ++j) {
      const double alpha = kTwoPi * j / p.n_alpha;
      const double dir = p.orthogonal ? std::sin(alpha) : std::cos(alpha);
      const double w = t * dir * envelope;
      // prototype weight at (beta_k, alpha_k); dilation only stretches the
      // tap rotation out to lambda*beta_k
      const Rotation r =
          Rotation::from_euler(EulerAngles(alpha, p.lambda * beta, -alpha));
      taps.push_back({w, r});
    }
  }
  return taps;
}

std::vector<double> transfer_norms(const TransferFunction& h, const Spectrum* normalize_by) {
  std::vector<double> out(h.bandwidth());
  for (int l = 0; l < h.bandwidth(); ++l) {
    double v = h[l].norm();  // Frobenius
    if (normalize_by) {
      if (l >= normalize_by->bandwidth())
        throw std::invalid_argument("transfer_norms: normalizer bandwidth too small");
      const double n = normalize_by->degree_norm(l);
      if (n < 1e-300) throw std::domain_error("transfer_norms: normalizer has zero norm");
      v /= n;
    }
    out[l] = v;
  }
  return out;
}

std::vector<double> delta_normalized_response(const TransferFunction& h) {
  // || F_l(delta) H(l) || / || F_l(delta) || = || Q_l H(l) ||
  std::vector<double> out(h.bandwidth());
  for (int l = 0; l < h.bandwidth(); ++l) out[l] = h[l].row(l).norm();
  return out;
}

SampledField impulse_response(const TransferFunction& h, const SphereGrid& grid) {
  return synthesize(apply(h, delta_spectrum(h.bandwidth())), grid);
}

}  // namespace sphfir
