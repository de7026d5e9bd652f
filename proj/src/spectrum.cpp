#include "sphfir/spectrum.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "sphfir/sphere.hpp"

namespace sphfir {

Spectrum::Spectrum(int bandwidth, bool real_valued) : L_(bandwidth), real_(real_valued) {
  if (bandwidth < 0) throw std::domain_error("Spectrum: bandwidth must be >= 0");
  rows_.resize(bandwidth);
  for (int l = 0; l < bandwidth; ++l) rows_[l] = Eigen::RowVectorXcd::Zero(2 * l + 1);
}

double Spectrum::total_energy() const {
  double e = 0.0;
  for (const auto& r : rows_) e += r.squaredNorm();
  return e;
}

double Spectrum::max_abs_diff(const Spectrum& other) const {
  if (other.L_ != L_) throw std::invalid_argument("Spectrum: bandwidth mismatch");
  double m = 0.0;
  for (int l = 0; l < L_; ++l)
    m = std::max(m, (rows_[l] - other.rows_[l]).cwiseAbs().maxCoeff());
  return m;
}

bool Spectrum::conjugate_symmetric(double tol) const {
  for (int l = 0; l < L_; ++l) {
    for (int m = 0; m <= l; ++m) {
      const double sign = (m % 2 == 0) ? 1.0 : -1.0;
      if (std::abs(coeff(l, -m) - sign * std::conj(coeff(l, m))) > tol) return false;
    }
  }
  return true;
}

bool Spectrum::axially_symmetric(double tol) const {
  for (int l = 0; l < L_; ++l) {
    for (int m = -l; m <= l; ++m) {
      if (m != 0 && std::abs(coeff(l, m)) > tol) return false;
    }
  }
  return true;
}

Eigen::RowVectorXcd center_selector(int l) {
  Eigen::RowVectorXcd q = Eigen::RowVectorXcd::Zero(2 * l + 1);
  q(l) = 1.0;
  return q;
}

MagnitudePhase magnitude_phase(const Eigen::RowVectorXcd& f) {
  const double mag = f.norm();
  if (mag < 1e-14) {
    const int l = (static_cast<int>(f.size()) - 1) / 2;
    return {0.0, center_selector(l)};
  }
  return {mag, f / mag};
}

Spectrum delta_spectrum(int L) {
  if (L < 1) throw std::domain_error("delta_spectrum: L must be >= 1");
  Spectrum f(L, true);
  for (int l = 0; l < L; ++l) f.set_coeff(l, 0, norm_const(l, 0));
  return f;
}

Spectrum fisher_von_mises_spectrum(double kappa, int L) {
  if (kappa <= 0.0) throw std::domain_error("fisher_von_mises_spectrum: kappa must be > 0");
  if (L < 1) throw std::domain_error("fisher_von_mises_spectrum: L must be >= 1");

  // F_l^0 = 2pi int_{-1}^{1} f(x) c_l^0 P_l(x) dx with the density written
  // as kappa e^{kappa(x-1)} / (2pi (1 - e^{-2 kappa})) to stay finite for
  // large kappa. Gauss-Legendre resolves the e^{kappa(x-1)} boundary layer
  // once the node spacing near x = 1 (about 3/n^2) is inside 1/kappa.
  const int n = std::max({128, L + 64, static_cast<int>(std::ceil(4.0 * std::sqrt(kappa))) + L});
  std::vector<double> x, w;
  gauss_legendre(n, x, w);
  const double scale = kappa / (kTwoPi * (1.0 - std::exp(-2.0 * kappa)));

  Spectrum out(L, true);
  std::vector<double> lat;
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(L);
  for (int i = 0; i < n; ++i) {
    normalized_legendre_table(L, x[i], lat);
    const double fx = scale * std::exp(kappa * (x[i] - 1.0));
    for (int l = 0; l < L; ++l) acc(l) += w[i] * fx * lat[legendre_index(l, 0)];
  }
  for (int l = 0; l < L; ++l) out.set_coeff(l, 0, kTwoPi * acc(l));
  return out;
}

double fvm_bessel_ratio(int l, double kappa) {
  if (kappa <= 0.0) throw std::domain_error("fvm_bessel_ratio: kappa must be > 0");
  if (l < 0) throw std::domain_error("fvm_bessel_ratio: l must be >= 0");
  if (l == 0) return 1.0;
  // s_j = I_{j+1/2}/I_{j-1/2} by backward recurrence on
  // s_j = 1 / ((2j+1)/kappa + s_{j+1}); the tail start just needs enough
  // depth past max(l, kappa).
  const int start = l + 64 + static_cast<int>(kappa);
  double s = 0.0;
  double ratio = 1.0;
  std::vector<double> saved(l + 1, 0.0);
  for (int j = start; j >= 1; --j) {
    s = 1.0 / ((2.0 * j + 1.0) / kappa + s);
    if (j <= l) saved[j] = s;
  }
  for (int j = 1; j <= l; ++j) ratio *= saved[j];
  return ratio;
}

Spectrum magnitude_only_spectrum(const Spectrum& f) {
  Spectrum out(f.bandwidth(), f.real_valued());
  for (int l = 0; l < f.bandwidth(); ++l)
    out[l] = f.degree_norm(l) * center_selector(l);
  return out;
}

Spectrum phase_swap(const Spectrum& f, const Spectrum& g) {
  if (f.bandwidth() != g.bandwidth())
    throw std::invalid_argument("phase_swap: bandwidth mismatch");
  Spectrum out(f.bandwidth(), false);
  for (int l = 0; l < f.bandwidth(); ++l) {
    const MagnitudePhase mp = magnitude_phase(g[l]);
    out[l] = f.degree_norm(l) * mp.phase;
  }
  return out;
}

DofCounts dof_counts(int L, bool real_valued) {
  if (L < 0) throw std::domain_error("dof_counts: L must be >= 0");
  const std::int64_t lp1 = L + 1;
  DofCounts c{};
  if (real_valued) {
    c.total = lp1 * lp1;
    c.magnitude = lp1;
    c.phase = static_cast<std::int64_t>(L) * lp1;
    c.percent_phase = 100.0 * static_cast<double>(L) / static_cast<double>(lp1);
  } else {
    c.total = 2 * lp1 * lp1;
    c.magnitude = lp1;
    c.phase = c.total - c.magnitude;
    c.percent_phase = 100.0 * static_cast<double>(c.phase) / static_cast<double>(c.total);
  }
  return c;
}

namespace {

// mt19937_64-based normals (Box-Muller on raw 53-bit uniforms) so output
// is identical across standard libraries.
class NormalGen {
public:
  explicit NormalGen(std::uint64_t seed) : rng_(seed) {}
  double operator()() {
    if (have_) {
      have_ = false;
      return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(kTwoPi * u2);
    have_ = true;
    return r * std::cos(kTwoPi * u2);
  }

private:
  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  std::mt19937_64 rng_;
  bool have_ = false;
  double spare_ = 0.0;
};

}  // namespace

Spectrum random_spectrum(int L, std::uint64_t seed, bool real_valued) {
  Spectrum f(L, real_valued);
  NormalGen gen(seed);
  for (int l = 0; l < L; ++l) {
    if (real_valued) {
      f.set_coeff(l, 0, gen());
      for (int m = 1; m <= l; ++m) {
        const complexd v(gen(), gen());
        f.set_coeff(l, m, v);
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        f.set_coeff(l, -m, sign * std::conj(v));
      }
    } else {
      for (int m = -l; m <= l; ++m) f.set_coeff(l, m, complexd(gen(), gen()));
    }
  }
  return f;
}

}  // namespace sphfir
