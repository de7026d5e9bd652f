#include "sphfir/wigner.hpp"

#include <cmath>
#include <stdexcept>

namespace sphfir {

namespace {

// Explicit Wigner sum formula in log-factorial form. Safe where the sum
// has one or two terms (the l = max(|m|,|n|) and l = max+1 seeds); the
// general alternating sum is left to the test oracle.
double d_sum_formula(int l, int m, int n, double beta) {
  const double ch = std::cos(0.5 * beta);
  const double sh = std::sin(0.5 * beta);
  const double pref = 0.5 * (std::lgamma(l + m + 1.0) + std::lgamma(l - m + 1.0) +
                             std::lgamma(l + n + 1.0) + std::lgamma(l - n + 1.0));
  const int s_lo = std::max(0, n - m);
  const int s_hi = std::min(l + n, l - m);
  double acc = 0.0;
  for (int s = s_lo; s <= s_hi; ++s) {
    const double den = std::lgamma(l + n - s + 1.0) + std::lgamma(s + 1.0) +
                       std::lgamma(m - n + s + 1.0) + std::lgamma(l - m - s + 1.0);
    const double sign = ((m - n + s) % 2 == 0) ? 1.0 : -1.0;
    acc += sign * std::exp(pref - den) * std::pow(ch, 2 * l + n - m - 2 * s) *
           std::pow(sh, m - n + 2 * s);
  }
  return acc;
}

}  // namespace

std::vector<Eigen::MatrixXd> little_d_all(int L, double beta) {
  if (L < 1) throw std::domain_error("little_d_all: L must be >= 1");
  const double x = std::cos(beta);
  std::vector<Eigen::MatrixXd> d(L);
  for (int l = 0; l < L; ++l) d[l] = Eigen::MatrixXd::Zero(2 * l + 1, 2 * l + 1);
  d[0](0, 0) = 1.0;

  // Three-term recurrence in l at fixed (m, n), seeded at l = max(|m|,|n|)
  // and l = max+1 from the closed sum (one resp. two terms there).
  for (int m = -(L - 1); m <= L - 1; ++m) {
    for (int n = -(L - 1); n <= L - 1; ++n) {
      const int mu = std::max(std::abs(m), std::abs(n));
      if (mu >= L) continue;
      double dm1 = d_sum_formula(mu, m, n, beta);
      d[mu](m + mu, n + mu) = dm1;
      if (mu + 1 >= L) continue;
      double dcur = d_sum_formula(mu + 1, m, n, beta);
      d[mu + 1](m + mu + 1, n + mu + 1) = dcur;
      for (int l = mu + 1; l + 1 < L; ++l) {
        const double lm = std::sqrt((static_cast<double>(l) * l - static_cast<double>(m) * m) *
                                    (static_cast<double>(l) * l - static_cast<double>(n) * n));
        const double lp = std::sqrt(((l + 1.0) * (l + 1.0) - static_cast<double>(m) * m) *
                                    ((l + 1.0) * (l + 1.0) - static_cast<double>(n) * n));
        const double dnext =
            ((2 * l + 1.0) * (l * (l + 1.0) * x - static_cast<double>(m) * n) * dcur -
             (l + 1.0) * lm * dm1) /
            (l * lp);
        d[l + 1](m + l + 1, n + l + 1) = dnext;
        dm1 = dcur;
        dcur = dnext;
      }
    }
  }
  return d;
}

Eigen::MatrixXd little_d(int l, double beta) {
  if (l < 0) throw std::domain_error("little_d: l must be >= 0");
  return little_d_all(l + 1, beta).back();
}

namespace {

Eigen::MatrixXcd dress_with_phases(const Eigen::MatrixXd& d, const EulerAngles& e) {
  const int l = (static_cast<int>(d.rows()) - 1) / 2;
  Eigen::VectorXcd pa(2 * l + 1), pg(2 * l + 1);
  for (int m = -l; m <= l; ++m) {
    pa(m + l) = std::polar(1.0, -m * e.alpha);
    pg(m + l) = std::polar(1.0, -m * e.gamma);
  }
  return pa.asDiagonal() * d.cast<complexd>() * pg.asDiagonal();
}

}  // namespace

Eigen::MatrixXcd wigner_D(int l, const EulerAngles& e) {
  return dress_with_phases(little_d(l, e.beta), e);
}

std::vector<Eigen::MatrixXcd> wigner_D_all(int L, const EulerAngles& e) {
  const std::vector<Eigen::MatrixXd> d = little_d_all(L, e.beta);
  std::vector<Eigen::MatrixXcd> out(L);
  for (int l = 0; l < L; ++l) out[l] = dress_with_phases(d[l], e);
  return out;
}

Eigen::MatrixXcd wigner_D_from_rotation(int l, const Rotation& r) {
  return wigner_D(l, r.euler());
}

std::vector<Eigen::MatrixXcd> wigner_D_all_from_rotation(int L, const Rotation& r) {
  return wigner_D_all(L, r.euler());
}

}  // namespace sphfir
