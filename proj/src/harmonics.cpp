#include "sphfir/harmonics.hpp"

#include <cmath>
#include <stdexcept>

namespace sphfir {

double assoc_legendre(int l, int m, double x) {
  if (m < 0 || m > l) throw std::domain_error("assoc_legendre: need 0 <= m <= l");
  if (std::abs(x) > 1.0) throw std::domain_error("assoc_legendre: |x| > 1");

  // diagonal seed P_m^m = (-1)^m (2m-1)!! (1-x^2)^{m/2}, then upward in l
  double pmm = 1.0;
  if (m > 0) {
    const double somx2 = std::sqrt((1.0 - x) * (1.0 + x));
    double f = 1.0;
    for (int i = 0; i < m; ++i) {
      pmm *= -f * somx2;
      f += 2.0;
    }
  }
  if (l == m) return pmm;
  double pmmp1 = x * (2 * m + 1) * pmm;
  if (l == m + 1) return pmmp1;
  double pll = 0.0;
  for (int ll = m + 2; ll <= l; ++ll) {
    pll = ((2 * ll - 1) * x * pmmp1 - (ll + m - 1) * pmm) / (ll - m);
    pmm = pmmp1;
    pmmp1 = pll;
  }
  return pll;
}

double norm_const(int l, int m) {
  const int am = std::abs(m);
  if (am > l) throw std::domain_error("norm_const: |m| > l");
  const double lg = std::lgamma(l - m + 1.0) - std::lgamma(l + m + 1.0);
  return std::sqrt((2.0 * l + 1.0) / kFourPi) * std::exp(0.5 * lg);
}

void normalized_legendre_table(int L, double x, std::vector<double>& out) {
  if (std::abs(x) > 1.0) throw std::domain_error("normalized_legendre_table: |x| > 1");
  out.assign(static_cast<std::size_t>(L) * (L + 1) / 2, 0.0);
  if (L <= 0) return;
  const double s = std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x)));

  // N_l^m = c_l^m P_l^m; diagonal by ratio, then three-term upward in l.
  double diag = 1.0 / std::sqrt(kFourPi);
  for (int m = 0; m < L; ++m) {
    out[legendre_index(m, m)] = diag;
    if (m + 1 < L) {
      const double nlm1 = x * std::sqrt(2.0 * m + 3.0) * diag;
      out[legendre_index(m + 1, m)] = nlm1;
      double nprev = diag, ncur = nlm1;
      for (int l = m + 2; l < L; ++l) {
        const double a = std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l) * l - static_cast<double>(m) * m));
        const double b = std::sqrt(((2.0 * l + 1.0) * ((l - 1.0) * (l - 1.0) - static_cast<double>(m) * m)) /
                                   ((2.0 * l - 3.0) * (static_cast<double>(l) * l - static_cast<double>(m) * m)));
        const double nl = a * x * ncur - b * nprev;
        out[legendre_index(l, m)] = nl;
        nprev = ncur;
        ncur = nl;
      }
    }
    diag *= -s * std::sqrt((2.0 * m + 3.0) / (2.0 * m + 2.0));
  }
}

complexd eval_Y(int l, int m, double beta, double alpha) {
  const int am = std::abs(m);
  if (am > l) throw std::domain_error("eval_Y: |m| > l");
  if (beta < -1e-12 || beta > kPi + 1e-12) throw std::domain_error("eval_Y: beta outside [0, pi]");
  const double lat = norm_const(l, am) * assoc_legendre(l, am, std::cos(beta));
  if (m >= 0) return lat * std::polar(1.0, -m * alpha);
  // Y_l^{-m} = (-1)^m conj(Y_l^m)
  const double sign = (am % 2 == 0) ? 1.0 : -1.0;
  return sign * lat * std::polar(1.0, -m * alpha);
}

Eigen::VectorXcd eval_Y_column(int l, double beta, double alpha) {
  if (beta < -1e-12 || beta > kPi + 1e-12)
    throw std::domain_error("eval_Y_column: beta outside [0, pi]");
  std::vector<double> lat;
  normalized_legendre_table(l + 1, std::cos(beta), lat);
  Eigen::VectorXcd y(2 * l + 1);
  for (int m = 0; m <= l; ++m) {
    const complexd v = lat[legendre_index(l, m)] * std::polar(1.0, -m * alpha);
    y(m + l) = v;
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    y(-m + l) = sign * std::conj(v);
  }
  return y;
}

Eigen::VectorXcd eval_Y_column(int l, const Eigen::Vector3d& u) {
  const SphereAngles a = point_angles(u);
  return eval_Y_column(l, a.beta, a.alpha);
}

}  // namespace sphfir
