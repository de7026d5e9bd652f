#include "sphfir/transform.hpp"

#include <cmath>
#include <stdexcept>

namespace sphfir {

namespace {

// Per beta-row partial transforms in alpha: t_i(m) = sum_j coef_j f_ij e^{+i m alpha_j}
// for m = -(L-1)..L-1, stored at column m+L-1. Running-phase products keep
// this O(n_alpha * L) per row with no large tables.
Eigen::MatrixXcd row_alpha_transform(const SampledField& f, int L,
                                     const std::vector<double>& coef) {
  const int nb = f.grid.n_beta();
  const int na = f.grid.n_alpha();
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(nb, 2 * L - 1);
  for (int i = 0; i < nb; ++i) {
    for (int j = 0; j < na; ++j) {
      const complexd v = coef[j] * f.values(f.grid.index(i, j));
      const complexd step = std::polar(1.0, f.grid.alpha_nodes[j]);
      complexd phase = 1.0;  // e^{+i m alpha_j}, m = 0 upward
      t(i, L - 1) += v;
      for (int m = 1; m < L; ++m) {
        phase *= step;
        t(i, L - 1 + m) += v * phase;
        t(i, L - 1 - m) += v * std::conj(phase);
      }
    }
  }
  return t;
}

}  // namespace

double SampledField::energy() const {
  double e = 0.0;
  for (int i = 0; i < grid.n_beta(); ++i)
    for (int j = 0; j < grid.n_alpha(); ++j)
      e += grid.node_weight(i, j) * std::norm(values(grid.index(i, j)));
  return e;
}

SampledField synthesize(const Spectrum& f, const SphereGrid& grid) {
  const int L = f.bandwidth();
  SampledField out{grid};
  out.real_hint = f.real_valued();
  if (L == 0) return out;

  const int nb = grid.n_beta();
  const int na = grid.n_alpha();
  // s_i(m) = sum_l F_l^m N_l^m(x_i), then f_ij = sum_m s_i(m) e^{-i m alpha_j}
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(nb, 2 * L - 1);
  std::vector<double> lat;
  for (int i = 0; i < nb; ++i) {
    normalized_legendre_table(L, std::cos(grid.beta_nodes[i]), lat);
    for (int l = 0; l < L; ++l) {
      for (int m = 0; m <= l; ++m) {
        const double nl = lat[legendre_index(l, m)];
        s(i, L - 1 + m) += f.coeff(l, m) * nl;
        if (m > 0) {
          const double sign = (m % 2 == 0) ? 1.0 : -1.0;
          s(i, L - 1 - m) += f.coeff(l, -m) * sign * nl;
        }
      }
    }
  }
  for (int i = 0; i < nb; ++i) {
    for (int j = 0; j < na; ++j) {
      const complexd step = std::polar(1.0, -grid.alpha_nodes[j]);
      complexd phase = 1.0;
      complexd acc = s(i, L - 1);
      for (int m = 1; m < L; ++m) {
        phase *= step;
        acc += s(i, L - 1 + m) * phase + s(i, L - 1 - m) * std::conj(phase);
      }
      out.values(grid.index(i, j)) = acc;
    }
  }
  return out;
}

complexd synth_at(const Spectrum& f, double beta, double alpha) {
  const int L = f.bandwidth();
  std::vector<double> lat;
  normalized_legendre_table(L, std::cos(beta), lat);
  complexd acc = 0.0;
  for (int l = 0; l < L; ++l) {
    acc += f.coeff(l, 0) * lat[legendre_index(l, 0)];
    for (int m = 1; m <= l; ++m) {
      const double nl = lat[legendre_index(l, m)];
      const complexd e = std::polar(1.0, -m * alpha);
      const double sign = (m % 2 == 0) ? 1.0 : -1.0;
      acc += f.coeff(l, m) * nl * e + f.coeff(l, -m) * sign * nl * std::conj(e);
    }
  }
  return acc;
}

complexd synth_at(const Spectrum& f, const Eigen::Vector3d& u) {
  const SphereAngles a = point_angles(u);
  return synth_at(f, a.beta, a.alpha);
}

Spectrum analyze_quadrature(const SampledField& f, int L) {
  if (L < 1) throw std::domain_error("analyze_quadrature: L must be >= 1");
  if (f.grid.exact_bandwidth() < L)
    throw std::invalid_argument("analyze_quadrature: grid undersampled for this bandwidth");

  const int nb = f.grid.n_beta();
  // alpha-weighted partial transform, then weighted beta sums per (l, m).
  Eigen::MatrixXcd t = row_alpha_transform(f, L, f.grid.alpha_weights);

  Spectrum out(L, f.real_hint);
  std::vector<double> lat;
  for (int i = 0; i < nb; ++i) {
    normalized_legendre_table(L, std::cos(f.grid.beta_nodes[i]), lat);
    const double wb = f.grid.beta_weights[i];
    for (int l = 0; l < L; ++l) {
      for (int m = 0; m <= l; ++m) {
        const double nl = lat[legendre_index(l, m)];
        out[l](m + l) += wb * nl * t(i, L - 1 + m);
        if (m > 0) {
          const double sign = (m % 2 == 0) ? 1.0 : -1.0;
          out[l](-m + l) += wb * sign * nl * t(i, L - 1 - m);
        }
      }
    }
  }
  if (f.real_hint && !out.conjugate_symmetric(1e-8)) out.set_real_valued(false);
  return out;
}

Spectrum analyze_irf(const SampledField& f, int L, const std::vector<double>& window) {
  if (L < 1) throw std::domain_error("analyze_irf: L must be >= 1");
  if (!window.empty() && static_cast<int>(window.size()) < L)
    throw std::invalid_argument("analyze_irf: window shorter than bandwidth");
  const int nb = f.grid.n_beta();
  const int na = f.grid.n_alpha();
  if (static_cast<long>(nb) * na < static_cast<long>(L + 1) * (L + 1))
    throw std::invalid_argument("analyze_irf: fewer nodes than (L+1)^2");

  // Uniform alpha makes the per-degree normal matrix diagonal in m:
  // sum_j e^{i(m-m')alpha_j} = 0 for m != m' as long as |m-m'| < n_alpha.
  if (2 * (L - 1) >= na)
    throw std::invalid_argument("analyze_irf: n_alpha too small for this bandwidth");
  const double step = kTwoPi / na;
  for (int j = 0; j + 1 < na; ++j)
    if (std::abs(f.grid.alpha_nodes[j + 1] - f.grid.alpha_nodes[j] - step) > 1e-12)
      throw std::invalid_argument("analyze_irf: needs a uniform alpha grid");

  // Latitude tables for every row, reused across degrees.
  std::vector<std::vector<double>> lat(nb);
  for (int i = 0; i < nb; ++i)
    normalized_legendre_table(L, std::cos(f.grid.beta_nodes[i]), lat[i]);

  SampledField residual = f;
  Spectrum out(L, f.real_hint);
  const std::vector<double> ones(na, 1.0);

  for (int l = 0; l < L; ++l) {
    // unweighted design: A[(i,j)][m] = N_l^m(x_i) e^{-i m alpha_j}
    Eigen::MatrixXcd t = row_alpha_transform(residual, l + 1, ones);  // A^H r per row
    Eigen::RowVectorXcd c = Eigen::RowVectorXcd::Zero(2 * l + 1);
    const double zero_scale = 1e-14 * static_cast<double>(nb) * na;
    for (int m = -l; m <= l; ++m) {
      const int am = std::abs(m);
      const double sign = (m >= 0 || am % 2 == 0) ? 1.0 : -1.0;
      complexd num = 0.0;
      double den = 0.0;
      for (int i = 0; i < nb; ++i) {
        const double nl = sign * lat[i][legendre_index(l, am)];
        num += nl * t(i, l + m);
        den += static_cast<double>(na) * nl * nl;
      }
      if (den < zero_scale)
        throw std::runtime_error("analyze_irf: rank-deficient design");
      if (den < 1e-10) den += 1e-10;  // regularize a detected near-deficiency
      c(m + l) = num / den;
    }

    const double w = window.empty() ? 1.0 : window[l];
    c *= w;
    out[l] = c;

    if (l + 1 < L) {
      // residual -= fitted component on the grid
      for (int i = 0; i < nb; ++i) {
        for (int j = 0; j < na; ++j) {
          const complexd step = std::polar(1.0, -f.grid.alpha_nodes[j]);
          complexd phase = 1.0;
          complexd acc = c(l) * lat[i][legendre_index(l, 0)];
          for (int m = 1; m <= l; ++m) {
            phase *= step;
            const double nl = lat[i][legendre_index(l, m)];
            const double sign = (m % 2 == 0) ? 1.0 : -1.0;
            acc += c(l + m) * nl * phase + c(l - m) * sign * nl * std::conj(phase);
          }
          residual.values(f.grid.index(i, j)) -= acc;
        }
      }
    }
  }
  if (f.real_hint && !out.conjugate_symmetric(1e-8)) out.set_real_valued(false);
  return out;
}

}  // namespace sphfir
