#include "sphfir/so3.hpp"

#include <stdexcept>

namespace sphfir {

double So3Grid::weight_sum() const {
  double s = 0.0;
  for (int i = 0; i < sphere.n_beta(); ++i)
    for (int j = 0; j < sphere.n_alpha(); ++j)
      for (int k = 0; k < n_gamma(); ++k) s += haar_weight(i, j, k);
  return s;
}

So3Grid make_so3_grid(int L, int oversample) {
  if (L < 1) throw std::domain_error("make_so3_grid: L must be >= 1");
  So3Grid g;
  g.sphere = make_grid(L, oversample);
  g.bandwidth = L;
  const int ng = std::max(2 * L, oversample * L);
  g.gamma_nodes.resize(ng);
  g.gamma_weights.assign(ng, kTwoPi / ng);
  for (int k = 0; k < ng; ++k) g.gamma_nodes[k] = kTwoPi * k / ng;
  return g;
}

So3Samples sample_so3(const So3Function& f, const So3Grid& grid) {
  So3Samples out(grid.size());
  for (int i = 0; i < grid.sphere.n_beta(); ++i)
    for (int j = 0; j < grid.sphere.n_alpha(); ++j)
      for (int k = 0; k < grid.n_gamma(); ++k)
        out(grid.index(i, j, k)) = f(grid.node(i, j, k));
  return out;
}

So3Samples lift_samples(const Spectrum& f, const So3Grid& grid) {
  // f~(alpha, beta, gamma) = f(beta, alpha): constant in gamma since
  // R(alpha, beta, gamma) n depends only on (alpha, beta).
  So3Samples out(grid.size());
  for (int i = 0; i < grid.sphere.n_beta(); ++i) {
    for (int j = 0; j < grid.sphere.n_alpha(); ++j) {
      const complexd v = synth_at(f, grid.sphere.beta_nodes[i], grid.sphere.alpha_nodes[j]);
      for (int k = 0; k < grid.n_gamma(); ++k) out(grid.index(i, j, k)) = v;
    }
  }
  return out;
}

Eigen::MatrixXcd lift_spectrum(const Eigen::RowVectorXcd& f_l) {
  const int l = (static_cast<int>(f_l.size()) - 1) / 2;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2 * l + 1, 2 * l + 1);
  m.row(l) = f_l / (kFourPi * norm_const(l, 0));
  return m;
}

std::vector<Eigen::MatrixXcd> lift_spectrum(const Spectrum& f) {
  std::vector<Eigen::MatrixXcd> out(f.bandwidth());
  for (int l = 0; l < f.bandwidth(); ++l) out[l] = lift_spectrum(f[l]);
  return out;
}

std::vector<Eigen::MatrixXcd> so3_analyze_bruteforce(const So3Samples& f,
                                                     const So3Grid& grid) {
  const int L = grid.bandwidth;
  std::vector<Eigen::MatrixXcd> coeffs(L);
  for (int l = 0; l < L; ++l)
    coeffs[l] = Eigen::MatrixXcd::Zero(2 * l + 1, 2 * l + 1);
  for (int i = 0; i < grid.sphere.n_beta(); ++i) {
    for (int j = 0; j < grid.sphere.n_alpha(); ++j) {
      std::vector<Eigen::MatrixXcd> dmats =
          wigner_D_all(L, EulerAngles(grid.sphere.alpha_nodes[j],
                                      grid.sphere.beta_nodes[i], 0.0));
      for (int k = 0; k < grid.n_gamma(); ++k) {
        // gamma phases are diagonal; apply on the fly rather than
        // rebuilding D for every gamma node
        const double w0 = grid.haar_weight(i, j, k);
        const complexd v = f(grid.index(i, j, k));
        if (v == complexd(0.0, 0.0)) continue;
        for (int l = 0; l < L; ++l) {
          Eigen::MatrixXcd& c = coeffs[l];
          const Eigen::MatrixXcd& d = dmats[l];
          for (int n = -l; n <= l; ++n) {
            const complexd pg = std::polar(1.0, -n * grid.gamma_nodes[k]);
            // (w v) conj(D^{mn}) added to entry (n, m) of D^dagger sums
            for (int m = -l; m <= l; ++m)
              c(n + l, m + l) += w0 * v * std::conj(d(m + l, n + l) * pg);
          }
        }
      }
    }
  }
  return coeffs;
}

complexd so3_synthesize(const std::vector<Eigen::MatrixXcd>& coeffs,
                        const EulerAngles& e) {
  const int L = static_cast<int>(coeffs.size());
  const std::vector<Eigen::MatrixXcd> dmats = wigner_D_all(L, e);
  complexd acc = 0.0;
  for (int l = 0; l < L; ++l)
    acc += (2.0 * l + 1.0) * (coeffs[l] * dmats[l]).trace();
  return acc;
}

complexd so3_synthesize(const std::vector<Eigen::MatrixXcd>& coeffs,
                        const Rotation& r) {
  return so3_synthesize(coeffs, r.euler());
}

SampledField project_to_sphere(const So3Samples& g, const So3Grid& grid) {
  SampledField out{grid.sphere};
  for (int i = 0; i < grid.sphere.n_beta(); ++i) {
    for (int j = 0; j < grid.sphere.n_alpha(); ++j) {
      complexd acc = 0.0;
      for (int k = 0; k < grid.n_gamma(); ++k)
        acc += grid.gamma_weights[k] * g(grid.index(i, j, k));
      out.values(grid.sphere.index(i, j)) = acc / kTwoPi;
    }
  }
  return out;
}

So3Samples so3_convolve_bruteforce(const So3Samples& h, const So3Samples& f,
                                   const So3Grid& grid) {
  if (h.size() != static_cast<Eigen::Index>(grid.size()) || f.size() != h.size())
    throw std::invalid_argument("so3_convolve_bruteforce: samples do not match grid");
  // f needs evaluating at R^-1 V, which is off-grid; go through its
  // brute-force transform (exact for bandlimited f on this grid).
  const std::vector<Eigen::MatrixXcd> fc = so3_analyze_bruteforce(f, grid);

  So3Samples out(grid.size());
  std::vector<Rotation> rot(grid.size());
  std::vector<double> wt(grid.size());
  for (int i = 0; i < grid.sphere.n_beta(); ++i)
    for (int j = 0; j < grid.sphere.n_alpha(); ++j)
      for (int k = 0; k < grid.n_gamma(); ++k) {
        rot[grid.index(i, j, k)] = Rotation::from_euler(grid.node(i, j, k));
        wt[grid.index(i, j, k)] = grid.haar_weight(i, j, k);
      }

  for (std::size_t v = 0; v < grid.size(); ++v) {
    complexd acc = 0.0;
    const Rotation& rv = rot[v];
    for (std::size_t r = 0; r < grid.size(); ++r) {
      if (h(r) == complexd(0.0, 0.0)) continue;
      acc += wt[r] * h(r) * so3_synthesize(fc, rot[r].inverse() * rv);
    }
    out(v) = acc;
  }
  return out;
}

}  // namespace sphfir
