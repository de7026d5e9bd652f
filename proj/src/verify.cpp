#include "sphfir/verify.hpp"

#include <cmath>
#include <cstdint>
#include <ostream>
#include <random>

#include "sphfir/filtering.hpp"
#include "sphfir/so3.hpp"
#include "sphfir/spectrum.hpp"
#include "sphfir/transform.hpp"
#include "sphfir/wigner.hpp"

namespace sphfir {

bool VerifyReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

void add(VerifyReport& rep, std::ostream* os, const std::string& name, double measured,
         double tol) {
  const bool pass = measured < tol;
  rep.checks.push_back({name, measured, tol, pass});
  if (os)
    *os << (pass ? "[PASS] " : "[FAIL] ") << name << "  err=" << measured
        << "  tol=" << tol << "\n";
}

double orthonormality_error(int max_degree) {
  const int L = max_degree + 1;
  const SphereGrid grid = make_grid(L, 2);
  const int nfun = L * L;
  Eigen::MatrixXcd b(grid.size(), nfun);
  Eigen::VectorXd w(grid.size());
  for (int i = 0; i < grid.n_beta(); ++i) {
    for (int j = 0; j < grid.n_alpha(); ++j) {
      const std::size_t row = grid.index(i, j);
      w(row) = grid.node_weight(i, j);
      int col = 0;
      for (int l = 0; l < L; ++l) {
        const Eigen::VectorXcd y =
            eval_Y_column(l, grid.beta_nodes[i], grid.alpha_nodes[j]);
        for (int m = 0; m < 2 * l + 1; ++m) b(row, col++) = y(m);
      }
    }
  }
  const Eigen::MatrixXcd gram = b.adjoint() * (w.asDiagonal() * b);
  return (gram - Eigen::MatrixXcd::Identity(nfun, nfun)).cwiseAbs().maxCoeff();
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

EulerAngles random_euler(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return EulerAngles(uniform01(rng) * kTwoPi, uniform01(rng) * kPi,
                     uniform01(rng) * kTwoPi);
}

double unitarity_error(int L, int n_rotations) {
  double worst = 0.0;
  for (int r = 0; r < n_rotations; ++r) {
    const std::vector<Eigen::MatrixXcd> d = wigner_D_all(L, random_euler(1000 + r));
    for (int l = 0; l < L; ++l) {
      const Eigen::MatrixXcd err =
          d[l] * d[l].adjoint() - Eigen::MatrixXcd::Identity(2 * l + 1, 2 * l + 1);
      worst = std::max(worst, err.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

double homomorphism_error(int L, int n_pairs) {
  double worst = 0.0;
  for (int r = 0; r < n_pairs; ++r) {
    const EulerAngles e1 = random_euler(2000 + 2 * r);
    const EulerAngles e2 = random_euler(2001 + 2 * r);
    const Rotation r1 = Rotation::from_euler(e1);
    const Rotation r2 = Rotation::from_euler(e2);
    const std::vector<Eigen::MatrixXcd> d1 = wigner_D_all(L, e1);
    const std::vector<Eigen::MatrixXcd> d2 = wigner_D_all(L, e2);
    const std::vector<Eigen::MatrixXcd> d12 = wigner_D_all_from_rotation(L, r1 * r2);
    for (int l = 0; l < L; ++l)
      worst = std::max(worst, (d1[l] * d2[l] - d12[l]).cwiseAbs().maxCoeff());
  }
  return worst;
}

double middle_column_error(int L) {
  double worst = 0.0;
  for (int r = 0; r < 8; ++r) {
    const EulerAngles e = random_euler(3000 + r);
    const std::vector<Eigen::MatrixXcd> d = wigner_D_all(L, EulerAngles(e.alpha, e.beta, 0.0));
    for (int l = 0; l < L; ++l) {
      const Eigen::VectorXcd y = eval_Y_column(l, e.beta, e.alpha);
      const Eigen::VectorXcd dcol = norm_const(l, 0) * d[l].col(l);
      worst = std::max(worst, (y - dcol).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

double rotation_theorem_error(int L) {
  const SphereGrid grid = make_grid(L, 2);
  const Spectrum f = random_spectrum(L, 42, true);
  double worst = 0.0;
  for (int r = 0; r < 3; ++r) {
    const EulerAngles e = random_euler(4000 + r);
    const Rotation rot = Rotation::from_euler(e);
    // spatial: sample u -> f(Ru), analyze
    SampledField g{grid};
    for (int i = 0; i < grid.n_beta(); ++i)
      for (int j = 0; j < grid.n_alpha(); ++j)
        g.values(grid.index(i, j)) = synth_at(
            f, rot * unit_vector(grid.alpha_nodes[j], grid.beta_nodes[i]));
    const Spectrum spatial = analyze_quadrature(g, L);
    const Spectrum spectral = rotate_spectrum(f, e);
    worst = std::max(worst, spatial.max_abs_diff(spectral));
  }
  return worst;
}

double axisym_equivalence_error(int L) {
  const Spectrum f = random_spectrum(L, 7);
  const Spectrum h = fisher_von_mises_spectrum(5.0, L);
  std::vector<complexd> h0(L);
  for (int l = 0; l < L; ++l) h0[l] = h.coeff(l, 0);
  const Spectrum via_left = left_convolve(f, h);
  const Spectrum via_transfer = apply(axisym_transfer(h0), f);
  return via_left.max_abs_diff(via_transfer);
}

double associativity_error(int L) {
  const Spectrum f = random_spectrum(L, 11);
  const TransferFunction h1 = five_point_lowpass(L);
  const TransferFunction h2 = fir_transfer(three_point_taps(0.2), L);
  const Spectrum a = apply(h2, apply(h1, f));
  const Spectrum b = apply(cascade(h1, h2), f);
  return a.max_abs_diff(b);
}

double magnitude_invariance_error(int L, int n_rotations) {
  double worst = 0.0;
  for (int r = 0; r < n_rotations; ++r) {
    const Spectrum f = random_spectrum(L, 5000 + r);
    const Spectrum g = rotate_spectrum(f, random_euler(6000 + r));
    for (int l = 0; l < L; ++l)
      worst = std::max(worst, std::abs(f.degree_norm(l) - g.degree_norm(l)));
  }
  return worst;
}

double element_norm_error(int L) {
  // int |D_l^{mn}|^2 dR = 1/(2l+1)
  const So3Grid grid = make_so3_grid(L);
  double worst = 0.0;
  for (int l = 0; l < L; ++l) {
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(2 * l + 1, 2 * l + 1);
    for (int i = 0; i < grid.sphere.n_beta(); ++i)
      for (int j = 0; j < grid.sphere.n_alpha(); ++j) {
        const Eigen::MatrixXcd d = wigner_D(
            l, EulerAngles(grid.sphere.alpha_nodes[j], grid.sphere.beta_nodes[i], 0.0));
        double wg = 0.0;
        for (int k = 0; k < grid.n_gamma(); ++k) wg += grid.haar_weight(i, j, k);
        acc += wg * d.cwiseAbs2();
      }
    worst = std::max(
        worst, (acc.array() - 1.0 / (2.0 * l + 1.0)).abs().maxCoeff());
  }
  return worst;
}

double theorem1_error(int L, int n_kernels) {
  const So3Grid grid = make_so3_grid(L);
  double worst = 0.0;
  for (int t = 0; t < n_kernels; ++t) {
    std::vector<FirTap> taps;
    const Spectrum r = random_spectrum(2, 7000 + t);
    taps.push_back({0.5, Rotation::identity()});
    taps.push_back({0.3, Rotation::from_euler(random_euler(7100 + t))});
    taps.push_back({0.2, Rotation::from_euler(random_euler(7200 + t))});
    const TransferFunction h = fir_transfer(taps, L);
    const Spectrum f = random_spectrum(L, 7300 + t);

    // spectral route
    const Spectrum g_spec = apply(h, f);

    // spatial route: synthesize the kernel from its transfer matrices,
    // lift f, convolve on SO(3), project, analyze
    std::vector<Eigen::MatrixXcd> hmats(L);
    for (int l = 0; l < L; ++l) hmats[l] = h[l];
    const So3Samples h_samp = sample_so3(
        [&](const EulerAngles& e) { return so3_synthesize(hmats, e); }, grid);
    const So3Samples f_samp = lift_samples(f, grid);
    const So3Samples conv = so3_convolve_bruteforce(h_samp, f_samp, grid);
    const SampledField proj = project_to_sphere(conv, grid);
    const Spectrum g_spat = analyze_quadrature(proj, L);
    worst = std::max(worst, g_spec.max_abs_diff(g_spat));
  }
  return worst;
}

double appendix_a_error(int L) {
  const So3Grid grid = make_so3_grid(L);
  const Spectrum f = random_spectrum(L, 81);
  const Spectrum h = random_spectrum(L, 82);
  const SphereGrid& s2 = grid.sphere;

  // g(R) = int f*(u) h(Ru) du on the SO(3) grid
  const SampledField fs = synthesize(f, s2);
  So3Samples g(grid.size());
  for (int i = 0; i < s2.n_beta(); ++i)
    for (int j = 0; j < s2.n_alpha(); ++j)
      for (int k = 0; k < grid.n_gamma(); ++k) {
        const Rotation rot = Rotation::from_euler(grid.node(i, j, k));
        complexd acc = 0.0;
        for (int ii = 0; ii < s2.n_beta(); ++ii)
          for (int jj = 0; jj < s2.n_alpha(); ++jj) {
            const Eigen::Vector3d u = unit_vector(s2.alpha_nodes[jj], s2.beta_nodes[ii]);
            acc += s2.node_weight(ii, jj) * std::conj(fs.values(s2.index(ii, jj))) *
                   synth_at(h, rot * u);
          }
        g(grid.index(i, j, k)) = acc;
      }

  const std::vector<Eigen::MatrixXcd> gc = so3_analyze_bruteforce(g, grid);
  const std::vector<Eigen::MatrixXcd> expected = rotation_convolve(f, h);
  double worst = 0.0;
  for (int l = 0; l < L; ++l)
    worst = std::max(worst, (gc[l] - expected[l]).cwiseAbs().maxCoeff());
  return worst;
}

double appendix_b_error(int L) {
  const So3Grid grid = make_so3_grid(L);
  // bandlimited random SO(3) functions via synthesis from random coefficients
  auto random_so3 = [L](std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Eigen::MatrixXcd> c(L);
    for (int l = 0; l < L; ++l) {
      c[l] = Eigen::MatrixXcd(2 * l + 1, 2 * l + 1);
      for (int m = 0; m < 2 * l + 1; ++m)
        for (int n = 0; n < 2 * l + 1; ++n)
          c[l](m, n) = complexd(2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0);
    }
    return c;
  };
  const std::vector<Eigen::MatrixXcd> hc = random_so3(91);
  const std::vector<Eigen::MatrixXcd> fc = random_so3(92);
  const So3Samples h = sample_so3(
      [&](const EulerAngles& e) { return so3_synthesize(hc, e); }, grid);
  const So3Samples f = sample_so3(
      [&](const EulerAngles& e) { return so3_synthesize(fc, e); }, grid);

  const So3Samples conv = so3_convolve_bruteforce(h, f, grid);
  const std::vector<Eigen::MatrixXcd> gc = so3_analyze_bruteforce(conv, grid);
  const std::vector<Eigen::MatrixXcd> fa = so3_analyze_bruteforce(f, grid);
  const std::vector<Eigen::MatrixXcd> ha = so3_analyze_bruteforce(h, grid);
  double worst = 0.0;
  for (int l = 0; l < L; ++l)
    worst = std::max(worst, (gc[l] - fa[l] * ha[l]).cwiseAbs().maxCoeff());
  return worst;
}

}  // namespace

VerifyReport run_verify(VerifyLevel level, std::ostream* progress) {
  VerifyReport rep;
  add(rep, progress, "orthonormality l,p<=12", orthonormality_error(12), 1e-8);
  add(rep, progress, "wigner unitarity l<16", unitarity_error(16, 10), 1e-9);
  add(rep, progress, "wigner homomorphism l<16", homomorphism_error(16, 10), 1e-9);
  add(rep, progress, "harmonics = middle D column", middle_column_error(12), 1e-10);
  add(rep, progress, "rotation theorem L=8", rotation_theorem_error(8), 1e-8);
  add(rep, progress, "left conv = axisym transfer L=16", axisym_equivalence_error(16), 1e-12);
  add(rep, progress, "cascade associativity L=16", associativity_error(16), 1e-10);
  add(rep, progress, "magnitude rotation-invariance", magnitude_invariance_error(12, 50), 1e-10);
  if (level == VerifyLevel::Full) {
    add(rep, progress, "orthonormality l,p<=24", orthonormality_error(24), 1e-8);
    add(rep, progress, "D element norm L=4", element_norm_error(4), 1e-6);
    add(rep, progress, "theorem 1 product form L=4", theorem1_error(4, 2), 1e-4);
    add(rep, progress, "appendix A outer product L=4", appendix_a_error(4), 1e-4);
    add(rep, progress, "appendix B so3 convolution L=4", appendix_b_error(4), 1e-4);
  }
  return rep;
}

}  // namespace sphfir
