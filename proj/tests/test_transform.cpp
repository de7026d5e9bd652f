#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "sphfir/filtering.hpp"
#include "sphfir/transform.hpp"

using namespace sphfir;

TEST_CASE("synthesize a pure DC spectrum") {
  Spectrum f(4, true);
  f.set_coeff(0, 0, 3.0);
  const SampledField s = synthesize(f, make_grid(4));
  for (int i = 0; i < s.grid.n_beta(); ++i)
    for (int j = 0; j < s.grid.n_alpha(); ++j)
      CHECK(std::abs(s.at(i, j) - 3.0 * 0.28209479177387814) < 1e-13);
}

TEST_CASE("synthesized delta peaks at the north pole") {
  const SphereGrid grid = make_grid(48, 2);
  const SampledField s = synthesize(delta_spectrum(48), grid);
  int argmax_i = -1, argmax_j = -1;
  double best = -1e300;
  for (int i = 0; i < grid.n_beta(); ++i)
    for (int j = 0; j < grid.n_alpha(); ++j)
      if (s.at(i, j).real() > best) {
        best = s.at(i, j).real();
        argmax_i = i;
        argmax_j = j;
      }
  CHECK(argmax_i == 0);  // beta node nearest the pole
  (void)argmax_j;
  // rotationally symmetric around the pole
  for (int i = 0; i < grid.n_beta(); ++i)
    for (int j = 0; j < grid.n_alpha(); ++j)
      CHECK(std::abs(s.at(i, j) - s.at(i, 0)) < 1e-8);
}

TEST_CASE("analyze constants and single harmonics") {
  const SphereGrid grid = make_grid(6, 2);
  SampledField ones{grid};
  ones.values.setConstant(1.0);
  ones.real_hint = true;
  const Spectrum f = analyze_quadrature(ones, 6);
  CHECK(std::abs(f.coeff(0, 0) - std::sqrt(kFourPi)) < 1e-9);
  for (int l = 1; l < 6; ++l)
    for (int m = -l; m <= l; ++m) CHECK(std::abs(f.coeff(l, m)) < 1e-9);

  SampledField y21{grid};
  for (int i = 0; i < grid.n_beta(); ++i)
    for (int j = 0; j < grid.n_alpha(); ++j)
      y21.at(i, j) = eval_Y(2, 1, grid.beta_nodes[i], grid.alpha_nodes[j]);
  const Spectrum g = analyze_quadrature(y21, 6);
  for (int l = 0; l < 6; ++l)
    for (int m = -l; m <= l; ++m) {
      const double expect = (l == 2 && m == 1) ? 1.0 : 0.0;
      CHECK(std::abs(g.coeff(l, m) - expect) < 1e-8);
    }
}

TEST_CASE("round trip analyze(synthesize(F)) = F") {
  const int L = 16;
  const Spectrum f = random_spectrum(L, 404, true);
  for (auto scheme : {SphereGrid::Scheme::GaussLegendre, SphereGrid::Scheme::Equiangular}) {
    const SphereGrid grid = make_grid(L, 2, scheme);
    const Spectrum back = analyze_quadrature(synthesize(f, grid), L);
    CHECK(f.max_abs_diff(back) < 1e-8);
  }
}

TEST_CASE("synth_at agrees with grid synthesis") {
  const Spectrum f = random_spectrum(8, 5);
  const SphereGrid grid = make_grid(8);
  const SampledField s = synthesize(f, grid);
  oracles::Uniform u(406);
  for (int t = 0; t < 20; ++t) {
    const int i = static_cast<int>(u() * grid.n_beta());
    const int j = static_cast<int>(u() * grid.n_alpha());
    CHECK(std::abs(s.at(i, j) - synth_at(f, grid.beta_nodes[i], grid.alpha_nodes[j])) < 1e-11);
  }
}

TEST_CASE("analysis of a rotated field is F D(R)") {
  const int L = 10;
  const SphereGrid grid = make_grid(L, 2);
  const Spectrum f = random_spectrum(L, 17, true);
  const EulerAngles e(2.2, 0.8, 5.1);
  const Rotation rot = Rotation::from_euler(e);
  SampledField g{grid};
  for (int i = 0; i < grid.n_beta(); ++i)
    for (int j = 0; j < grid.n_alpha(); ++j)
      g.at(i, j) = synth_at(f, rot * unit_vector(grid.alpha_nodes[j], grid.beta_nodes[i]));
  const Spectrum spatial = analyze_quadrature(g, L);
  CHECK(spatial.max_abs_diff(rotate_spectrum(f, e)) < 1e-8);
}

TEST_CASE("analyze_quadrature rejects undersampled grids") {
  SampledField f{make_grid(4, 2)};
  CHECK_THROWS_AS(analyze_quadrature(f, 16), std::invalid_argument);
}

TEST_CASE("parseval, linearity, realness") {
  const int L = 12;
  const SphereGrid grid = make_grid(L, 2);
  const Spectrum f = random_spectrum(L, 1001, true);
  const SampledField sf = synthesize(f, grid);
  CHECK(sf.energy() == doctest::Approx(f.total_energy()).epsilon(1e-6));

  const Spectrum g = random_spectrum(L, 1002, true);
  const SampledField sg = synthesize(g, grid);
  SampledField combo{grid};
  combo.values = 2.0 * sf.values - 0.5 * sg.values;
  const Spectrum ac = analyze_quadrature(combo, L);
  Spectrum expect(L);
  for (int l = 0; l < L; ++l) expect[l] = 2.0 * f[l] - 0.5 * g[l];
  CHECK(ac.max_abs_diff(expect) < 1e-10);

  SampledField real_field{grid};
  for (Eigen::Index k = 0; k < real_field.values.size(); ++k)
    real_field.values(k) = sf.values(k).real();
  real_field.real_hint = true;
  CHECK(analyze_quadrature(real_field, L).conjugate_symmetric(1e-10));
}

TEST_CASE("IRF keeps axial symmetry and m-decoupling") {
  const int L = 10;
  const SphereGrid grid = make_grid(L, 2);
  Spectrum axi(L, true);
  for (int l = 0; l < L; ++l) axi.set_coeff(l, 0, 1.0 / (1.0 + l));
  const Spectrum out = analyze_irf(synthesize(axi, grid), L);
  CHECK(out.axially_symmetric(1e-10));
  CHECK(out.conjugate_symmetric(1e-10));
}

TEST_CASE("IRF window scales the accumulated coefficients") {
  const int L = 6;
  const SphereGrid grid = make_grid(L, 2);
  const SampledField s = synthesize(random_spectrum(L, 2020, true), grid);
  const std::vector<double> zeros(L, 0.0);
  const Spectrum nothing = analyze_irf(s, L, zeros);
  for (int l = 0; l < L; ++l) CHECK(nothing.degree_norm(l) == 0.0);

  std::vector<double> damp_first(L, 1.0);
  damp_first[0] = 0.25;
  const Spectrum damped = analyze_irf(s, L, damp_first);
  const Spectrum plain = analyze_irf(s, L);
  CHECK(std::abs(damped.coeff(0, 0) - 0.25 * plain.coeff(0, 0)) < 1e-12);
}

TEST_CASE("IRF of a constant is pure l = 0") {
  const SphereGrid grid = make_grid(8, 2);
  SampledField ones{grid};
  ones.values.setConstant(1.0);
  ones.real_hint = true;
  const Spectrum f = analyze_irf(ones, 8);
  CHECK(std::abs(f.coeff(0, 0) - std::sqrt(kFourPi)) < 1e-9);
  for (int l = 1; l < 8; ++l)
    for (int m = -l; m <= l; ++m) CHECK(std::abs(f.coeff(l, m)) < 1e-9);
}

TEST_CASE("IRF suppresses Gibbs overshoot on a binary step") {
  const int L = 32;
  const SphereGrid grid = make_grid(L, 2);
  SampledField step{grid};
  for (int i = 0; i < grid.n_beta(); ++i)
    for (int j = 0; j < grid.n_alpha(); ++j)
      step.at(i, j) = grid.beta_nodes[i] < kPi / 2 ? 1.0 : 0.0;
  step.real_hint = true;

  const Spectrum quad = analyze_quadrature(step, L);
  const Spectrum irf = analyze_irf(step, L);

  // reconstruct on a fine grid and compare max overshoot above 1
  const SphereGrid fine = make_equiangular_grid(512, 4);
  const SampledField rq = synthesize(quad, fine);
  const SampledField ri = synthesize(irf, fine);
  double mq = -1e300, mi = -1e300;
  for (Eigen::Index k = 0; k < rq.values.size(); ++k) {
    mq = std::max(mq, rq.values(k).real());
    mi = std::max(mi, ri.values(k).real());
  }
  CHECK(mi - 1.0 < mq - 1.0);
  CHECK(mq > 1.0);  // quadrature really does ring
}

TEST_CASE("IRF input validation") {
  SampledField tiny{make_grid(2, 2)};
  CHECK_THROWS(analyze_irf(tiny, 8));
  SampledField f{make_grid(8, 2)};
  CHECK_THROWS_AS(analyze_irf(f, 8, std::vector<double>{1.0}), std::invalid_argument);
}
