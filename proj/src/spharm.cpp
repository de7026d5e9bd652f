#include "sphfir/spharm.hpp"

#include <cmath>
#include <stdexcept>

namespace sphfir {

namespace {

bool same_grid(const SphereGrid& a, const SphereGrid& b) {
  return a.scheme == b.scheme && a.beta_nodes == b.beta_nodes &&
         a.alpha_nodes == b.alpha_nodes;
}

Spectrum analyze_one(const SampledField& f, int L, AnalysisMethod method) {
  return method == AnalysisMethod::Quadrature ? analyze_quadrature(f, L)
                                              : analyze_irf(f, L);
}

}  // namespace

Eigen::MatrixXcd SpharmSpectrum::block(int l) const {
  Eigen::MatrixXcd b(3, 2 * l + 1);
  b.row(0) = x[l];
  b.row(1) = y[l];
  b.row(2) = z[l];
  return b;
}

SpharmSpectrum spharm_analyze(const SampledField& fx, const SampledField& fy,
                              const SampledField& fz, int L, AnalysisMethod method) {
  if (!same_grid(fx.grid, fy.grid) || !same_grid(fx.grid, fz.grid))
    throw std::invalid_argument("spharm_analyze: coordinate fields on different grids");
  return {analyze_one(fx, L, method), analyze_one(fy, L, method),
          analyze_one(fz, L, method)};
}

SpharmSpectrum spharm_filter(const SpharmSpectrum& s, const TransferFunction& h) {
  if (h.bandwidth() < s.bandwidth())
    throw std::invalid_argument("spharm_filter: transfer bandwidth too small");
  return {apply(h, s.x), apply(h, s.y), apply(h, s.z)};
}

SurfaceSamples spharm_synthesize(const SpharmSpectrum& s, const SphereGrid& grid) {
  return {synthesize(s.x, grid), synthesize(s.y, grid), synthesize(s.z, grid)};
}

SurfaceSamples bumpy_sphere(const SphereGrid& grid, int L, std::uint64_t seed,
                            double amplitude) {
  // radius field r(u) = 1 + amplitude * g(u)/max|g| with g a random
  // real-valued bandlimited function
  Spectrum g = random_spectrum(L, seed, true);
  SampledField r = synthesize(g, grid);
  double peak = 0.0;
  for (Eigen::Index i = 0; i < r.values.size(); ++i)
    peak = std::max(peak, std::abs(r.values(i).real()));
  if (peak < 1e-30) peak = 1.0;

  SurfaceSamples s{SampledField{grid}, SampledField{grid}, SampledField{grid}};
  for (int i = 0; i < grid.n_beta(); ++i) {
    for (int j = 0; j < grid.n_alpha(); ++j) {
      const Eigen::Vector3d u = unit_vector(grid.alpha_nodes[j], grid.beta_nodes[i]);
      const double rad =
          1.0 + amplitude * r.values(grid.index(i, j)).real() / peak;
      s.x.values(grid.index(i, j)) = rad * u.x();
      s.y.values(grid.index(i, j)) = rad * u.y();
      s.z.values(grid.index(i, j)) = rad * u.z();
    }
  }
  s.x.real_hint = s.y.real_hint = s.z.real_hint = true;
  return s;
}

double radial_variance(const SurfaceSamples& s) {
  const SphereGrid& g = s.x.grid;
  double wsum = 0.0, mean = 0.0;
  std::vector<double> radius(g.size());
  for (int i = 0; i < g.n_beta(); ++i) {
    for (int j = 0; j < g.n_alpha(); ++j) {
      const std::size_t idx = g.index(i, j);
      const double r = std::sqrt(std::norm(s.x.values(idx)) + std::norm(s.y.values(idx)) +
                                 std::norm(s.z.values(idx)));
      radius[idx] = r;
      const double w = g.node_weight(i, j);
      wsum += w;
      mean += w * r;
    }
  }
  mean /= wsum;
  double var = 0.0;
  for (int i = 0; i < g.n_beta(); ++i)
    for (int j = 0; j < g.n_alpha(); ++j)
      var += g.node_weight(i, j) * (radius[g.index(i, j)] - mean) * (radius[g.index(i, j)] - mean);
  return var / wsum;
}

double surface_area(const SurfaceSamples& s) {
  const SphereGrid& g = s.x.grid;
  const int nb = g.n_beta();
  const int na = g.n_alpha();
  auto point = [&](int i, int j) {
    const std::size_t idx = g.index(i, j % na);
    return Eigen::Vector3d(s.x.values(idx).real(), s.y.values(idx).real(),
                           s.z.values(idx).real());
  };
  double area = 0.0;
  for (int i = 0; i + 1 < nb; ++i) {
    for (int j = 0; j < na; ++j) {
      // quad (i,j) (i,j+1) (i+1,j+1) (i+1,j), two triangles
      const Eigen::Vector3d a = point(i, j), b = point(i, j + 1);
      const Eigen::Vector3d c = point(i + 1, j + 1), d = point(i + 1, j);
      area += 0.5 * ((b - a).cross(c - a)).norm();
      area += 0.5 * ((c - a).cross(d - a)).norm();
    }
  }
  return area;
}

}  // namespace sphfir
