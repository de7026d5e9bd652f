#ifndef SPHFIR_TRANSFORM_HPP
#define SPHFIR_TRANSFORM_HPP

#include <vector>

#include <Eigen/Dense>

#include "sphfir/spectrum.hpp"
#include "sphfir/sphere.hpp"

namespace sphfir {

/// Function samples on a SphereGrid, stored row-major (beta rows).
struct SampledField {
  SphereGrid grid;
  Eigen::VectorXcd values;
  bool real_hint = false;  // set when the data came from a real source

  SampledField() = default;
  explicit SampledField(SphereGrid g)
      : grid(std::move(g)), values(Eigen::VectorXcd::Zero(grid.size())) {}

  complexd& at(int i, int j) { return values(grid.index(i, j)); }
  complexd at(int i, int j) const { return values(grid.index(i, j)); }

  /// Quadrature of |f|^2 over the grid.
  double energy() const;
};

/// f(u) = sum_{l<L} F_l Y_l(u) on every grid node.
SampledField synthesize(const Spectrum& f, const SphereGrid& grid);

/// Pointwise synthesis at an arbitrary direction.
complexd synth_at(const Spectrum& f, double beta, double alpha);
complexd synth_at(const Spectrum& f, const Eigen::Vector3d& u);

/// F_l^m = sum_i w_i f(u_i) conj(Y_l^m(u_i)). Throws when the grid cannot
/// integrate bandwidth-L products exactly.
Spectrum analyze_quadrature(const SampledField& f, int L);

/// Iterative residual fitting: for l = 0..L-1 solve the least-squares fit
/// of degree-l harmonics to the running residual, scale the fitted
/// component by window[l], subtract it, and accumulate. Empty window
/// means 1 for every degree. Needs at least (L+1)^2 nodes.
Spectrum analyze_irf(const SampledField& f, int L,
                     const std::vector<double>& window = {});

}  // namespace sphfir

#endif
