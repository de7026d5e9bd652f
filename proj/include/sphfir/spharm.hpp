#ifndef SPHFIR_SPHARM_HPP
#define SPHFIR_SPHARM_HPP

#include <cstdint>

#include "sphfir/filtering.hpp"
#include "sphfir/transform.hpp"

namespace sphfir {

/// Coordinate-wise spectrum of a genus-zero surface f: S^2 -> R^3.
/// Row l of the 3x(2l+1) coefficient matrix set is (x_l; y_l; z_l).
struct SpharmSpectrum {
  Spectrum x, y, z;

  int bandwidth() const { return x.bandwidth(); }
  /// The 3x(2l+1) block for degree l.
  Eigen::MatrixXcd block(int l) const;
};

enum class AnalysisMethod { Quadrature, Irf };

SpharmSpectrum spharm_analyze(const SampledField& fx, const SampledField& fy,
                              const SampledField& fz, int L,
                              AnalysisMethod method = AnalysisMethod::Quadrature);

/// Coordinate-wise filtering with one shared transfer function:
/// each 3x(2l+1) block multiplies H(l) on the right.
SpharmSpectrum spharm_filter(const SpharmSpectrum& s, const TransferFunction& h);

struct SurfaceSamples {
  SampledField x, y, z;
};

/// Per-row synthesis; real parts are what geometry export uses.
SurfaceSamples spharm_synthesize(const SpharmSpectrum& s, const SphereGrid& grid);

/// Unit sphere plus a seeded bandlimited radial perturbation; the stand-in
/// manifold for the smoothing experiments.
SurfaceSamples bumpy_sphere(const SphereGrid& grid, int L, std::uint64_t seed,
                            double amplitude = 0.15);

/// Variance of the radius ||p(u)|| over the grid (quadrature-weighted).
double radial_variance(const SurfaceSamples& s);

/// Total area of the triangulated quad mesh induced by the grid.
double surface_area(const SurfaceSamples& s);

}  // namespace sphfir

#endif
