#ifndef SPHFIR_IO_HPP
#define SPHFIR_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "sphfir/filtering.hpp"
#include "sphfir/spharm.hpp"
#include "sphfir/spectrum.hpp"
#include "sphfir/transform.hpp"

namespace sphfir {

// Text formats. All floats are written with 17 significant digits so
// write/read round trips are bit-exact.

/// Coefficient file: `#sph-coeff v1 L=<L> real=<0|1>` then `l,m,re,im`.
void write_coefficients(std::ostream& os, const Spectrum& f);
void write_coefficients(const std::string& path, const Spectrum& f);
Spectrum read_coefficients(std::istream& is);
Spectrum read_coefficients(const std::string& path);

/// Field file: `#sph-grid v1 n_beta=<n> n_alpha=<n> scheme=<name>` then one
/// CSV beta-row per line (plain values when real, re,im pairs otherwise).
void write_field(std::ostream& os, const SampledField& f);
void write_field(const std::string& path, const SampledField& f);
SampledField read_field(std::istream& is);
SampledField read_field(const std::string& path);

/// Grid file: header `#sph-gridspec v1 n_beta=<n> n_alpha=<n> scheme=<name>`
/// then `beta,<i>,<node>,<weight>` and `alpha,<j>,<node>,<weight>` rows.
void write_grid(std::ostream& os, const SphereGrid& g);
void write_grid(const std::string& path, const SphereGrid& g);
SphereGrid read_grid(std::istream& is);

/// Transfer file: `#sph-transfer v1 L=<L>` then `l,m,n,re,im`.
void write_transfer(std::ostream& os, const TransferFunction& h);
void write_transfer(const std::string& path, const TransferFunction& h);
TransferFunction read_transfer(std::istream& is);
TransferFunction read_transfer(const std::string& path);

/// Taps file: `#sph-taps v1 N=<n>` then `re,im,alpha,beta,gamma` per tap.
void write_taps(std::ostream& os, const std::vector<FirTap>& taps);
std::vector<FirTap> read_taps(std::istream& is);
std::vector<FirTap> read_taps(const std::string& path);

/// Frequency-response CSV: `l,norm` lines.
void write_freqresp(std::ostream& os, const std::vector<double>& norms);
void write_freqresp(const std::string& path, const std::vector<double>& norms);

/// 8-bit PGM (P5 or P2) as equiangular samples, row 0 = north, values
/// scaled to [0, 1]. real_hint is set on the result.
SampledField read_pgm(const std::string& path);

/// Grayscale export with min-max normalization (fixed range optional).
/// Degenerate constant fields render mid-gray.
struct RenderOptions {
  bool fixed_range = false;
  double lo = 0.0, hi = 1.0;
};
void write_pgm(const std::string& path, const SampledField& f,
               const RenderOptions& opts = {});
/// Minimal PNG writer (grayscale 8-bit, stored deflate blocks).
void write_png(const std::string& path, const SampledField& f,
               const RenderOptions& opts = {});

/// Wavefront OBJ of the quad grid triangulated, with wrap-around in alpha.
void write_obj(const std::string& path, const SurfaceSamples& s);

}  // namespace sphfir

#endif
