#ifndef SPHFIR_SPECTRUM_HPP
#define SPHFIR_SPECTRUM_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "sphfir/harmonics.hpp"

namespace sphfir {

/// Collection of harmonic row vectors F_l, l = 0..L-1, each 1x(2l+1) with
/// entries ordered m = -l..l. The real flag records that the underlying
/// function is real-valued (conjugate symmetry F_l^{-m} = (-1)^m conj(F_l^m)).
class Spectrum {
public:
  Spectrum() = default;
  explicit Spectrum(int bandwidth, bool real_valued = false);

  int bandwidth() const { return L_; }
  bool real_valued() const { return real_; }
  void set_real_valued(bool r) { real_ = r; }

  Eigen::RowVectorXcd& operator[](int l) { return rows_[l]; }
  const Eigen::RowVectorXcd& operator[](int l) const { return rows_[l]; }

  complexd coeff(int l, int m) const { return rows_[l](m + l); }
  void set_coeff(int l, int m, complexd v) { rows_[l](m + l) = v; }

  double degree_norm(int l) const { return rows_[l].norm(); }
  /// sum_l ||F_l||^2
  double total_energy() const;

  /// max_l,m |F - G| entrywise; bandwidths must match.
  double max_abs_diff(const Spectrum& other) const;

  bool conjugate_symmetric(double tol = 1e-10) const;
  /// true when entries at m != 0 are all below tol.
  bool axially_symmetric(double tol = 1e-10) const;

private:
  int L_ = 0;
  bool real_ = false;
  std::vector<Eigen::RowVectorXcd> rows_;
};

/// Q_l: the 1x(2l+1) selector with 1 at m = 0.
Eigen::RowVectorXcd center_selector(int l);

struct MagnitudePhase {
  double magnitude;
  Eigen::RowVectorXcd phase;  // unit norm; Q_l when the input is ~0
};

/// Split F into ||F|| and U = F/||F||. Vectors below 1e-14 map to
/// magnitude 0 and phase Q_l.
MagnitudePhase magnitude_phase(const Eigen::RowVectorXcd& f);

/// Spectrum of the bandlimited delta at the north pole: F_l = c_l^0 Q_l.
Spectrum delta_spectrum(int L);

/// Fisher-von Mises density kappa/(4pi sinh kappa) e^{kappa cos beta},
/// mean at the north pole. Coefficients are computed by direct quadrature
/// against Y_l^0 (the authoritative definition); they equal
/// c_l^0 I_{l+1/2}(kappa)/I_{1/2}(kappa), i.e. the plain Bessel ratio
/// carries an extra c_l^0 relative to the published series form. The ratio
/// itself is available separately as fvm_bessel_ratio.
Spectrum fisher_von_mises_spectrum(double kappa, int L);

/// I_{l+1/2}(kappa)/I_{1/2}(kappa), continued-fraction evaluation,
/// stable for kappa up to ~500 and l up to a few hundred.
double fvm_bessel_ratio(int l, double kappa);

/// Replace every F_l by ||F_l|| Q_l; synthesizes to the axially-symmetric
/// representative of the magnitude class.
Spectrum magnitude_only_spectrum(const Spectrum& f);

/// Magnitudes of f with phases of g: ||F_l|| U_l(G).
Spectrum phase_swap(const Spectrum& f, const Spectrum& g);

/// Degree-of-freedom split for functions with degrees l <= L (max degree,
/// inclusive). Real-valued: total (L+1)^2, magnitude L+1, phase L(L+1).
struct DofCounts {
  std::int64_t total;
  std::int64_t magnitude;
  std::int64_t phase;
  double percent_phase;  // 100 L/(L+1) in the real case
};
DofCounts dof_counts(int L, bool real_valued = true);

/// Deterministic pseudo-random spectrum (standard normal entries);
/// real_valued enforces conjugate symmetry.
Spectrum random_spectrum(int L, std::uint64_t seed, bool real_valued = false);

}  // namespace sphfir

#endif
