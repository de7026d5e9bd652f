#ifndef SPHFIR_SPHERE_HPP
#define SPHFIR_SPHERE_HPP

#include <Eigen/Dense>
#include <vector>

namespace sphfir {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kFourPi = 4.0 * kPi;

/// z-y-z Euler angles: alpha, gamma in [0, 2pi), beta in [0, pi].
/// alpha and gamma are wrapped mod 2pi on construction; beta outside
/// [0, pi] is rejected (wrapping would silently flip hemispheres).
struct EulerAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  EulerAngles() = default;
  EulerAngles(double a, double b, double g);
};

/// Proper rotation: 3x3 orthogonal matrix with determinant +1.
class Rotation {
public:
  Rotation() : m_(Eigen::Matrix3d::Identity()) {}
  /// Validates orthogonality; drift beyond 1e-12 is repaired by polar
  /// projection, anything worse than 1e-6 is rejected.
  explicit Rotation(const Eigen::Matrix3d& m);

  static Rotation identity() { return Rotation(); }
  static Rotation from_euler(const EulerAngles& e);

  const Eigen::Matrix3d& matrix() const { return m_; }
  Rotation inverse() const;
  Rotation transpose() const { return inverse(); }

  /// z-y-z Euler angles of this rotation; gimbal-locked cases
  /// (beta = 0 or pi) use the convention gamma = 0.
  EulerAngles euler() const;

  Eigen::Vector3d operator*(const Eigen::Vector3d& u) const { return m_ * u; }
  friend Rotation operator*(const Rotation& r, const Rotation& s);

private:
  Eigen::Matrix3d m_;
};

/// Composition r*s with re-orthonormalization when drift exceeds 1e-12.
Rotation compose(const Rotation& r, const Rotation& s);

inline Eigen::Vector3d north_pole() { return Eigen::Vector3d(0.0, 0.0, 1.0); }

/// Point on S^2 at colatitude beta, longitude alpha:
/// [cos(a) sin(b), sin(a) sin(b), cos(b)].
Eigen::Vector3d unit_vector(double alpha, double beta);

/// Inverse of unit_vector: (beta, alpha) of a unit vector, alpha in [0, 2pi).
struct SphereAngles {
  double beta;
  double alpha;
};
SphereAngles point_angles(const Eigen::Vector3d& u);

/// Product quadrature grid on the sphere. Weights include the sin(beta)
/// measure factor and sum to 4pi. Both schemes integrate products of
/// spherical harmonics exactly up to the grid's exact_bandwidth().
struct SphereGrid {
  enum class Scheme { GaussLegendre, Equiangular };

  Scheme scheme = Scheme::GaussLegendre;
  std::vector<double> beta_nodes;    // strictly increasing, north first
  std::vector<double> beta_weights;  // includes sin(beta) d(beta)
  std::vector<double> alpha_nodes;   // strictly increasing in [0, 2pi)
  std::vector<double> alpha_weights;

  int n_beta() const { return static_cast<int>(beta_nodes.size()); }
  int n_alpha() const { return static_cast<int>(alpha_nodes.size()); }
  std::size_t size() const { return beta_nodes.size() * alpha_nodes.size(); }
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * alpha_nodes.size() + j; }

  double node_weight(int i, int j) const { return beta_weights[i] * alpha_weights[j]; }
  double weight_sum() const;

  /// Largest L such that products Y_l^m (Y_p^n)* with l, p < L integrate
  /// exactly on this grid.
  int exact_bandwidth() const;
};

/// Grid sized for bandwidth-L work: n_beta = n_alpha = oversample*L.
/// Default Gauss-Legendre beta nodes make bandlimited quadrature exact.
SphereGrid make_grid(int L, int oversample = 2,
                     SphereGrid::Scheme scheme = SphereGrid::Scheme::GaussLegendre);

/// Pixel-center equiangular grid (PGM rasters: row 0 = north). Weights are
/// solved for polynomial exactness, so quadrature is exact for bandlimited
/// integrands of degree < n_beta.
SphereGrid make_equiangular_grid(int n_beta, int n_alpha);

/// Gauss-Legendre beta nodes with a uniform alpha grid of the given size.
SphereGrid make_gauss_legendre_grid(int n_beta, int n_alpha);

/// Gauss-Legendre nodes (increasing) and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace sphfir

#endif
