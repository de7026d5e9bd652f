#include "sphfir/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sphfir {

namespace {

double wrap_two_pi(double a) {
  double w = std::fmod(a, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  // fmod can return 2pi after the correction when a is a tiny negative
  if (w >= kTwoPi) w -= kTwoPi;
  return w;
}

}  // namespace

EulerAngles::EulerAngles(double a, double b, double g) {
  constexpr double snap = 1e-12;
  if (b < 0.0) {
    if (b < -snap) throw std::domain_error("EulerAngles: beta outside [0, pi]");
    b = 0.0;
  }
  if (b > kPi) {
    if (b > kPi + snap) throw std::domain_error("EulerAngles: beta outside [0, pi]");
    b = kPi;
  }
  alpha = wrap_two_pi(a);
  beta = b;
  gamma = wrap_two_pi(g);
}

Rotation::Rotation(const Eigen::Matrix3d& m) : m_(m) {
  const double drift = (m_ * m_.transpose() - Eigen::Matrix3d::Identity())
                           .cwiseAbs()
                           .maxCoeff();
  if (drift > 1e-6 || m_.determinant() < 0.0)
    throw std::invalid_argument("Rotation: matrix is not a proper rotation");
  if (drift > 1e-12) {
    // polar projection onto SO(3)
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(m_, Eigen::ComputeFullU | Eigen::ComputeFullV);
    m_ = svd.matrixU() * svd.matrixV().transpose();
  }
}

Rotation Rotation::from_euler(const EulerAngles& e) {
  const double ca = std::cos(e.alpha), sa = std::sin(e.alpha);
  const double cb = std::cos(e.beta), sb = std::sin(e.beta);
  const double cg = std::cos(e.gamma), sg = std::sin(e.gamma);
  Eigen::Matrix3d m;
  // R_z(alpha) R_y(beta) R_z(gamma)
  m << ca * cb * cg - sa * sg, -ca * cb * sg - sa * cg, ca * sb,
       sa * cb * cg + ca * sg, -sa * cb * sg + ca * cg, sa * sb,
       -sb * cg,               sb * sg,                 cb;
  Rotation r;
  r.m_ = m;
  return r;
}

Rotation Rotation::inverse() const {
  Rotation r;
  r.m_ = m_.transpose();
  return r;
}

EulerAngles Rotation::euler() const {
  const double cb = std::clamp(m_(2, 2), -1.0, 1.0);
  const double sb = std::hypot(m_(0, 2), m_(1, 2));
  if (sb > 1e-12) {
    const double alpha = std::atan2(m_(1, 2), m_(0, 2));
    const double gamma = std::atan2(m_(2, 1), -m_(2, 0));
    return EulerAngles(alpha, std::atan2(sb, cb), gamma);
  }
  // gimbal lock: pick gamma = 0
  if (cb > 0.0)
    return EulerAngles(std::atan2(m_(1, 0), m_(0, 0)), 0.0, 0.0);
  return EulerAngles(std::atan2(-m_(0, 1), m_(1, 1)), kPi, 0.0);
}

Rotation operator*(const Rotation& r, const Rotation& s) {
  return Rotation(Eigen::Matrix3d(r.m_ * s.m_));
}

Rotation compose(const Rotation& r, const Rotation& s) { return r * s; }

Eigen::Vector3d unit_vector(double alpha, double beta) {
  if (beta < -1e-12 || beta > kPi + 1e-12)
    throw std::domain_error("unit_vector: beta outside [0, pi]");
  return Eigen::Vector3d(std::cos(alpha) * std::sin(beta),
                         std::sin(alpha) * std::sin(beta), std::cos(beta));
}

SphereAngles point_angles(const Eigen::Vector3d& u) {
  const double beta = std::atan2(std::hypot(u.x(), u.y()), u.z());
  double alpha = std::atan2(u.y(), u.x());
  if (alpha < 0.0) alpha += kTwoPi;
  return {beta, alpha};
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton on P_n starting from the Chebyshev-based estimate
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2 * j + 1) * z * p2 - j * p3) / (j + 1);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    nodes[i] = -z;
    nodes[n - 1 - i] = z;
    weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    weights[n - 1 - i] = weights[i];
  }
}

double SphereGrid::weight_sum() const {
  double wb = 0.0, wa = 0.0;
  for (double w : beta_weights) wb += w;
  for (double w : alpha_weights) wa += w;
  return wb * wa;
}

int SphereGrid::exact_bandwidth() const {
  // beta: Gauss-Legendre with n nodes is exact to polynomial degree 2n-1;
  // the solved equiangular weights reach degree n-1. Surviving alpha pairs
  // need |m - n| < n_alpha.
  const int lb = scheme == Scheme::GaussLegendre ? n_beta() : (n_beta() + 1) / 2;
  const int la = (n_alpha() + 1) / 2;
  return std::min(lb, la);
}

namespace {

// Quadrature weights at prescribed x nodes, exact for Legendre degrees
// < n: solve sum_i w_i P_k(x_i) = 2 delta_{k0}. For cos of uniform angles
// the nodes are Chebyshev-like, so the system is well conditioned and the
// weights stay positive.
std::vector<double> solve_node_weights(const std::vector<double>& x) {
  const int n = static_cast<int>(x.size());
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    double p0 = 1.0, p1 = x[i];
    a(0, i) = 1.0;
    if (n > 1) a(1, i) = p1;
    for (int k = 2; k < n; ++k) {
      const double p = ((2 * k - 1) * x[i] * p1 - (k - 1) * p0) / k;
      a(k, i) = p;
      p0 = p1;
      p1 = p;
    }
  }
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  b(0) = 2.0;
  Eigen::VectorXd w = a.partialPivLu().solve(b);
  return std::vector<double>(w.data(), w.data() + n);
}

}  // namespace

SphereGrid make_grid(int L, int oversample, SphereGrid::Scheme scheme) {
  if (L < 1) throw std::domain_error("make_grid: bandwidth must be >= 1");
  if (oversample < 2) throw std::domain_error("make_grid: oversample must be >= 2");
  const int n = oversample * L;
  if (scheme == SphereGrid::Scheme::Equiangular) return make_equiangular_grid(n, n);
  return make_gauss_legendre_grid(n, n);
}

SphereGrid make_gauss_legendre_grid(int n_beta, int n_alpha) {
  if (n_beta < 1 || n_alpha < 1)
    throw std::domain_error("make_gauss_legendre_grid: counts must be positive");
  SphereGrid g;
  g.scheme = SphereGrid::Scheme::GaussLegendre;
  std::vector<double> x, w;
  gauss_legendre(n_beta, x, w);
  g.beta_nodes.resize(n_beta);
  g.beta_weights.resize(n_beta);
  for (int i = 0; i < n_beta; ++i) {
    g.beta_nodes[i] = std::acos(x[n_beta - 1 - i]);  // increasing beta
    g.beta_weights[i] = w[n_beta - 1 - i];
  }
  g.alpha_nodes.resize(n_alpha);
  g.alpha_weights.assign(n_alpha, kTwoPi / n_alpha);
  for (int j = 0; j < n_alpha; ++j) g.alpha_nodes[j] = kTwoPi * j / n_alpha;
  return g;
}

SphereGrid make_equiangular_grid(int n_beta, int n_alpha) {
  if (n_beta < 1 || n_alpha < 1)
    throw std::domain_error("make_equiangular_grid: counts must be positive");
  SphereGrid g;
  g.scheme = SphereGrid::Scheme::Equiangular;
  g.beta_nodes.resize(n_beta);
  std::vector<double> x(n_beta);
  for (int i = 0; i < n_beta; ++i) {
    g.beta_nodes[i] = kPi * (i + 0.5) / n_beta;
    x[i] = std::cos(g.beta_nodes[i]);
  }
  g.beta_weights = solve_node_weights(x);
  g.alpha_nodes.resize(n_alpha);
  g.alpha_weights.assign(n_alpha, kTwoPi / n_alpha);
  for (int j = 0; j < n_alpha; ++j) g.alpha_nodes[j] = kTwoPi * (j + 0.5) / n_alpha;
  return g;
}

}  // namespace sphfir
