#pragma once

// Vectors of R^{n,1} with <x,y> = -x0 y0 + x1 y1 + ... + xn yn.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "exthyp/branch.hpp"

namespace exthyp {

/// Coordinates (x0, x1, ..., xn) of a vector in R^{n,1}, n >= 1.
class MinkowskiVector {
 public:
  MinkowskiVector(std::initializer_list<double> coords)
      : coords_(Eigen::Map<const Eigen::VectorXd>(coords.begin(), static_cast<Eigen::Index>(coords.size()))) {
    validate();
  }

  explicit MinkowskiVector(Eigen::VectorXd coords) : coords_(std::move(coords)) { validate(); }

  explicit MinkowskiVector(std::span<const double> coords)
      : coords_(Eigen::Map<const Eigen::VectorXd>(coords.data(), static_cast<Eigen::Index>(coords.size()))) {
    validate();
  }

  static MinkowskiVector basis(std::size_t n, std::size_t axis) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n + 1));
    e(static_cast<Eigen::Index>(axis)) = 1.0;
    return MinkowskiVector(std::move(e));
  }

  /// n, the spatial dimension; the vector has n + 1 coordinates.
  std::size_t dimension() const { return static_cast<std::size_t>(coords_.size()) - 1; }
  std::size_t size() const { return static_cast<std::size_t>(coords_.size()); }

  double operator[](std::size_t i) const { return coords_(static_cast<Eigen::Index>(i)); }
  const Eigen::VectorXd& coords() const { return coords_; }
  std::vector<double> to_vector() const { return {coords_.data(), coords_.data() + coords_.size()}; }

  double euclidean_norm_sq() const { return coords_.squaredNorm(); }
  double euclidean_norm() const { return coords_.norm(); }

  MinkowskiVector operator-() const { return MinkowskiVector(Eigen::VectorXd(-coords_)); }
  friend MinkowskiVector operator+(const MinkowskiVector& a, const MinkowskiVector& b) {
    a.require_same(b);
    return MinkowskiVector(Eigen::VectorXd(a.coords_ + b.coords_));
  }
  friend MinkowskiVector operator-(const MinkowskiVector& a, const MinkowskiVector& b) {
    a.require_same(b);
    return MinkowskiVector(Eigen::VectorXd(a.coords_ - b.coords_));
  }
  friend MinkowskiVector operator*(double s, const MinkowskiVector& a) {
    return MinkowskiVector(Eigen::VectorXd(s * a.coords_));
  }
  friend MinkowskiVector operator*(const MinkowskiVector& a, double s) { return s * a; }

  void require_same(const MinkowskiVector& other) const {
    if (other.coords_.size() != coords_.size()) {
      throw DimensionError("dimension mismatch: R^{" + std::to_string(dimension()) + ",1} vs R^{" +
                           std::to_string(other.dimension()) + ",1}");
    }
  }

 private:
  void validate() const {
    if (coords_.size() < 2) throw DimensionError("MinkowskiVector needs at least 2 coordinates");
    if (!coords_.allFinite()) throw GeometryError("MinkowskiVector coordinates must be finite");
  }

  Eigen::VectorXd coords_;
};

inline double inner_product(const MinkowskiVector& x, const MinkowskiVector& y) {
  x.require_same(y);
  const auto& a = x.coords();
  const auto& b = y.coords();
  return -a(0) * b(0) + a.tail(a.size() - 1).dot(b.tail(b.size() - 1));
}

inline double norm_sq(const MinkowskiVector& x) { return inner_product(x, x); }

// ---------------------------------------------------------------------------
// Causal classification

enum class CausalKind { Timelike, Spacelike, Lightlike };
enum class Sheet { Upper, Lower, None };

struct CausalClass {
  CausalKind kind;
  Sheet sheet = Sheet::None;  // set for timelike vectors only

  bool timelike() const { return kind == CausalKind::Timelike; }
  bool spacelike() const { return kind == CausalKind::Spacelike; }
  bool lightlike() const { return kind == CausalKind::Lightlike; }
  friend bool operator==(const CausalClass&, const CausalClass&) = default;
};

inline const char* to_string(CausalKind k) {
  switch (k) {
    case CausalKind::Timelike: return "timelike";
    case CausalKind::Spacelike: return "spacelike";
    case CausalKind::Lightlike: return "lightlike";
  }
  return "?";
}

/// Width of the lightlike band around the cone for x.
inline double classification_tolerance(const MinkowskiVector& x) {
  return 1e-9 * std::max(1.0, x.euclidean_norm_sq());
}

inline CausalClass causal_class(const MinkowskiVector& x, std::optional<double> tau = std::nullopt) {
  const double t = tau.value_or(classification_tolerance(x));
  if (t < 0.0) throw std::invalid_argument("causal_class: tolerance must be >= 0");
  if (x.euclidean_norm_sq() == 0.0) throw GeometryError("causal_class: zero vector");
  const double q = norm_sq(x);
  if (q < -t) return {CausalKind::Timelike, x[0] > 0.0 ? Sheet::Upper : Sheet::Lower};
  if (q > t) return {CausalKind::Spacelike, Sheet::None};
  return {CausalKind::Lightlike, Sheet::None};
}

/// ||x|| = <x,x>^{1/2}: positive for spacelike, 0 for lightlike, positive
/// imaginary for timelike.
inline Complex lorentz_norm(const MinkowskiVector& x) {
  if (causal_class(x).lightlike()) return {0.0, 0.0};
  return sqrt_conv(norm_sq(x));
}

/// |||x|||, the modulus of the Lorentz norm.
inline double abs_norm(const MinkowskiVector& x) { return std::sqrt(std::abs(norm_sq(x))); }

// ---------------------------------------------------------------------------
// Norms of tangent vectors on the two sphere models

enum class Model { HyperbolicSphere, SphericalSphere };

inline const char* to_string(Model m) { return m == Model::HyperbolicSphere ? "H" : "S"; }

/// Norm of a tangent vector x_p at a non-ideal point p.
///
/// On the hyperbolic sphere: positive real on the hyperbolic part; on the
/// Lorentzian part negative real (timelike), 0 (lightlike) or positive
/// imaginary (spacelike). On the spherical sphere everything is divided by i,
/// so i * ||x||_S = ||x||_H always.
inline Complex model_norm(const MinkowskiVector& x_p, const MinkowskiVector& p, Model model) {
  const CausalClass base = causal_class(p);
  if (base.lightlike()) throw GeometryError("model_norm: base point is ideal");
  const double scale = std::sqrt(x_p.euclidean_norm_sq() * p.euclidean_norm_sq());
  if (std::abs(inner_product(x_p, p)) > 1e-9 * std::max(1.0, scale)) {
    throw GeometryError("model_norm: vector is not tangent at p");
  }
  const double m = abs_norm(x_p);
  Complex h;
  if (base.timelike()) {
    h = {m, 0.0};
  } else {
    switch (causal_class(x_p).kind) {
      case CausalKind::Timelike: h = {-m, 0.0}; break;
      case CausalKind::Lightlike: h = {0.0, 0.0}; break;
      case CausalKind::Spacelike: h = {0.0, m}; break;
    }
  }
  return model == Model::HyperbolicSphere ? h : -kI * h;
}

// ---------------------------------------------------------------------------
// Isometries

/// Element of O(n,1): M^T S M = S with S = diag(-1, 1, ..., 1).
class LorentzIsometry {
 public:
  explicit LorentzIsometry(Eigen::MatrixXd m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() < 2) throw DimensionError("LorentzIsometry: matrix must be square, size >= 2");
    const Eigen::MatrixXd s = metric(m_.rows());
    const double defect = (m_.transpose() * s * m_ - s).cwiseAbs().maxCoeff();
    // Entries of a boost grow like cosh(rapidity); the defect is measured
    // relative to the squared entry scale.
    const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff() * m_.cwiseAbs().maxCoeff());
    if (!(defect < 1e-12 * scale)) throw GeometryError("LorentzIsometry: matrix does not preserve the form");
  }

  static Eigen::MatrixXd metric(Eigen::Index size) {
    Eigen::MatrixXd s = Eigen::MatrixXd::Identity(size, size);
    s(0, 0) = -1.0;
    return s;
  }

  static LorentzIsometry identity(std::size_t n) {
    return LorentzIsometry(Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n + 1), static_cast<Eigen::Index>(n + 1)));
  }

  /// Boost mixing x0 with x_axis (axis >= 1): (1,0) -> (cosh r, sinh r).
  static LorentzIsometry boost(std::size_t n, std::size_t axis, double rapidity) {
    if (axis < 1 || axis > n) throw std::invalid_argument("boost: axis must be in [1, n]");
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n + 1), static_cast<Eigen::Index>(n + 1));
    const auto a = static_cast<Eigen::Index>(axis);
    m(0, 0) = m(a, a) = std::cosh(rapidity);
    m(0, a) = m(a, 0) = std::sinh(rapidity);
    return LorentzIsometry(std::move(m));
  }

  /// Rotation in the (x_i, x_j) plane, i, j >= 1: e_i -> cos t e_i + sin t e_j.
  static LorentzIsometry rotation(std::size_t n, std::size_t i, std::size_t j, double angle) {
    if (i < 1 || j < 1 || i > n || j > n || i == j) throw std::invalid_argument("rotation: bad axes");
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n + 1), static_cast<Eigen::Index>(n + 1));
    const auto a = static_cast<Eigen::Index>(i);
    const auto b = static_cast<Eigen::Index>(j);
    m(a, a) = m(b, b) = std::cos(angle);
    m(b, a) = std::sin(angle);
    m(a, b) = -std::sin(angle);
    return LorentzIsometry(std::move(m));
  }

  std::size_t dimension() const { return static_cast<std::size_t>(m_.rows()) - 1; }
  const Eigen::MatrixXd& matrix() const { return m_; }

  LorentzIsometry inverse() const {
    const Eigen::MatrixXd s = metric(m_.rows());
    return LorentzIsometry(Eigen::MatrixXd(s * m_.transpose() * s));
  }

  friend LorentzIsometry operator*(const LorentzIsometry& a, const LorentzIsometry& b) {
    if (a.m_.rows() != b.m_.rows()) throw DimensionError("LorentzIsometry: dimension mismatch");
    return LorentzIsometry(Eigen::MatrixXd(a.m_ * b.m_));
  }

 private:
  Eigen::MatrixXd m_;
};

inline MinkowskiVector apply_isometry(const LorentzIsometry& g, const MinkowskiVector& x) {
  if (g.dimension() != x.dimension()) throw DimensionError("apply_isometry: dimension mismatch");
  return MinkowskiVector(Eigen::VectorXd(g.matrix() * x.coords()));
}

/// Component of q Lorentz-orthogonal to p. The geodesic leaving p in this
/// direction reaches q before it reaches -p.
inline MinkowskiVector tangent_toward(const MinkowskiVector& p, const MinkowskiVector& q) {
  p.require_same(q);
  if (causal_class(p).lightlike()) throw GeometryError("tangent_toward: base point is lightlike");
  const MinkowskiVector u = q - (inner_product(q, p) / norm_sq(p)) * p;
  if (u.euclidean_norm() <= 1e-12 * std::max(1.0, q.euclidean_norm())) {
    throw GeometryError("tangent_toward: q is proportional to p");
  }
  return u;
}

}  // namespace exthyp
