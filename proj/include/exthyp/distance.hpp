#pragma once

// Extended distance d_H on the sphere model, with its signed case table, and
// the angles and duals built from it.

#include <array>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "exthyp/branch.hpp"
#include "exthyp/lorentz.hpp"

namespace exthyp {

enum class DistanceCase {
  BothLightlike = 1,
  OneLightlike = 2,
  BothTimelike = 3,
  TimelikeSpacelike = 4,
  SpacelikeElliptic = 5,   // span{x,y} spacelike: the geodesic misses the hyperbolic discs
  SpacelikeSecant = 6,     // span{x,y} timelike: the geodesic crosses the hyperbolic discs
  SpacelikeTangent = 7,    // span{x,y} degenerate: the geodesic touches the ideal boundary
};

inline const char* to_string(DistanceCase c) {
  switch (c) {
    case DistanceCase::BothLightlike: return "lightlike-lightlike";
    case DistanceCase::OneLightlike: return "lightlike-other";
    case DistanceCase::BothTimelike: return "timelike-timelike";
    case DistanceCase::TimelikeSpacelike: return "timelike-spacelike";
    case DistanceCase::SpacelikeElliptic: return "spacelike-elliptic";
    case DistanceCase::SpacelikeSecant: return "spacelike-secant";
    case DistanceCase::SpacelikeTangent: return "spacelike-tangent";
  }
  return "?";
}

/// A d_H value: finite complex (Im in [0, pi]) or infinite.
struct ExtDistance {
  Complex value{0.0, 0.0};
  bool infinite = false;
  DistanceCase kase = DistanceCase::BothTimelike;

  bool finite() const { return !infinite; }

  Complex get() const {
    if (infinite) throw GeometryError("distance is infinite");
    return value;
  }
};

/// Relative width of the band in which D = <x,y>^2 - <x,x><y,y> and the
/// orthogonality tests count as zero.
inline constexpr double kDegeneracyTolerance = 1e-9;

/// d_H(x, y), defined so that <x,y> = ||x|| ||y|| cosh d_H(x,y) with the
/// branch fixed case by case.
inline ExtDistance extended_distance(const MinkowskiVector& x, const MinkowskiVector& y) {
  x.require_same(y);
  const CausalClass cx = causal_class(x);
  const CausalClass cy = causal_class(y);
  const double q = inner_product(x, y);
  const double nx = norm_sq(x);
  const double ny = norm_sq(y);
  const double euclid = x.euclidean_norm() * y.euclidean_norm();
  const Complex half_pi_i{0.0, kPi / 2.0};
  const Complex pi_i{0.0, kPi};

  if (cx.lightlike() && cy.lightlike()) {
    if (std::abs(q) <= kDegeneracyTolerance * euclid) {
      const bool same_ray = x.coords().dot(y.coords()) > 0.0;
      return {same_ray ? Complex(0.0, 0.0) : pi_i, false, DistanceCase::BothLightlike};
    }
    return {{}, true, DistanceCase::BothLightlike};
  }
  if (cx.lightlike() || cy.lightlike()) {
    if (std::abs(q) <= kDegeneracyTolerance * euclid) return {half_pi_i, false, DistanceCase::OneLightlike};
    return {{}, true, DistanceCase::OneLightlike};
  }

  const double scale = std::sqrt(std::abs(nx * ny));
  if (cx.timelike() && cy.timelike()) {
    const double r = std::acosh(std::max(1.0, std::abs(q) / scale));
    return {q < 0.0 ? Complex(r, 0.0) : pi_i - r, false, DistanceCase::BothTimelike};
  }
  if (cx.timelike() != cy.timelike()) {
    return {half_pi_i + std::asinh(-q / scale), false, DistanceCase::TimelikeSpacelike};
  }

  const double d = q * q - nx * ny;
  if (std::abs(d) <= kDegeneracyTolerance * nx * ny) {
    return {q > 0.0 ? Complex(0.0, 0.0) : pi_i, false, DistanceCase::SpacelikeTangent};
  }
  if (d < 0.0) {
    const double c = std::clamp(q / scale, -1.0, 1.0);
    return {Complex(0.0, std::acos(c)), false, DistanceCase::SpacelikeElliptic};
  }
  const double r = std::acosh(std::max(1.0, std::abs(q) / scale));
  return {q > 0.0 ? Complex(-r, 0.0) : pi_i + r, false, DistanceCase::SpacelikeSecant};
}

/// d_S = -i d_H.
inline ExtDistance spherical_distance(const MinkowskiVector& x, const MinkowskiVector& y) {
  ExtDistance d = extended_distance(x, y);
  if (d.finite()) d.value = -kI * d.value;
  return d;
}

/// Angle between two directions: -i d_H(v, w).
inline Complex angle_between(const MinkowskiVector& v, const MinkowskiVector& w) {
  const ExtDistance d = extended_distance(v, w);
  if (d.infinite) throw GeometryError("angle_between: infinite distance (lightlike configuration)");
  return -kI * d.value;
}

/// Angle at p of the geodesics toward q1 and q2.
inline Complex vertex_angle(const MinkowskiVector& p, const MinkowskiVector& q1, const MinkowskiVector& q2) {
  return angle_between(tangent_toward(p, q1), tangent_toward(p, q2));
}

/// sgn(-||w||^2) w.
inline MinkowskiVector geometric_dual(const MinkowskiVector& w) {
  const CausalClass c = causal_class(w);
  if (c.lightlike()) throw GeometryError("geometric_dual: lightlike vector has no preferred side");
  return c.spacelike() ? -w : w;
}

/// (w1, w2, w3) with <v_i, w_j> = delta_ij, i.e. W = S (V^T)^{-1} for V with
/// columns v_i.
inline std::array<MinkowskiVector, 3> dual_basis(const MinkowskiVector& v1, const MinkowskiVector& v2,
                                                 const MinkowskiVector& v3) {
  if (v1.dimension() != 2 || v2.dimension() != 2 || v3.dimension() != 2) {
    throw DimensionError("dual_basis: vectors must lie in R^{2,1}");
  }
  Eigen::Matrix3d v;
  v.col(0) = v1.coords();
  v.col(1) = v2.coords();
  v.col(2) = v3.coords();
  const double det = v.determinant();
  if (std::abs(det) <= 1e-12 * v1.euclidean_norm() * v2.euclidean_norm() * v3.euclidean_norm()) {
    throw GeometryError("dual_basis: vectors are linearly dependent");
  }
  const Eigen::Matrix3d s = Eigen::Vector3d(-1.0, 1.0, 1.0).asDiagonal();
  const Eigen::Matrix3d w = s * v.transpose().inverse();
  return {MinkowskiVector(Eigen::VectorXd(w.col(0))), MinkowskiVector(Eigen::VectorXd(w.col(1))),
          MinkowskiVector(Eigen::VectorXd(w.col(2)))};
}

struct DualPair {
  MinkowskiVector primal;
  MinkowskiVector algebraic_dual;
  MinkowskiVector geometric_dual;
};

inline std::array<DualPair, 3> dual_pairs(const MinkowskiVector& v1, const MinkowskiVector& v2,
                                          const MinkowskiVector& v3) {
  const auto w = dual_basis(v1, v2, v3);
  return {DualPair{v1, w[0], geometric_dual(w[0])}, DualPair{v2, w[1], geometric_dual(w[1])},
          DualPair{v3, w[2], geometric_dual(w[2])}};
}

struct LensLune {
  Complex lune;  // angle at p between the directions x and y
  Complex lens;  // angle at p of the intersection of the hemispheres bounded by x^perp and y^perp
};

/// Lune and lens angles at a point p of x^perp and y^perp. Both x and y are
/// tangent at p. The boundary directions of the lens are oriented with the
/// same sign rule as geometric_dual.
inline LensLune lens_lune_angles(const MinkowskiVector& x, const MinkowskiVector& y, const MinkowskiVector& p) {
  x.require_same(y);
  x.require_same(p);
  if (causal_class(p).lightlike()) throw GeometryError("lens_lune_angles: p is lightlike");
  const double pn = p.euclidean_norm();
  if (std::abs(inner_product(p, x)) > kDegeneracyTolerance * std::max(1.0, pn * x.euclidean_norm()) ||
      std::abs(inner_product(p, y)) > kDegeneracyTolerance * std::max(1.0, pn * y.euclidean_norm())) {
    throw GeometryError("lens_lune_angles: p is not on x^perp and y^perp");
  }
  if (causal_class(x).lightlike() || causal_class(y).lightlike()) {
    throw GeometryError("lens_lune_angles: x and y must be non-lightlike");
  }
  // Direction of u^perp at p, oriented against o.
  auto boundary_direction = [&](const MinkowskiVector& u, const MinkowskiVector& o) {
    const MinkowskiVector perp =
        o - (inner_product(o, p) / norm_sq(p)) * p - (inner_product(o, u) / norm_sq(u)) * u;
    const double side = inner_product(perp, o) * (norm_sq(o) > 0.0 ? 1.0 : -1.0);
    return side > 0.0 ? -perp : perp;
  };
  return {angle_between(x, y), angle_between(boundary_direction(x, y), boundary_direction(y, x))};
}

}  // namespace exthyp
