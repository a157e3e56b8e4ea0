#pragma once

// Triangles of S_H^2 / S_S^2 and the generalized cosine, dual cosine and sine
// laws.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "exthyp/branch.hpp"
#include "exthyp/distance.hpp"
#include "exthyp/lorentz.hpp"

namespace exthyp {

struct StratumTag {
  int timelike = 0;
  int spacelike = 0;
  int lightlike = 0;
  std::array<DistanceCase, 3> side_cases{};

  /// "TTT", "TTS", "TSS", "SSS/secant", "SSS/elliptic", "SSS/mixed", with "L"
  /// for ideal vertices.
  std::string name() const {
    std::string s(static_cast<std::size_t>(timelike), 'T');
    s.append(static_cast<std::size_t>(spacelike), 'S');
    s.append(static_cast<std::size_t>(lightlike), 'L');
    if (spacelike == 3) {
      const auto all = [&](DistanceCase c) {
        return std::all_of(side_cases.begin(), side_cases.end(), [c](DistanceCase k) { return k == c; });
      };
      if (all(DistanceCase::SpacelikeSecant)) s += "/secant";
      else if (all(DistanceCase::SpacelikeElliptic)) s += "/elliptic";
      else s += "/mixed";
    }
    return s;
  }
};

/// Measured triangle. Sides are a = d(v2,v3), b = d(v1,v3), c = d(v1,v2);
/// angles A, B, C sit at v1, v2, v3.
struct ExtTriangle {
  std::array<MinkowskiVector, 3> v;
  std::array<MinkowskiVector, 3> w;      // algebraic duals, <v_i, w_j> = delta_ij
  std::array<MinkowskiVector, 3> w_geo;  // geometric duals; copies of w when w_geo_valid is false
  bool w_geo_valid = true;                // false if some dual is lightlike
  std::array<ExtDistance, 3> sides;
  std::array<Complex, 3> angles;
  std::array<double, 3> v_norm_sq{};
  std::array<double, 3> w_norm_sq{};
  bool ideal = false;
  StratumTag stratum;

  Complex side(int i) const { return sides[static_cast<std::size_t>(i)].get(); }
  Complex a() const { return side(0); }
  Complex b() const { return side(1); }
  Complex c() const { return side(2); }
  Complex A() const { return angles[0]; }
  Complex B() const { return angles[1]; }
  Complex C() const { return angles[2]; }
  bool side_finite(int i) const { return sides[static_cast<std::size_t>(i)].finite(); }

  /// Side lengths in the spherical model, d_S = -i d_H.
  Complex spherical_side(int i) const { return -kI * side(i); }

  /// Sign pattern (sgn ||v_1||^2, ..., sgn ||w_3||^2) as +1 / -1.
  std::array<int, 6> sign_pattern() const {
    std::array<int, 6> p{};
    for (std::size_t i = 0; i < 3; ++i) {
      p[i] = v_norm_sq[i] > 0.0 ? 1 : -1;
      p[i + 3] = w_norm_sq[i] > 0.0 ? 1 : -1;
    }
    return p;
  }
};

struct TriangleOptions {
  bool allow_ideal = false;  // accept lightlike vertices (degenerate mode)
};

inline double gram_determinant(const MinkowskiVector& v1, const MinkowskiVector& v2, const MinkowskiVector& v3) {
  Eigen::Matrix3d g;
  const std::array<const MinkowskiVector*, 3> v{&v1, &v2, &v3};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g(i, j) = inner_product(*v[static_cast<std::size_t>(i)], *v[static_cast<std::size_t>(j)]);
  return g.determinant();
}

inline ExtTriangle measure_triangle(const MinkowskiVector& v1, const MinkowskiVector& v2, const MinkowskiVector& v3,
                                    TriangleOptions opts = {}) {
  const std::array<MinkowskiVector, 3> v{v1, v2, v3};
  StratumTag tag;
  for (const auto& x : v) {
    const CausalClass c = causal_class(x);
    if (c.lightlike()) {
      if (!opts.allow_ideal) throw GeometryError("measure_triangle: lightlike vertex (ideal mode not enabled)");
      ++tag.lightlike;
    } else if (c.timelike()) {
      ++tag.timelike;
    } else {
      ++tag.spacelike;
    }
  }
  const auto w = dual_basis(v1, v2, v3);
  if (!(gram_determinant(v1, v2, v3) < 0.0)) throw GeometryError("measure_triangle: Gram determinant is not negative");

  std::array<double, 3> vn{}, wn{};
  bool geo_ok = true;
  for (std::size_t i = 0; i < 3; ++i) {
    vn[i] = norm_sq(v[i]);
    wn[i] = norm_sq(w[i]);
    if (causal_class(w[i]).lightlike()) geo_ok = false;
  }
  const std::array<MinkowskiVector, 3> wg =
      geo_ok ? std::array<MinkowskiVector, 3>{geometric_dual(w[0]), geometric_dual(w[1]), geometric_dual(w[2])} : w;

  const std::array<ExtDistance, 3> sides{extended_distance(v2, v3), extended_distance(v1, v3),
                                         extended_distance(v1, v2)};
  for (std::size_t i = 0; i < 3; ++i) tag.side_cases[i] = sides[i].kase;

  std::array<Complex, 3> angles{};
  for (std::size_t k = 0; k < 3; ++k) {
    const std::size_t i = (k + 1) % 3;
    const std::size_t j = (k + 2) % 3;
    if (causal_class(v[k]).lightlike()) {
      // Ideal vertex: read the angle off the dual side, -cos A = cosh a'.
      if (!geo_ok) throw GeometryError("measure_triangle: ideal vertex with a lightlike dual");
      const ExtDistance dual_side = extended_distance(wg[i], wg[j]);
      angles[k] = std::acos(-std::cosh(dual_side.get()));
      if (std::abs(angles[k].imag()) < 1e-12) angles[k] = {angles[k].real(), 0.0};
    } else {
      angles[k] = vertex_angle(v[k], v[i], v[j]);
    }
  }
  return ExtTriangle{v, w, wg, geo_ok, sides, angles, vn, wn, tag.lightlike > 0, tag};
}

// ---------------------------------------------------------------------------
// Law reports

struct LawEntry {
  std::string name;
  double residual = 0.0;
  bool skipped = false;  // involves an infinite side or a 0/0 instance
};

struct LawReport {
  std::string stratum;
  std::vector<LawEntry> entries;

  void add(std::string name, double residual) { entries.push_back({std::move(name), residual, false}); }
  void skip(std::string name) { entries.push_back({std::move(name), 0.0, true}); }

  void merge(const LawReport& other) {
    if (stratum.empty()) stratum = other.stratum;
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  }

  double max_residual() const {
    double m = 0.0;
    for (const auto& e : entries)
      if (!e.skipped) m = std::max(m, std::isfinite(e.residual) ? e.residual : std::numeric_limits<double>::infinity());
    return m;
  }

  std::optional<double> residual(const std::string& name) const {
    for (const auto& e : entries)
      if (e.name == name && !e.skipped) return e.residual;
    return std::nullopt;
  }

  bool within(double tol) const { return max_residual() < tol; }
};

namespace detail {

struct Cyclic {
  int x, y, z;  // side indices
  const char* label;
};
inline constexpr std::array<Cyclic, 3> kCyclic{{{0, 1, 2, "C"}, {1, 2, 0, "A"}, {2, 0, 1, "B"}}};

}  // namespace detail

/// Cosine law (cos Z sinh x sinh y = cosh x cosh y - cosh z) and dual cosine
/// law (cosh z sin X sin Y = cos X cos Y + cos Z), all cyclic versions,
/// cross-multiplied. On the spherical model lengths are d_S = -i d_H and
/// the spherical forms are used.
inline LawReport verify_cosine_laws(const ExtTriangle& t, Model model = Model::HyperbolicSphere) {
  LawReport r{t.stratum.name(), {}};
  const bool h = model == Model::HyperbolicSphere;
  const std::string pre = h ? "" : "spherical_";
  for (const auto& cy : detail::kCyclic) {
    const std::string cos_name = pre + "cosine_" + cy.label;
    const std::string dual_name = pre + "dual_cosine_" + cy.label;
    const Complex X = t.angles[static_cast<std::size_t>(cy.x)];
    const Complex Y = t.angles[static_cast<std::size_t>(cy.y)];
    const Complex Z = t.angles[static_cast<std::size_t>(cy.z)];
    if (t.side_finite(cy.x) && t.side_finite(cy.y) && t.side_finite(cy.z)) {
      Complex lhs, rhs;
      if (h) {
        const Complex x = t.side(cy.x), y = t.side(cy.y), z = t.side(cy.z);
        lhs = std::cos(Z) * std::sinh(x) * std::sinh(y);
        rhs = std::cosh(x) * std::cosh(y) - std::cosh(z);
      } else {
        const Complex x = t.spherical_side(cy.x), y = t.spherical_side(cy.y), z = t.spherical_side(cy.z);
        lhs = std::cos(Z) * std::sin(x) * std::sin(y);
        rhs = std::cos(z) - std::cos(x) * std::cos(y);
      }
      r.add(cos_name, std::abs(lhs - rhs));
    } else {
      r.skip(cos_name);
    }
    if (t.side_finite(cy.z)) {
      const Complex ch = h ? std::cosh(t.side(cy.z)) : std::cos(t.spherical_side(cy.z));
      r.add(dual_name, std::abs(ch * std::sin(X) * std::sin(Y) - (std::cos(X) * std::cos(Y) + std::cos(Z))));
    } else {
      r.skip(dual_name);
    }
  }
  return r;
}

/// Sine law cross-multiplied (sinh a sin B = sinh b sin A etc.) and the
/// squared identity sin^2 A sinh^2 b sinh^2 c = 1 - cosh^2 a - cosh^2 b -
/// cosh^2 c + 2 cosh a cosh b cosh c.
inline LawReport verify_sine_law(const ExtTriangle& t, Model model = Model::HyperbolicSphere) {
  LawReport r{t.stratum.name(), {}};
  const bool h = model == Model::HyperbolicSphere;
  const std::string pre = h ? "" : "spherical_";
  auto sn = [&](int i) { return h ? std::sinh(t.side(i)) : std::sin(t.spherical_side(i)); };
  auto cs = [&](int i) { return h ? std::cosh(t.side(i)) : std::cos(t.spherical_side(i)); };
  const bool all_finite = t.side_finite(0) && t.side_finite(1) && t.side_finite(2);
  for (const auto& cy : detail::kCyclic) {
    const std::string name = pre + "sine_" + std::string(1, "abc"[cy.x]) + std::string(1, "abc"[cy.y]);
    if (t.side_finite(cy.x) && t.side_finite(cy.y)) {
      r.add(name, std::abs(sn(cy.x) * std::sin(t.angles[static_cast<std::size_t>(cy.y)]) -
                           sn(cy.y) * std::sin(t.angles[static_cast<std::size_t>(cy.x)])));
    } else {
      r.skip(name);
    }
  }
  for (int k = 0; k < 3; ++k) {
    const std::string name = pre + "sine_squared_" + std::string(1, "ABC"[k]);
    if (!all_finite) {
      r.skip(name);
      continue;
    }
    const Complex ca = cs(0), cb = cs(1), cc = cs(2);
    const Complex delta = 1.0 - ca * ca - cb * cb - cc * cc + 2.0 * ca * cb * cc;
    const Complex s1 = sn((k + 1) % 3), s2 = sn((k + 2) % 3);
    const Complex sa = std::sin(t.angles[static_cast<std::size_t>(k)]);
    r.add(name, std::abs(sa * sa * s1 * s1 * s2 * s2 - delta));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Sign identities

using SignPattern = std::array<int, 6>;  // (v1, v2, v3, w1, w2, w3) norm-square signs

/// Patterns that occur for actual triangles: the dual w_k can be timelike only
/// when both v_i, v_j (i, j != k) are spacelike, and symmetrically.
inline bool admissible_pattern(const SignPattern& p) {
  for (int k = 0; k < 3; ++k) {
    const int i = (k + 1) % 3, j = (k + 2) % 3;
    if (p[static_cast<std::size_t>(k + 3)] < 0 && (p[static_cast<std::size_t>(i)] < 0 || p[static_cast<std::size_t>(j)] < 0)) return false;
    if (p[static_cast<std::size_t>(k)] < 0 && (p[static_cast<std::size_t>(i + 3)] < 0 || p[static_cast<std::size_t>(j + 3)] < 0)) return false;
  }
  return true;
}

/// The weaker exclusion stated as a necessary condition: two timelike
/// vertices force the remaining dual to be spacelike, and dually.
inline bool satisfies_stated_exclusion(const SignPattern& p) {
  for (int k = 0; k < 3; ++k) {
    const int i = (k + 1) % 3, j = (k + 2) % 3;
    if (p[static_cast<std::size_t>(i)] < 0 && p[static_cast<std::size_t>(j)] < 0 && p[static_cast<std::size_t>(k + 3)] < 0) return false;
    if (p[static_cast<std::size_t>(i + 3)] < 0 && p[static_cast<std::size_t>(j + 3)] < 0 && p[static_cast<std::size_t>(k)] < 0) return false;
  }
  return true;
}

inline std::vector<SignPattern> all_sign_patterns() {
  std::vector<SignPattern> out;
  for (int m = 0; m < 64; ++m) {
    SignPattern p{};
    for (std::size_t i = 0; i < 6; ++i) p[i] = (m >> i) & 1 ? -1 : 1;
    out.push_back(p);
  }
  return out;
}

inline std::vector<SignPattern> admissible_sign_patterns() {
  std::vector<SignPattern> out;
  for (const auto& p : all_sign_patterns())
    if (admissible_pattern(p)) out.push_back(p);
  return out;
}

/// Sign of sinh over side d_ij predicted from norms:
/// -msgn(-1, -||v_i||^2, -||v_j||^2, -||w_k||^2).
inline SignValue predicted_sinh_sign(const SignPattern& p, int i, int j, int k) {
  return -msgn({-1.0, -double(p[static_cast<std::size_t>(i)]), -double(p[static_cast<std::size_t>(j)]),
                -double(p[static_cast<std::size_t>(k + 3)])});
}

/// Sign of sin at vertex k predicted from norms:
/// -msgn(-1, -||v_k||^2, -||w_i||^2, -||w_j||^2).
inline SignValue predicted_sin_sign(const SignPattern& p, int k, int i, int j) {
  return -msgn({-1.0, -double(p[static_cast<std::size_t>(k)]), -double(p[static_cast<std::size_t>(i + 3)]),
                -double(p[static_cast<std::size_t>(j + 3)])});
}

namespace detail {
inline double d(int s) { return static_cast<double>(s); }
}  // namespace detail

/// Product of four msgn factors from the cosine-law derivation; equals +1.
inline SignValue lemma_product(const SignPattern& p) {
  using detail::d;
  const double v1 = d(p[0]), v2 = d(p[1]), v3 = d(p[2]), w1 = d(p[3]), w2 = d(p[4]);
  return msgn({-1.0, v1, v3, v1 * w2 * v3}) * msgn({-1.0, v2, v3, w1 * v2 * v3}) * msgn({-1.0, -v1, -v3, -w2}) *
         msgn({-1.0, -v2, -v3, -w1});
}

/// msgn(-1, -v1 w2 w3) msgn(-1, -v2 w1 w3) == sgn(v1 v2 w1 w2).
inline bool lemma_dual_identity(const SignPattern& p) {
  using detail::d;
  const double v1 = d(p[0]), v2 = d(p[1]), w1 = d(p[3]), w2 = d(p[4]), w3 = d(p[5]);
  return msgn({-1.0, -v1 * w2 * w3}) * msgn({-1.0, -v2 * w1 * w3}) == sgn(v1 * v2 * w1 * w2);
}

/// The six-factor msgn identity closing the sine-law derivation; equals +1.
inline SignValue sine_law_sign_product(const SignPattern& p) {
  using detail::d;
  const double v1 = d(p[0]), v2 = d(p[1]), v3 = d(p[2]), w1 = d(p[3]), w2 = d(p[4]), w3 = d(p[5]);
  return msgn({-1.0, -v1, -w2, -w3}) * msgn({-1.0, -v1, -v3, -w2}) * msgn({-1.0, -v2, -w1, -w3}) *
         msgn({-1.0, -v2, -v3, -w1}) * msgn({-v1 * w2 * w3, v1 * v3 * w2}) * msgn({-v2 * w1 * w3, v2 * v3 * w1});
}

struct PatternCensus {
  int total = 0;
  int admissible = 0;
  int stated_exclusion_survivors = 0;
  int lemma_product_failures = 0;  // over admissible patterns
  int lemma_dual_failures = 0;
  int sine_product_failures = 0;
  int failures_all_patterns = 0;  // the three identities over all 64 patterns
};

/// Exact evaluation of the three sign identities over every pattern.
inline PatternCensus sign_pattern_census() {
  PatternCensus c;
  for (const auto& p : all_sign_patterns()) {
    ++c.total;
    const bool l1 = lemma_product(p) == SignValue::plus();
    const bool l2 = lemma_dual_identity(p);
    const bool l3 = sine_law_sign_product(p) == SignValue::plus();
    if (!(l1 && l2 && l3)) ++c.failures_all_patterns;
    if (satisfies_stated_exclusion(p)) ++c.stated_exclusion_survivors;
    if (!admissible_pattern(p)) continue;
    ++c.admissible;
    c.lemma_product_failures += l1 ? 0 : 1;
    c.lemma_dual_failures += l2 ? 0 : 1;
    c.sine_product_failures += l3 ? 0 : 1;
  }
  return c;
}

/// Compares the measured signs of sinh(side) and sin(angle) against the norm
/// predictions. Residual 1 marks a mismatch, 0 agreement. Instances with
/// sinh = 0, sin = 0, or infinite sides are skipped.
inline LawReport verify_sign_identities(const ExtTriangle& t) {
  LawReport r{t.stratum.name(), {}};
  const SignPattern p = t.sign_pattern();
  r.add("pattern_admissible", admissible_pattern(p) ? 0.0 : 1.0);
  constexpr std::array<std::array<int, 3>, 3> side_idx{{{1, 2, 0}, {0, 2, 1}, {0, 1, 2}}};  // a = d23, b = d13, c = d12
  for (int s = 0; s < 3; ++s) {
    const std::string name = std::string("sinh_sign_") + "abc"[s];
    if (!t.side_finite(s)) {
      r.skip(name);
      continue;
    }
    const Complex sh = std::sinh(t.side(s));
    if (std::abs(sh) < 1e-9) {
      r.skip(name);
      continue;
    }
    const auto& ix = side_idx[static_cast<std::size_t>(s)];
    r.add(name, sgn(sh) == predicted_sinh_sign(p, ix[0], ix[1], ix[2]) ? 0.0 : 1.0);
  }
  for (int k = 0; k < 3; ++k) {
    const std::string name = std::string("sin_sign_") + "ABC"[k];
    const Complex sn = std::sin(t.angles[static_cast<std::size_t>(k)]);
    if (std::abs(sn) < 1e-9 || t.ideal) {
      r.skip(name);
      continue;
    }
    r.add(name, sgn(sn) == predicted_sin_sign(p, k, (k + 1) % 3, (k + 2) % 3) ? 0.0 : 1.0);
  }
  r.add("lemma_product", lemma_product(p) == SignValue::plus() ? 0.0 : 1.0);
  r.add("lemma_dual_identity", lemma_dual_identity(p) ? 0.0 : 1.0);
  r.add("sine_sign_product", sine_law_sign_product(p) == SignValue::plus() ? 0.0 : 1.0);
  return r;
}

// ---------------------------------------------------------------------------
// Dual triangle

/// -cos A = cosh a' for the geometric dual triangle, the sign-corrected
/// -cos A' = cosh a sgn(||v2||^2 ||v3||^2 ||w2||^2 ||w3||^2), and
/// sin A sin B = -sinh a' sinh b' sgn(||v1||^2 ||v2||^2 ||w1||^2 ||w2||^2).
inline LawReport verify_dual_relations(const ExtTriangle& t) {
  LawReport r{t.stratum.name(), {}};
  if (!t.w_geo_valid || t.ideal) {
    r.skip("dual_relations");
    return r;
  }
  const ExtTriangle d = measure_triangle(t.w_geo[0], t.w_geo[1], t.w_geo[2]);
  for (int k = 0; k < 3; ++k) {
    const auto K = static_cast<std::size_t>(k);
    const int i = (k + 1) % 3, j = (k + 2) % 3;
    const std::string tag(1, "ABC"[k]);
    if (d.side_finite(k)) r.add("dual_angle_" + tag, std::abs(-std::cos(t.angles[K]) - std::cosh(d.side(k))));
    else r.skip("dual_angle_" + tag);
    const double s = t.v_norm_sq[static_cast<std::size_t>(i)] * t.v_norm_sq[static_cast<std::size_t>(j)] *
                     t.w_norm_sq[static_cast<std::size_t>(i)] * t.w_norm_sq[static_cast<std::size_t>(j)];
    if (t.side_finite(k))
      r.add("dual_side_" + tag, std::abs(-std::cos(d.angles[K]) - std::cosh(t.side(k)) * double(sgn(s).value())));
    else r.skip("dual_side_" + tag);
  }
  for (int k = 0; k < 3; ++k) {
    // Pairs (A,B), (B,C), (C,A).
    const int i = k, j = (k + 1) % 3;
    const auto I = static_cast<std::size_t>(i), J = static_cast<std::size_t>(j);
    const std::string name = std::string("dual_sine_") + "ABC"[i] + "ABC"[j];
    if (!d.side_finite(i) || !d.side_finite(j)) {
      r.skip(name);
      continue;
    }
    const double s = t.v_norm_sq[I] * t.v_norm_sq[J] * t.w_norm_sq[I] * t.w_norm_sq[J];
    r.add(name, std::abs(std::sin(t.angles[I]) * std::sin(t.angles[J]) +
                         std::sinh(d.side(i)) * std::sinh(d.side(j)) * double(sgn(s).value())));
  }
  return r;
}

/// Every law and identity for a triangle on the hyperbolic model.
inline LawReport verify_all_laws(const ExtTriangle& t) {
  LawReport r = verify_cosine_laws(t);
  r.merge(verify_sine_law(t));
  r.merge(verify_sign_identities(t));
  r.merge(verify_dual_relations(t));
  return r;
}

// ---------------------------------------------------------------------------
// Gram matrices

inline Eigen::Matrix3d gram_matrix(const ExtTriangle& t) {
  Eigen::Matrix3d g;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = inner_product(t.v[i], t.v[j]);
  return g;
}

/// Vectors v1, v2, v3 in R^{2,1} with <v_i, v_j> = G_ij, for symmetric G with
/// one negative and two positive eigenvalues.
inline std::array<MinkowskiVector, 3> gram_factor(const Eigen::Matrix3d& g) {
  if ((g - g.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, g.cwiseAbs().maxCoeff())) {
    throw GeometryError("gram_factor: matrix is not symmetric");
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(g);
  const Eigen::Vector3d lam = es.eigenvalues();  // ascending
  const double tiny = 1e-12 * std::max(1.0, lam.cwiseAbs().maxCoeff());
  if (!(lam(0) < -tiny && lam(1) > tiny)) throw GeometryError("gram_factor: signature is not (2,1)");
  const Eigen::Matrix3d m = lam.cwiseAbs().cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
  return {MinkowskiVector(Eigen::VectorXd(m.col(0))), MinkowskiVector(Eigen::VectorXd(m.col(1))),
          MinkowskiVector(Eigen::VectorXd(m.col(2)))};
}

/// Rebuilds the triangle from its Gram matrix and reports the change in
/// cosh of each side.
inline LawReport verify_gram_reconstruction(const ExtTriangle& t) {
  LawReport r{t.stratum.name(), {}};
  const auto v = gram_factor(gram_matrix(t));
  const ExtTriangle u = measure_triangle(v[0], v[1], v[2], {t.ideal});
  for (int k = 0; k < 3; ++k) {
    const std::string name = std::string("gram_cosh_") + "abc"[k];
    if (!t.side_finite(k) || !u.side_finite(k)) {
      r.skip(name);
      continue;
    }
    r.add(name, std::abs(std::cosh(t.side(k)) - std::cosh(u.side(k))));
  }
  return r;
}

}  // namespace exthyp
