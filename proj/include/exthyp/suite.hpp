#pragma once

// Seeded verification runs: the nine acceptance checks and the per-module
// property checks. Every expected value here is computed independently of the
// routine under test (closed forms, constructions with known answers, or a
// second evaluation path).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "exthyp/area.hpp"
#include "exthyp/branch.hpp"
#include "exthyp/contour.hpp"
#include "exthyp/distance.hpp"
#include "exthyp/io.hpp"
#include "exthyp/lorentz.hpp"
#include "exthyp/polygon.hpp"
#include "exthyp/random.hpp"
#include "exthyp/triangle.hpp"

namespace exthyp {

struct CaseResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool exact = false;  // pass iff residual == 0

  bool pass() const { return std::isfinite(residual) && (exact ? residual == 0.0 : residual < tolerance); }
};

struct CheckResult {
  std::string id;
  std::string title;
  std::vector<CaseResult> cases;
  std::vector<std::string> notes;

  bool pass() const {
    return !cases.empty() && std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass(); });
  }

  /// Failing case with the largest residual over tolerance, else the worst case.
  const CaseResult* worst() const {
    const CaseResult* w = nullptr;
    auto ratio = [](const CaseResult& c) {
      if (!std::isfinite(c.residual)) return std::numeric_limits<double>::infinity();
      if (c.exact) return c.residual > 0.0 ? std::numeric_limits<double>::max() : 0.0;
      return c.residual / c.tolerance;
    };
    for (const auto& c : cases)
      if (!w || ratio(c) > ratio(*w)) w = &c;
    return w;
  }

  void add(std::string name, double residual, double tol) { cases.push_back({std::move(name), residual, tol, false}); }
  void add_exact(std::string name, double failures) { cases.push_back({std::move(name), failures, 0.0, true}); }
};

struct SuiteConfig {
  std::uint64_t seed = 7;
};

namespace detail {

/// Running maximum that treats NaN as +infinity.
struct MaxOf {
  double v = 0.0;
  void operator()(double x) { v = std::isfinite(x) ? std::max(v, x) : std::numeric_limits<double>::infinity(); }
};

inline double relative(Complex got, Complex want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

inline MinkowskiVector moved(const LorentzIsometry& g, const MinkowskiVector& x, double scale) {
  return scale * apply_isometry(g, x);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// 1. One-dimensional length through the pole.

inline CheckResult check_length_contour(const SuiteConfig& = {}) {
  CheckResult r{"1", "contour length vs closed form", {}, {}};
  std::vector<double> bs;
  for (int k = 0; k < 10; ++k) bs.push_back(0.05 + 0.1 * k);
  for (double b : {1.1, 1.3, 1.6, 2.0, 2.5, 3.0, 4.0, 5.0, 8.0, 20.0}) bs.push_back(b);
  detail::MaxOf quad, closed;
  for (double b : bs) {
    const Complex oracle = b < 1.0 ? Complex(0.5 * std::log((1.0 + b) / (1.0 - b)), 0.0)
                                   : Complex(0.5 * std::log((b + 1.0) / (b - 1.0)), kPi / 2.0);
    quad(std::abs(length_1d_contour(b) - oracle));
    closed(std::abs(length_1d(b) - oracle));
  }
  r.add("quadrature, 20 values of b", quad.v, 1e-8);
  r.add("closed form, 20 values of b", closed.v, 1e-8);
  return r;
}

// ---------------------------------------------------------------------------
// 2. Total volume of the extended 2-sphere.

inline CheckResult check_total_volume(const SuiteConfig& = {}) {
  CheckResult r{"2", "total volume of the extended 2-sphere", {}, {}};
  const Complex hemisphere = volume_radial(RadialProfile::constant(2, 2.0 * kPi), kInfinity);
  const Complex vol_h = 2.0 * hemisphere;
  const Complex vol_s = spherical_from_hyperbolic(vol_h, 2);
  r.add("vol_H = -4 pi", std::abs(vol_h - Complex(-4.0 * kPi, 0.0)), 1e-4);
  r.add("vol_S = +4 pi", std::abs(vol_s - Complex(4.0 * kPi, 0.0)), 1e-4);
  std::ostringstream os;
  os << "vol_H = " << vol_h.real() << (vol_h.imag() >= 0 ? "+" : "") << vol_h.imag() << "i";
  r.notes.push_back(os.str());
  return r;
}

// ---------------------------------------------------------------------------
// 3. Distance table.

struct DistanceProbe {
  MinkowskiVector x, y;
  DistanceCase kase;
  std::optional<Complex> expected;  // nullopt for an infinite distance
};

namespace detail {

/// Relative residual of <x,y> = ||x|| ||y|| cosh d_H for non-lightlike inputs.
inline double identity_residual(const MinkowskiVector& x, const MinkowskiVector& y, Complex d) {
  const double q = inner_product(x, y), nx = norm_sq(x), ny = norm_sq(y);
  const Complex rhs = sqrt_conv(nx) * sqrt_conv(ny) * std::cosh(d);
  return std::abs(q - rhs) / std::max(std::abs(q), std::sqrt(std::abs(nx * ny)));
}

inline MinkowskiVector lightlike_at(double t) { return {1.0, std::cos(t), std::sin(t)}; }

}  // namespace detail

/// Pair from the given table row with a known d_H, moved by a random isometry
/// (rapidity <= 2) and rescaled.
inline DistanceProbe random_distance_probe(DistanceCase c, Rng& rng) {
  const LorentzIsometry g = random_isometry(2, rng, 2.0);
  auto s = [&] { return uniform(rng, 0.5, 2.0); };
  auto mv = [&](const MinkowskiVector& v) { return detail::moved(g, v, s()); };
  auto coin = [&] { return uniform(rng, 0.0, 1.0) < 0.5; };
  const int sub = std::uniform_int_distribution<int>(0, 2)(rng);
  const double t = uniform(rng, 0.0, 2.0 * kPi);
  DistanceProbe p{{1.0, 0.0}, {1.0, 0.0}, c, std::nullopt};
  switch (c) {
    case DistanceCase::BothLightlike: {
      const MinkowskiVector l = detail::lightlike_at(t);
      p.x = mv(l);
      if (sub == 0) {
        p.y = mv(l);
        p.expected = Complex(0.0, 0.0);
      } else if (sub == 1) {
        p.y = mv(-1.0 * l);
        p.expected = Complex(0.0, kPi);
      } else {
        p.y = mv(detail::lightlike_at(t + uniform(rng, 0.3, 2.0 * kPi - 0.3)));
      }
      break;
    }
    case DistanceCase::OneLightlike: {
      // Frame with the lightlike vector at (1,1,0); (a,a,1) is orthogonal to it.
      const MinkowskiVector l{1.0, 1.0, 0.0};
      const double a = uniform(rng, -2.0, 2.0);
      MinkowskiVector o{1.0, 0.0, 0.0};
      if (sub == 0) {
        o = MinkowskiVector{a, a, coin() ? 1.0 : -1.0};
        p.expected = Complex(0.0, kPi / 2.0);
      } else if (sub == 1) {
        const double cshift = (coin() ? 1.0 : -1.0) * uniform(rng, 0.2, 2.0);
        o = MinkowskiVector{a, a + cshift, 1.0};
      } else {
        o = (coin() ? 1.0 : -1.0) * random_hyperbolic_point(rng);
      }
      p.x = mv(l);
      p.y = mv(o);
      if (coin()) std::swap(p.x, p.y);
      break;
    }
    case DistanceCase::BothTimelike: {
      const double a = uniform(rng, 0.05, 3.0);
      const double sx = coin() ? 1.0 : -1.0, sy = coin() ? 1.0 : -1.0;
      p.x = mv(sx * MinkowskiVector{1.0, 0.0, 0.0});
      p.y = mv(sy * MinkowskiVector{std::cosh(a), std::sinh(a) * std::cos(t), std::sinh(a) * std::sin(t)});
      p.expected = sx * sy > 0 ? Complex(a, 0.0) : Complex(-a, kPi);
      break;
    }
    case DistanceCase::TimelikeSpacelike: {
      const double a = uniform(rng, -3.0, 3.0);
      const double sx = coin() ? 1.0 : -1.0;
      p.x = mv(sx * MinkowskiVector{1.0, 0.0, 0.0});
      p.y = mv(MinkowskiVector{std::sinh(a), std::cosh(a) * std::cos(t), std::cosh(a) * std::sin(t)});
      p.expected = Complex(sx * a, kPi / 2.0);
      if (coin()) std::swap(p.x, p.y);
      break;
    }
    case DistanceCase::SpacelikeElliptic: {
      const double a = uniform(rng, 0.05, kPi - 0.05);
      p.x = mv(MinkowskiVector{0.0, std::cos(t), std::sin(t)});
      p.y = mv(MinkowskiVector{0.0, std::cos(t + a), std::sin(t + a)});
      p.expected = Complex(0.0, a);
      break;
    }
    case DistanceCase::SpacelikeSecant: {
      const double a = uniform(rng, 0.05, 3.0);
      const double sy = coin() ? 1.0 : -1.0;
      p.x = mv(MinkowskiVector{0.0, 1.0, 0.0});
      p.y = mv(sy * MinkowskiVector{std::sinh(a), std::cosh(a), 0.0});
      p.expected = sy > 0 ? Complex(-a, 0.0) : Complex(a, kPi);
      break;
    }
    case DistanceCase::SpacelikeTangent: {
      const double a = uniform(rng, -2.0, 2.0), b = uniform(rng, -2.0, 2.0);
      const double sy = coin() ? 1.0 : -1.0;
      p.x = mv(MinkowskiVector{a, a, 1.0});
      p.y = mv(MinkowskiVector{b, b, sy});
      p.expected = sy > 0 ? Complex(0.0, 0.0) : Complex(0.0, kPi);
      break;
    }
  }
  return p;
}

/// The worked pairs of the distance table, in 1+1 dimensions.
inline std::vector<DistanceProbe> canonical_distance_examples() {
  const double a = 0.7, b = -1.3;
  const double ch = std::cosh(a), sh = std::sinh(a);
  // d_H(0, tanh a) in the Klein chart is a.
  return {
      {{1.0, 0.0}, {ch, sh}, DistanceCase::BothTimelike, Complex(a, 0.0)},
      {{1.0, 0.0}, {-ch, sh}, DistanceCase::BothTimelike, Complex(-a, kPi)},
      {{1.0, 0.0}, {sh, ch}, DistanceCase::TimelikeSpacelike, Complex(a, kPi / 2.0)},
      {{1.0, 0.0}, {-sh, ch}, DistanceCase::TimelikeSpacelike, Complex(-a, kPi / 2.0)},
      {{0.0, 1.0}, {sh, ch}, DistanceCase::SpacelikeSecant, Complex(-a, 0.0)},
      {{0.0, 1.0}, {sh, -ch}, DistanceCase::SpacelikeSecant, Complex(a, kPi)},
      {{0.0, 1.0, 0.0}, {0.0, std::cos(a), std::sin(a)}, DistanceCase::SpacelikeElliptic, Complex(0.0, a)},
      {{1.0, 1.0, 0.0}, {a, a, 1.0}, DistanceCase::OneLightlike, Complex(0.0, kPi / 2.0)},
      {{1.0, 1.0, 0.0}, {-1.0, -1.0, 0.0}, DistanceCase::BothLightlike, Complex(0.0, kPi)},
      {{a, a, 1.0}, {b, b, 1.0}, DistanceCase::SpacelikeTangent, Complex(0.0, 0.0)},
      {{a, a, 1.0}, {b, b, -1.0}, DistanceCase::SpacelikeTangent, Complex(0.0, kPi)},
  };
}

inline CheckResult check_distance_table(const SuiteConfig& cfg = {}) {
  CheckResult r{"3", "distance table on stratified pairs", {}, {}};
  Rng rng(cfg.seed ^ 0x3ull);
  constexpr std::array<DistanceCase, 7> cases{
      DistanceCase::BothLightlike,   DistanceCase::OneLightlike,      DistanceCase::BothTimelike,
      DistanceCase::TimelikeSpacelike, DistanceCase::SpacelikeElliptic, DistanceCase::SpacelikeSecant,
      DistanceCase::SpacelikeTangent};
  std::array<detail::MaxOf, 7> ident{}, value{};
  std::array<int, 7> count{}, tag_fail{};
  for (int k = 0; k < 10000; ++k) {
    const auto ci = static_cast<std::size_t>(k % 7);
    const DistanceProbe p = random_distance_probe(cases[ci], rng);
    ++count[ci];
    const ExtDistance d = extended_distance(p.x, p.y);
    if (d.kase != p.kase) ++tag_fail[ci];
    if (!p.expected) {
      value[ci](d.infinite ? 0.0 : 1.0);
      continue;
    }
    if (d.infinite) {
      value[ci](1.0);
      continue;
    }
    value[ci](detail::relative(d.value, *p.expected));
    if (p.kase != DistanceCase::BothLightlike && p.kase != DistanceCase::OneLightlike) {
      ident[ci](detail::identity_residual(p.x, p.y, d.value));
    }
  }
  for (std::size_t i = 0; i < 7; ++i) {
    const std::string tag = to_string(cases[i]);
    if (cases[i] != DistanceCase::BothLightlike && cases[i] != DistanceCase::OneLightlike) {
      r.add(tag + " identity (" + std::to_string(count[i]) + " pairs)", ident[i].v, 1e-9);
    }
    r.add(tag + " value", value[i].v, 1e-9);
    r.add_exact(tag + " case tag", tag_fail[i]);
  }
  int canon_fail = 0;
  detail::MaxOf canon;
  for (const auto& p : canonical_distance_examples()) {
    const ExtDistance d = extended_distance(p.x, p.y);
    if (d.kase != p.kase || d.infinite) {
      ++canon_fail;
      continue;
    }
    canon(std::abs(d.value - *p.expected));
  }
  r.add_exact("canonical examples, case and finiteness", canon_fail);
  r.add("canonical examples, value to rounding", canon.v, 1e-12);
  return r;
}

// ---------------------------------------------------------------------------
// 4. Trigonometric laws.

/// Classical right triangle with the right angle at v3, legs a = d(v2,v3)
/// and b = d(v1,v3).
inline ExtTriangle right_triangle(double a, double b, const LorentzIsometry& g) {
  return measure_triangle(apply_isometry(g, MinkowskiVector{std::cosh(b), std::sinh(b), 0.0}),
                          apply_isometry(g, MinkowskiVector{std::cosh(a), 0.0, std::sinh(a)}),
                          apply_isometry(g, MinkowskiVector{1.0, 0.0, 0.0}));
}

inline CheckResult check_trig_laws(const SuiteConfig& cfg = {}, int per_stratum = 1000) {
  CheckResult r{"4", "cosine, dual cosine and sine laws", {}, {}};
  Rng rng(cfg.seed ^ 0x4ull);
  for (Stratum s : kAllStrata) {
    std::map<std::string, detail::MaxOf> worst;
    for (int k = 0; k < per_stratum; ++k) {
      const ExtTriangle t = sample_stratum(s, rng);
      LawReport rep = verify_cosine_laws(t, Model::HyperbolicSphere);
      rep.merge(verify_cosine_laws(t, Model::SphericalSphere));
      rep.merge(verify_sine_law(t, Model::HyperbolicSphere));
      rep.merge(verify_sine_law(t, Model::SphericalSphere));
      for (const auto& e : rep.entries) {
        if (e.skipped) continue;
        const std::string group = e.name.rfind("spherical_", 0) == 0 ? "spherical" : "hyperbolic";
        const std::string law = e.name.find("dual_cosine") != std::string::npos ? "dual cosine"
                                : e.name.find("cosine") != std::string::npos    ? "cosine"
                                                                                : "sine";
        worst[law + " (" + group + ")"](e.residual);
      }
    }
    for (const auto& [law, m] : worst) r.add(std::string(to_string(s)) + " " + law, m.v, 1e-8);
  }
  detail::MaxOf pyth, sine;
  for (int k = 0; k < 1000; ++k) {
    const double a = uniform(rng, 0.1, 2.0), b = uniform(rng, 0.1, 2.0);
    const ExtTriangle t = right_triangle(a, b, random_isometry(2, rng, 1.0));
    pyth(std::abs(std::cosh(t.c()) - std::cosh(a) * std::cosh(b)));
    sine(std::abs(std::sinh(a) - std::sin(t.A()) * std::sinh(t.c())));
  }
  r.add("right triangle cosh c = cosh a cosh b", pyth.v, 1e-10);
  r.add("right triangle sinh a = sin A sinh c", sine.v, 1e-10);
  return r;
}

// ---------------------------------------------------------------------------
// 5. Sign machinery.

namespace detail {

/// msgn as the literal ratio of principal square roots.
inline int msgn_oracle(const std::vector<double>& xs) {
  Complex num{1.0, 0.0};
  double prod = 1.0;
  for (double x : xs) {
    num *= std::sqrt(Complex(x, 0.0));
    prod *= x;
  }
  const Complex q = num / std::sqrt(Complex(prod, 0.0));
  return q.real() > 0.0 ? 1 : -1;
}

inline double product(const std::vector<double>& xs) {
  double p = 1.0;
  for (double x : xs) p *= x;
  return p;
}

inline SignValue msgn_of(const std::vector<double>& xs) { return msgn(std::span<const double>(xs)); }

}  // namespace detail

/// Failure counts of the msgn properties over every sign pattern of 1..8
/// arguments with random magnitudes.
inline std::map<std::string, int> msgn_property_failures(Rng& rng) {
  std::map<std::string, int> fail{{"(a) msgn(a) = 1", 0},
                                  {"(b) msgn(a,a) = sgn a, msgn(L)^2 = 1", 0},
                                  {"(c) product split", 0},
                                  {"(d) closed form", 0},
                                  {"(e) paired arguments", 0},
                                  {"ratio of roots", 0}};
  for (int n = 1; n <= 8; ++n) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<double> xs;
      int negatives = 0;
      for (int i = 0; i < n; ++i) {
        const bool neg = (mask >> i) & 1u;
        negatives += neg ? 1 : 0;
        xs.push_back((neg ? -1.0 : 1.0) * std::exp(uniform(rng, -2.0, 2.0)));
      }
      const SignValue m = detail::msgn_of(xs);
      if (n == 1 && m != SignValue::plus()) ++fail["(a) msgn(a) = 1"];
      if (n == 1 && detail::msgn_of({xs[0], xs[0]}) != sgn(xs[0])) ++fail["(b) msgn(a,a) = sgn a, msgn(L)^2 = 1"];
      if (m * m != SignValue::plus()) ++fail["(b) msgn(a,a) = sgn a, msgn(L)^2 = 1"];
      for (int k = 1; k < n; ++k) {
        const std::vector<double> A(xs.begin(), xs.begin() + k), B(xs.begin() + k, xs.end());
        if (detail::msgn_of(A) * detail::msgn_of(B) != m * msgn({detail::product(A), detail::product(B)})) {
          ++fail["(c) product split"];
        }
      }
      if (m.value() != ((negatives / 2) % 2 == 0 ? 1 : -1)) ++fail["(d) closed form"];
      if (m.value() != detail::msgn_oracle(xs) || msgn_by_roots(std::span<const double>(xs)) != m) {
        ++fail["ratio of roots"];
      }
      if (n <= 4) {
        std::vector<double> paired;
        for (double x : xs) paired.insert(paired.end(), {x, x});
        if (detail::msgn_of(paired) != sgn(detail::product(xs))) ++fail["(e) paired arguments"];
      }
    }
  }
  return fail;
}

inline CheckResult check_sign_machinery(const SuiteConfig& cfg = {}, int per_stratum = 400) {
  CheckResult r{"5", "sign machinery", {}, {}};
  Rng rng(cfg.seed ^ 0x5ull);
  for (const auto& [name, n] : msgn_property_failures(rng)) r.add_exact("msgn " + name, n);
  const PatternCensus c = sign_pattern_census();
  r.add_exact("admissible patterns: product identity", c.lemma_product_failures);
  r.add_exact("admissible patterns: dual identity", c.lemma_dual_failures);
  r.add_exact("admissible patterns: sine-law sign product", c.sine_product_failures);
  r.add_exact("admissible pattern count is 18", c.admissible == 18 ? 0 : 1);
  r.notes.push_back(std::to_string(c.admissible) + " realizable patterns of " + std::to_string(c.total) + "; " +
                    std::to_string(c.stated_exclusion_survivors) + " survive the single stated exclusion");
  std::map<std::string, int> fails;
  int triangles = 0;
  for (Stratum s : kAllStrata) {
    for (int k = 0; k < per_stratum; ++k) {
      const LawReport rep = verify_sign_identities(sample_stratum(s, rng));
      ++triangles;
      for (const auto& e : rep.entries) {
        if (e.skipped) continue;
        if (e.name.rfind("sinh_sign_", 0) == 0) fails["sinh side signs"] += e.residual != 0.0 ? 1 : 0;
        else if (e.name.rfind("sin_sign_", 0) == 0) fails["sin angle signs"] += e.residual != 0.0 ? 1 : 0;
        else if (e.name == "pattern_admissible") fails["measured pattern admissible"] += e.residual != 0.0 ? 1 : 0;
      }
    }
  }
  for (const auto& [name, n] : fails) r.add_exact(name + " (" + std::to_string(triangles) + " triangles)", n);
  return r;
}

// ---------------------------------------------------------------------------
// 6. Polygon identities.

inline CheckResult check_polygons(const SuiteConfig& cfg = {}, int samples = 1000) {
  CheckResult r{"6", "polygon identities and inequalities", {}, {}};
  for (PolygonFamily f : kAllFamilies) {
    const PolygonReport rep = verify_family(f, samples, cfg.seed ^ (0x60ull + static_cast<std::uint64_t>(f)));
    const std::string fam = to_string(f);
    for (const auto& [name, v] : rep.identity_max) r.add(fam + " " + name, v, 1e-8);
    r.add(fam + " shift signature", rep.shift_max, 1e-9);
    for (const auto& [name, margin] : rep.inequality_min) r.add_exact(fam + " " + name, margin > 0.0 ? 0.0 : 1.0);
    if (rep.mirror_samples > 0) {
      r.notes.push_back(fam + ": " + std::to_string(rep.mirror_samples) + " mirror-image samples");
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// 7. Areas.

namespace detail {

/// Euclidean unit-sphere triangle with the solid-angle formula as oracle.
struct SphereTriangle {
  double a, b, c, area;
};

inline std::optional<SphereTriangle> random_sphere_triangle(Rng& rng) {
  auto unit = [&] {
    const double z = uniform(rng, -1.0, 1.0), t = uniform(rng, 0.0, 2.0 * kPi), s = std::sqrt(1.0 - z * z);
    return Eigen::Vector3d(s * std::cos(t), s * std::sin(t), z);
  };
  const Eigen::Vector3d p = unit(), q = unit(), u = unit();
  const double a = std::acos(std::clamp(q.dot(u), -1.0, 1.0)), b = std::acos(std::clamp(p.dot(u), -1.0, 1.0)),
               c = std::acos(std::clamp(p.dot(q), -1.0, 1.0));
  const double det = std::abs(p.dot(q.cross(u)));
  for (double x : {a, b, c})
    if (x < 0.1 || x > kPi - 0.1) return std::nullopt;
  if (det < 0.05) return std::nullopt;
  const double area = 2.0 * std::atan2(det, 1.0 + p.dot(q) + q.dot(u) + u.dot(p));
  return SphereTriangle{a, b, c, area < 0.0 ? area + 2.0 * kPi : area};
}

}  // namespace detail

inline CheckResult check_areas(const SuiteConfig& cfg = {}, int samples = 1000) {
  CheckResult r{"7", "area formulas", {}, {}};
  Rng rng(cfg.seed ^ 0x7ull);
  detail::MaxOf h12, hdef;
  for (int k = 0; k < samples; ++k) {
    const ExtTriangle t = sample_stratum(Stratum::TTT, rng);
    const AreaComparison cmp = compare_areas(t, Model::HyperbolicSphere);
    h12(cmp.diff);
    hdef(std::abs(cmp.s_defect - cmp.s2));
  }
  r.add("hyperbolic |S1 - S2|", h12.v, 1e-8);
  r.add("hyperbolic |defect - S2|", hdef.v, 1e-8);
  detail::MaxOf s12, sor;
  for (int k = 0; k < samples;) {
    const auto st = detail::random_sphere_triangle(rng);
    if (!st) continue;
    ++k;
    const Complex s1 = area_cosine_law(st->a, st->b, st->c, Model::SphericalSphere);
    const Complex s2 = area_sides(st->a, st->b, st->c, Model::SphericalSphere);
    s12(std::abs(s1 - s2));
    sor(std::abs(s2 - st->area));
  }
  r.add("spherical |S1 - S2|", s12.v, 1e-8);
  r.add("spherical |S2 - solid angle|", sor.v, 1e-8);
  const Complex lim = area_sides(30.0, 30.0, 30.0, Model::HyperbolicSphere);
  r.add("S2(30,30,30) -> pi", std::abs(lim - kPi), 1e-6);
  std::ostringstream os;
  os.precision(10);
  os << "S2(30,30,30) = pi - " << (kPi - lim.real());
  r.notes.push_back(os.str());
  return r;
}

// ---------------------------------------------------------------------------
// 8. Correspondence.

inline CheckResult check_correspondence(const SuiteConfig& cfg = {}, int per_stratum = 200) {
  CheckResult r{"8", "hyperbolic/spherical correspondence", {}, {}};
  Rng rng(cfg.seed ^ 0x8ull);
  constexpr std::array<CorrespondenceLaw, 4> laws{CorrespondenceLaw::Cosine, CorrespondenceLaw::DualCosine,
                                                  CorrespondenceLaw::Sine, CorrespondenceLaw::Area};
  std::array<detail::MaxOf, 4> res{}, sym{};
  for (Stratum s : kAllStrata) {
    for (int k = 0; k < per_stratum; ++k) {
      const ExtTriangle t = sample_stratum(s, rng);
      for (std::size_t i = 0; i < laws.size(); ++i) {
        try {
          const CorrespondenceResult c = correspondence_check(laws[i], t);
          res[i](c.residual);
          sym[i](c.symmetry);
        } catch (const GeometryError&) {
          // pole of the half-perimeter product; not a correspondence failure
        }
      }
    }
  }
  for (std::size_t i = 0; i < laws.size(); ++i) {
    r.add(std::string(to_string(laws[i])) + " l -> -i l", res[i].v, 1e-10);
    r.add(std::string(to_string(laws[i])) + " -i l vs +i l", sym[i].v, 1e-10);
  }
  return r;
}

// ---------------------------------------------------------------------------
// 9. Isometry invariance.

inline CheckResult check_invariance(const SuiteConfig& cfg = {}, int isometries = 100) {
  CheckResult r{"9", "invariance under isometries", {}, {}};
  Rng rng(cfg.seed ^ 0x9ull);
  std::vector<ExtTriangle> base;
  for (Stratum s : kAllStrata)
    for (int k = 0; k < 4; ++k) base.push_back(sample_stratum(s, rng, 0.5));
  std::vector<std::pair<MinkowskiVector, MinkowskiVector>> pairs;
  for (int k = 0; k < 40; ++k) {
    auto point = [&] {
      return uniform(rng, 0.0, 1.0) < 0.5 ? random_hyperbolic_point(rng) : random_de_sitter_point(rng);
    };
    pairs.emplace_back(point(), point());
  }
  auto cosh_d = [](const MinkowskiVector& x, const MinkowskiVector& y) {
    return std::cosh(extended_distance(x, y).get());
  };
  detail::MaxOf dcosh, dlaw, dside;
  int pattern_changes = 0;
  for (int k = 0; k < isometries; ++k) {
    const LorentzIsometry g = random_isometry(2, rng, 5.0);
    for (const auto& [x, y] : pairs) {
      const Complex before = cosh_d(x, y), after = cosh_d(apply_isometry(g, x), apply_isometry(g, y));
      dcosh(detail::relative(after, before));
    }
    for (const auto& t : base) {
      const ExtTriangle u =
          measure_triangle(apply_isometry(g, t.v[0]), apply_isometry(g, t.v[1]), apply_isometry(g, t.v[2]));
      for (int i = 0; i < 3; ++i) dside(detail::relative(std::cosh(u.side(i)), std::cosh(t.side(i))));
      if (u.sign_pattern() != t.sign_pattern()) ++pattern_changes;
      const LawReport before = verify_all_laws(t), after = verify_all_laws(u);
      for (const auto& e : before.entries) {
        if (e.skipped) continue;
        const auto v = after.residual(e.name);
        dlaw(v ? std::abs(*v - e.residual) : std::numeric_limits<double>::infinity());
      }
    }
  }
  r.add("cosh d_H of point pairs", dcosh.v, 1e-7);
  r.add("cosh of triangle sides", dside.v, 1e-7);
  r.add("law residuals", dlaw.v, 1e-7);
  r.add_exact("sign patterns", pattern_changes);
  return r;
}

// ---------------------------------------------------------------------------
// Per-module properties beyond the acceptance criteria.

inline CheckResult check_lorentz_properties(const SuiteConfig& cfg = {}) {
  CheckResult r{"P1", "lorentz_core properties", {}, {}};
  Rng rng(cfg.seed ^ 0x11ull);
  detail::MaxOf inv, bil, round;
  int class_changes = 0;
  for (int k = 0; k < 500; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 3);
    std::vector<double> xs(n + 1), ys(n + 1);
    for (auto& v : xs) v = uniform(rng, -2.0, 2.0);
    for (auto& v : ys) v = uniform(rng, -2.0, 2.0);
    const MinkowskiVector x{std::span<const double>(xs)}, y{std::span<const double>(ys)};
    const LorentzIsometry g = random_isometry(n, rng, 3.0);
    const MinkowskiVector gx = apply_isometry(g, x), gy = apply_isometry(g, y);
    const double scale = std::max(1.0, gx.euclidean_norm() * gy.euclidean_norm());
    inv(std::abs(inner_product(gx, gy) - inner_product(x, y)) / scale);
    const double a = uniform(rng, -3.0, 3.0);
    bil(std::abs(inner_product(x + a * y, y) - inner_product(x, y) - a * norm_sq(y)) /
        std::max(1.0, x.euclidean_norm_sq() + y.euclidean_norm_sq()));
    const MinkowskiVector back = apply_isometry(g.inverse(), gx);
    double e = 0.0;
    for (std::size_t i = 0; i <= n; ++i) e = std::max(e, std::abs(back[i] - x[i]));
    round(e / std::max(1.0, gx.euclidean_norm()));
    const CausalClass c0 = causal_class(x), c1 = causal_class(gx);
    if (std::abs(norm_sq(x)) > 1e-3 && !(c0 == c1)) ++class_changes;
  }
  r.add("form preserved by isometries", inv.v, 1e-12);
  r.add("bilinearity", bil.v, 1e-13);
  r.add("inverse round trip", round.v, 1e-12);
  r.add_exact("causal class and sheet preserved", class_changes);
  return r;
}

inline CheckResult check_branch_properties(const SuiteConfig& cfg = {}) {
  CheckResult r{"P2", "branch_algebra properties", {}, {}};
  Rng rng(cfg.seed ^ 0x12ull);
  detail::MaxOf inv;
  int strip = 0;
  for (int k = 0; k < 2000; ++k) {
    const Complex q{uniform(rng, -5.0, 5.0), k % 2 ? 0.0 : uniform(rng, -3.0, 3.0)};
    const Complex d = arccosh_strip(q);
    inv(std::abs(std::cosh(d) - q) / std::max(1.0, std::abs(q)));
    if (d.real() < -1e-12 || std::abs(d.imag()) > kPi + 1e-12) ++strip;
    if (q.imag() == 0.0 && d.imag() < 0.0) ++strip;
  }
  r.add("cosh(arccosh q) = q", inv.v, 1e-12);
  r.add_exact("arccosh in Re >= 0, |Im| <= pi, real q gives Im >= 0", strip);
  int sq = 0;
  for (double a : {4.0, 0.25, -4.0, -0.25}) {
    const Complex s = sqrt_conv(a);
    if (std::abs(s * s - a) > 1e-15 || (a < 0 && !(s.imag() > 0.0 && s.real() == 0.0))) ++sq;
  }
  r.add_exact("sqrt_conv on the positive imaginary axis", sq);
  int qt = 0;
  for (int k = -8; k <= 8; ++k) {
    const Complex v = QuarterTurn::power(k).value(), w = std::pow(kI, k);
    if (std::abs(v - w) > 1e-15) ++qt;
  }
  r.add_exact("i^k exact powers", qt);
  return r;
}

inline CheckResult check_contour_properties(const SuiteConfig& = {}) {
  CheckResult r{"P3", "contour_oracle properties", {}, {}};
  detail::MaxOf dep;
  for (double b : {1.5, 2.0, 4.0}) {
    const Complex base = length_1d_contour(b, 1e-3);
    for (double d : {3e-3, 1e-2, 0.05, 0.1}) dep(std::abs(length_1d_contour(b, d) - base));
  }
  r.add("length independent of detour radius", dep.v, 1e-10);
  const double t = std::tanh(1.0);
  const Complex disc = volume_radial(RadialProfile::constant(2, 2.0 * kPi), t);
  r.add("disc of radius 1: 2 pi (cosh 1 - 1)", std::abs(disc - 2.0 * kPi * (std::cosh(1.0) - 1.0)), 1e-9);
  const Complex contour = volume_radial(RadialProfile::constant(2, 2.0 * kPi), 3.0);
  const Complex eps = volume_radial_eps(RadialProfile::constant(2, 2.0 * kPi), 3.0, 1e-3);
  r.add("detour vs pole shifted by 1e-3 i", std::abs(contour - eps), 1e-2);
  const Complex v3 = volume_radial(RadialProfile::constant(3, 4.0 * kPi), kInfinity);
  r.add("hemisphere of S_H^3 = -pi^2 i", std::abs(v3 - Complex(0.0, -kPi * kPi)), 1e-6);
  return r;
}

inline CheckResult check_metric_properties(const SuiteConfig& cfg = {}) {
  CheckResult r{"P4", "metric_geometry properties", {}, {}};
  Rng rng(cfg.seed ^ 0x14ull);
  detail::MaxOf sym, anti, scale, cor_h, cor_s, cor_angle, cor_lens, lens_set;
  auto point = [&] {
    return uniform(rng, 0.0, 1.0) < 0.5 ? (uniform(rng, 0.0, 1.0) < 0.5 ? 1.0 : -1.0) * random_hyperbolic_point(rng)
                                        : random_de_sitter_point(rng);
  };
  for (int k = 0; k < 2000; ++k) {
    const MinkowskiVector x = point(), y = point();
    const ExtDistance d = extended_distance(x, y);
    if (d.infinite || d.kase == DistanceCase::SpacelikeTangent) continue;
    sym(std::abs(extended_distance(y, x).get() - d.value));
    anti(detail::relative(std::cosh(extended_distance(-1.0 * x, y).get()), -std::cosh(d.value)));
    scale(std::abs(extended_distance(uniform(rng, 0.2, 5.0) * x, uniform(rng, 0.2, 5.0) * y).get() - d.value));
    const double q = inner_product(x, y);
    const Complex nn = lorentz_norm(x) * lorentz_norm(y);
    const double den = std::max(std::abs(q), std::abs(nn));
    cor_h(std::abs(q - nn * std::cosh(d.value)) / den);
    cor_s(std::abs(q - nn * std::cos(spherical_distance(x, y).get())) / den);
    cor_angle(std::abs(q - nn * std::cos(angle_between(x, y))) / den);
  }
  // Lens and lune at a vertex p with x, y tangent there.
  for (int k = 0; k < 1000; ++k) {
    const MinkowskiVector p = uniform(rng, 0.0, 1.0) < 0.5 ? random_hyperbolic_point(rng) : random_de_sitter_point(rng);
    auto tangent = [&] {
      MinkowskiVector u{uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
      return u - (inner_product(u, p) / norm_sq(p)) * p;
    };
    const MinkowskiVector x = tangent(), y = tangent();
    if (std::abs(norm_sq(x)) < 0.05 * x.euclidean_norm_sq() || std::abs(norm_sq(y)) < 0.05 * y.euclidean_norm_sq())
      continue;
    LensLune ll{};
    try {
      ll = lens_lune_angles(x, y, p);
    } catch (const GeometryError&) {
      continue;
    }
    const Complex nn = lorentz_norm(x) * lorentz_norm(y);
    const double q = inner_product(x, y);
    cor_lens(std::abs(q + nn * std::cos(ll.lens)) / std::max(std::abs(q), std::abs(nn)));
    double best = std::numeric_limits<double>::infinity();
    for (Complex opt : {kPi - ll.lune, -(kPi - ll.lune), kPi + ll.lune}) {
      const Complex diff = ll.lens - opt;
      const double kk = std::round(diff.real() / (2.0 * kPi));
      best = std::min(best, std::abs(diff - 2.0 * kPi * kk));
    }
    lens_set(best);
  }
  r.add("symmetry", sym.v, 1e-9);
  r.add("antipodal cosh d(-x,y) = -cosh d(x,y)", anti.v, 1e-9);
  r.add("scale invariance", scale.v, 1e-9);
  r.add("<x,y> = ||x|| ||y|| cosh d_H", cor_h.v, 1e-9);
  r.add("<x,y> = ||x|| ||y|| cos d_S", cor_s.v, 1e-9);
  r.add("<x,y> = ||x|| ||y|| cos angle", cor_angle.v, 1e-9);
  r.add("<x,y> = -||x|| ||y|| cos lens", cor_lens.v, 1e-9);
  r.add("lens in {+-(pi - lune), pi + lune}", lens_set.v, 1e-9);
  return r;
}

inline CheckResult check_triangle_properties(const SuiteConfig& cfg = {}, int per_stratum = 200) {
  CheckResult r{"P5", "trig_laws properties", {}, {}};
  Rng rng(cfg.seed ^ 0x15ull);
  detail::MaxOf dual, gram;
  for (Stratum s : kAllStrata) {
    for (int k = 0; k < per_stratum; ++k) {
      const ExtTriangle t = sample_stratum(s, rng);
      dual(verify_dual_relations(t).max_residual());
      gram(verify_gram_reconstruction(t).max_residual());
    }
  }
  r.add("dual triangle relations", dual.v, 1e-8);
  r.add("Gram factor reproduces side and angle data", gram.v, 1e-8);
  return r;
}

// ---------------------------------------------------------------------------

using CheckFn = std::function<CheckResult(const SuiteConfig&)>;

inline std::vector<std::pair<std::string, CheckFn>> acceptance_checks() {
  return {
      {"1", [](const SuiteConfig& c) { return check_length_contour(c); }},
      {"2", [](const SuiteConfig& c) { return check_total_volume(c); }},
      {"3", [](const SuiteConfig& c) { return check_distance_table(c); }},
      {"4", [](const SuiteConfig& c) { return check_trig_laws(c); }},
      {"5", [](const SuiteConfig& c) { return check_sign_machinery(c); }},
      {"6", [](const SuiteConfig& c) { return check_polygons(c); }},
      {"7", [](const SuiteConfig& c) { return check_areas(c); }},
      {"8", [](const SuiteConfig& c) { return check_correspondence(c); }},
      {"9", [](const SuiteConfig& c) { return check_invariance(c); }},
  };
}

inline std::vector<std::pair<std::string, CheckFn>> property_checks() {
  return {
      {"P1", [](const SuiteConfig& c) { return check_lorentz_properties(c); }},
      {"P2", [](const SuiteConfig& c) { return check_branch_properties(c); }},
      {"P3", [](const SuiteConfig& c) { return check_contour_properties(c); }},
      {"P4", [](const SuiteConfig& c) { return check_metric_properties(c); }},
      {"P5", [](const SuiteConfig& c) { return check_triangle_properties(c); }},
  };
}

inline std::vector<CheckResult> run_all(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  for (const auto& [id, fn] : acceptance_checks()) out.push_back(fn(cfg));
  for (const auto& [id, fn] : property_checks()) out.push_back(fn(cfg));
  return out;
}

/// "PASS 3 distance table ... (worst: <case> 1.2e-13 < 1e-09)"
inline std::string summary_line(const CheckResult& r) {
  std::ostringstream os;
  os << (r.pass() ? "PASS " : "FAIL ") << r.id << " " << r.title;
  if (const CaseResult* w = r.worst()) {
    os.precision(3);
    os << " (worst: " << w->name << " " << w->residual;
    if (w->exact) os << " failures";
    else os << (w->pass() ? " < " : " >= ") << w->tolerance;
    os << ")";
  }
  return os.str();
}

inline Json to_json(const CheckResult& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    cases.push_back(Json{{"case", c.name},
                         {"residual", c.residual},
                         {"tolerance", c.tolerance},
                         {"exact", c.exact},
                         {"pass", c.pass()}});
  }
  return Json{{"id", r.id}, {"title", r.title}, {"pass", r.pass()}, {"cases", std::move(cases)}, {"notes", r.notes}};
}

}  // namespace exthyp
