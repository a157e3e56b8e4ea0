#pragma once

// Right-angled hyperbolic and de Sitter polygons treated as general triangles
// of the extended space.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "exthyp/random.hpp"
#include "exthyp/triangle.hpp"

namespace exthyp {

enum class PolygonFamily { LambertQuadH, RightHexagonH, OppositeRightQuadH, LambertQuadDS, RightPentagonDS };

inline constexpr std::array<PolygonFamily, 5> kAllFamilies{PolygonFamily::LambertQuadH, PolygonFamily::RightHexagonH,
                                                           PolygonFamily::OppositeRightQuadH,
                                                           PolygonFamily::LambertQuadDS, PolygonFamily::RightPentagonDS};

inline const char* to_string(PolygonFamily f) {
  switch (f) {
    case PolygonFamily::LambertQuadH: return "LambertQuadH";
    case PolygonFamily::RightHexagonH: return "RightHexagonH";
    case PolygonFamily::OppositeRightQuadH: return "OppositeRightQuadH";
    case PolygonFamily::LambertQuadDS: return "LambertQuadDS";
    case PolygonFamily::RightPentagonDS: return "RightPentagonDS";
  }
  return "?";
}

inline PolygonFamily parse_family(const std::string& s) {
  for (PolygonFamily f : kAllFamilies)
    if (s == to_string(f)) return f;
  throw std::invalid_argument("unknown polygon family '" + s + "'");
}

/// How the triangle's measured sides and angles encode the polygon:
/// written in polygon variables, listed in the order the family states them.
inline const char* shift_signature(PolygonFamily f) {
  switch (f) {
    case PolygonFamily::LambertQuadH:
      return "sides 12,23,31 = a+(pi/2)i, c, b+(pi/2)i; angles 1,2,3 = -di, B, A";
    case PolygonFamily::RightHexagonH:
      return "sides 23,13,12 = a+pi i, b+pi i, c+pi i; angles 1,2,3 = -Ai, -Bi, -Ci";
    case PolygonFamily::OppositeRightQuadH:
      return "sides 13,35,15 = a+(pi/2)i, b+(pi/2)i, (pi-B)i; angles 1,5,3 = pi/2-di, pi/2-ci, A";
    case PolygonFamily::LambertQuadDS:
      return "spherical sides 12,13,23 = ai+pi/2, ci+pi/2, d; angles 1,2,3 = b, pi/2, phi";
    case PolygonFamily::RightPentagonDS:
      return "spherical sides 12,13,23 = ai+pi/2, ei+pi/2, ci+pi; angles 1,2,3 = phi, b, d";
  }
  return "?";
}

/// One sampled polygon measured as a triangle.
struct PolygonSample {
  std::array<MinkowskiVector, 3> vertices;
  ExtTriangle triangle;
  std::map<std::string, Complex> params;  // polygon variables read off the triangle
  LawReport shift;                        // offsets of the shift signature
  LawReport identities;
  std::vector<std::pair<std::string, double>> inequalities;  // margins, > 0 when the inequality holds
  bool mirror = false;
};

namespace detail {

inline double re(Complex z) { return z.real(); }
inline double im(Complex z) { return z.imag(); }

/// Moves a canonical configuration by a random isometry and rescales each
/// vertex; the polygon is unchanged.
inline std::array<MinkowskiVector, 3> scatter(const std::array<MinkowskiVector, 3>& v, Rng& rng) {
  const LorentzIsometry g = random_isometry(2, rng, 2.0);
  return {uniform(rng, 0.5, 2.0) * apply_isometry(g, v[0]), uniform(rng, 0.5, 2.0) * apply_isometry(g, v[1]),
          uniform(rng, 0.5, 2.0) * apply_isometry(g, v[2])};
}

inline std::array<MinkowskiVector, 3> canonical_vertices(PolygonFamily f, Rng& rng) {
  const auto U = [&](double lo, double hi) { return uniform(rng, lo, hi); };
  switch (f) {
    case PolygonFamily::LambertQuadH: {
      // Vertices 2 and 3 sit above the feet Q, P on the geodesic x_2 = 0, at
      // heights a and b; vertex 1 is the pole of that geodesic.
      const double a = U(0.1, 2.0), b = U(0.1, 2.0), p = U(-1.0, 1.0), d = U(0.1, 2.0), q = p + d;
      const MinkowskiVector e2{0.0, 0.0, 1.0};
      const MinkowskiVector qf{std::cosh(q), std::sinh(q), 0.0}, pf{std::cosh(p), std::sinh(p), 0.0};
      return {-e2, std::cosh(a) * qf + std::sinh(a) * e2, std::cosh(b) * pf + std::sinh(b) * e2};
    }
    case PolygonFamily::RightHexagonH: {
      const double a = U(0.1, 2.0), b = U(0.1, 2.0), c = U(0.1, 2.0);
      Eigen::Matrix3d g;
      g << 1, -std::cosh(c), -std::cosh(b), -std::cosh(c), 1, -std::cosh(a), -std::cosh(b), -std::cosh(a), 1;
      return gram_factor(g);
    }
    case PolygonFamily::OppositeRightQuadH: {
      // Vertices 1 and 5 are poles of two geodesics through the origin at
      // angle pi - B; vertex 3 is a hyperbolic point on the correct side of both.
      for (int tries = 0; tries < 10000; ++tries) {
        const double B = U(0.1, kPi - 0.1), t1 = U(0.0, 2.0 * kPi), t5 = t1 + (kPi - B);
        const MinkowskiVector n1{0.0, std::cos(t1), std::sin(t1)}, n5{0.0, std::cos(t5), std::sin(t5)};
        const double r = U(0.0, 0.9), th = U(0.0, 2.0 * kPi);
        const MinkowskiVector x0{1.0, r * std::cos(th), r * std::sin(th)};
        const MinkowskiVector x = (1.0 / abs_norm(x0)) * x0;
        if (inner_product(x, n1) < 0.0 && inner_product(x, n5) < 0.0) return {n1, x, n5};
      }
      throw std::runtime_error("OppositeRightQuadH: rejection sampling failed");
    }
    case PolygonFamily::LambertQuadDS: {
      const double a = U(0.1, 2.0), d = U(0.1, kPi / 2.0 - 0.1), c = std::asinh(std::cos(d) * std::sinh(a));
      Eigen::Matrix3d g;
      g << -1, std::sinh(a), std::sinh(c), std::sinh(a), 1, std::cos(d), std::sinh(c), std::cos(d), 1;
      return gram_factor(g);
    }
    case PolygonFamily::RightPentagonDS: {
      // A valid pentagon needs c > a + e (negative Gram determinant).
      const double a = U(0.1, 1.5), e = U(0.1, 1.5), c = U(a + e + 0.1, a + e + 2.0);
      Eigen::Matrix3d g;
      g << 1, std::sinh(a), std::sinh(e), std::sinh(a), -1, std::cosh(c), std::sinh(e), std::cosh(c), -1;
      return gram_factor(g);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace detail

inline PolygonSample measure_polygon(PolygonFamily f, const std::array<MinkowskiVector, 3>& v) {
  using detail::im;
  using detail::re;
  const ExtTriangle t = measure_triangle(v[0], v[1], v[2]);
  PolygonSample s{v, t, {}, {}, {}, {}, false};
  auto& P = s.params;
  auto& L = s.identities;
  auto& S = s.shift;
  S.stratum = L.stratum = to_string(f);
  const Complex i = kI;
  const double half_pi = kPi / 2.0;
  auto id = [&](const std::string& name, Complex lhs, Complex rhs) { L.add(name, std::abs(lhs - rhs)); };
  using std::cos, std::cosh, std::sin, std::sinh;

  switch (f) {
    case PolygonFamily::LambertQuadH: {
      const Complex s12 = t.c(), s23 = t.a(), s31 = t.b();
      S.add("im_12", std::abs(im(s12) - half_pi));
      S.add("im_23", std::abs(im(s23)));
      S.add("im_31", std::abs(im(s31) - half_pi));
      S.add("re_angle1", std::abs(re(t.A())));
      S.add("im_angle2", std::abs(im(t.B())));
      S.add("im_angle3", std::abs(im(t.C())));
      const double a = re(s12), b = re(s31), c = re(s23), d = -im(t.A()), B = re(t.B()), A = re(t.C());
      P = {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"A", A}, {"B", B}};
      id("cosh_d", cosh(d), (sinh(a) * sinh(b) + cosh(c)) / (cosh(a) * cosh(b)));
      id("cos_A", cos(A), (cosh(c) * sinh(b) - sinh(a)) / (sinh(c) * cosh(b)));
      id("sinh_a", sinh(a), (cos(B) * cosh(d) + cos(A)) / (sin(B) * sinh(d)));
      id("cosh_c", cosh(c), (cos(A) * cos(B) + cosh(d)) / (sin(A) * sin(B)));
      id("sine_ratio_ab", cosh(a) / sin(A), cosh(b) / sin(B));
      id("sine_ratio_bc", cosh(b) / sin(B), sinh(c) / sinh(d));
      break;
    }
    case PolygonFamily::RightHexagonH: {
      for (int k = 0; k < 3; ++k) {
        S.add(std::string("im_side_") + "abc"[k], std::abs(im(t.side(k)) - kPi));
        S.add(std::string("re_angle_") + "ABC"[k], std::abs(re(t.angles[static_cast<std::size_t>(k)])));
      }
      const double a = re(t.a()), b = re(t.b()), c = re(t.c());
      const double A = -im(t.A()), B = -im(t.B()), C = -im(t.C());
      P = {{"a", a}, {"b", b}, {"c", c}, {"A", A}, {"B", B}, {"C", C}};
      id("cosh_C", cosh(C), (cosh(a) * cosh(b) + cosh(c)) / (sinh(a) * sinh(b)));
      id("cosh_c", cosh(c), (cosh(A) * cosh(B) + cosh(C)) / (sinh(A) * sinh(B)));
      id("sine_ratio_ab", sinh(a) / sinh(A), sinh(b) / sinh(B));
      id("sine_ratio_bc", sinh(b) / sinh(B), sinh(c) / sinh(C));
      break;
    }
    case PolygonFamily::OppositeRightQuadH: {
      // Vertex order (1, 3, 5): sides a = d(3,5), b = d(1,5), c = d(1,3).
      const Complex s13 = t.c(), s35 = t.a(), s15 = t.b();
      const Complex ang1 = t.A(), ang3 = t.B(), ang5 = t.C();
      S.add("im_13", std::abs(im(s13) - half_pi));
      S.add("im_35", std::abs(im(s35) - half_pi));
      S.add("re_15", std::abs(re(s15)));
      S.add("re_angle1", std::abs(re(ang1) - half_pi));
      S.add("re_angle5", std::abs(re(ang5) - half_pi));
      S.add("im_angle3", std::abs(im(ang3)));
      const double a = re(s13), b = re(s35), B = kPi - im(s15), d = -im(ang1), c = -im(ang5), A = re(ang3);
      P = {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"A", A}, {"B", B}};
      s.mirror = !(c > 0.0 && d > 0.0);
      id("cos_A", cos(A), (sinh(a) * sinh(b) - cos(B)) / (cosh(a) * cosh(b)));
      id("sinh_a", sinh(a), (cos(A) * sinh(d) + sinh(c)) / (sin(A) * cosh(d)));
      id("sine_ratio_Ba", sin(B) / sin(A), cosh(a) / cosh(c));
      id("sine_ratio_ab", cosh(a) / cosh(c), cosh(b) / cosh(d));
      break;
    }
    case PolygonFamily::LambertQuadDS: {
      const Complex s12 = t.spherical_side(2), s13 = t.spherical_side(1), s23 = t.spherical_side(0);
      S.add("re_12", std::abs(re(s12) - half_pi));
      S.add("re_13", std::abs(re(s13) - half_pi));
      S.add("im_23", std::abs(im(s23)));
      S.add("angle2", std::abs(t.B() - half_pi));
      S.add("im_angle1", std::abs(im(t.A())));
      const double a = im(s12), c = im(s13), d = re(s23), b = re(t.A());
      const Complex phi = t.C();
      P = {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"phi", phi}};
      id("cosine_cos_b", cos(b), (sinh(a) * sinh(c) + cos(d)) / (cosh(a) * cosh(c)));
      id("cosine_cos_phi", cos(phi), -i * (sinh(a) - sinh(c) * cos(d)) / (cosh(c) * sin(d)));
      id("cosine_sinh_c", sinh(c), cos(d) * sinh(a));
      id("dual_cos_b", cos(b), cos(d) * sin(phi));
      id("dual_cos_phi", cos(phi), -i * sinh(a) * sin(b));
      // Only sinh c satisfies this relation; sinh a does not.
      id("dual_sinh_c", sinh(c), i * (cos(b) / sin(b)) * (cos(phi) / sin(phi)));
      id("sine_ratio_db", sin(d) / sin(b), cosh(c));
      id("sine_ratio_c_phi", cosh(c), cosh(a) / sin(phi));
      s.inequalities.emplace_back("sinh_a_gt_sinh_c_cos_d", std::sinh(a) - std::sinh(c) * std::cos(d));
      break;
    }
    case PolygonFamily::RightPentagonDS: {
      const Complex s12 = t.spherical_side(2), s13 = t.spherical_side(1), s23 = t.spherical_side(0);
      S.add("re_12", std::abs(re(s12) - half_pi));
      S.add("re_13", std::abs(re(s13) - half_pi));
      S.add("re_23", std::abs(re(s23) - kPi));
      S.add("im_angle2", std::abs(im(t.B())));
      S.add("im_angle3", std::abs(im(t.C())));
      const double a = im(s12), e = im(s13), c = im(s23), b = re(t.B()), d = re(t.C());
      const Complex phi = t.A();
      P = {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"e", e}, {"phi", phi}};
      id("cosine_cos_b", cos(b), (sinh(a) * cosh(c) + sinh(e)) / (cosh(a) * sinh(c)));
      id("cosine_cos_d", cos(d), (sinh(e) * cosh(c) + sinh(a)) / (cosh(e) * sinh(c)));
      id("cosine_cos_phi", cos(phi), (sinh(a) * sinh(e) - cosh(c)) / (cosh(a) * cosh(e)));
      id("dual_cosh_c", -cosh(c), (cos(b) * cos(d) + cos(phi)) / (sin(b) * sin(d)));
      id("dual_sinh_a", -i * sinh(a), (cos(b) * cos(phi) + cos(d)) / (sin(b) * sin(phi)));
      id("dual_sinh_e", -i * sinh(e), (cos(d) * cos(phi) + cos(b)) / (sin(d) * sin(phi)));
      id("sine_ratio_c_phi", -i * sinh(c) / sin(phi), cosh(e) / sin(b));
      id("sine_ratio_eb", cosh(e) / sin(b), cosh(a) / sin(d));
      s.inequalities.emplace_back("sinh_a_sinh_e_lt_cosh_c", std::cosh(c) - std::sinh(a) * std::sinh(e));
      s.inequalities.emplace_back("b_lt_half_pi", half_pi - b);
      s.inequalities.emplace_back("d_lt_half_pi", half_pi - d);
      break;
    }
  }
  return s;
}

inline PolygonSample sample_configuration(PolygonFamily f, Rng& rng) {
  return measure_polygon(f, detail::scatter(detail::canonical_vertices(f, rng), rng));
}

struct PolygonReport {
  PolygonFamily family;
  int samples = 0;
  int mirror_samples = 0;
  std::map<std::string, double> identity_max;  // worst residual per identity
  double shift_max = 0.0;
  std::map<std::string, double> inequality_min;  // smallest margin per inequality

  double identity_worst() const {
    double m = 0.0;
    for (const auto& [k, v] : identity_max) m = std::max(m, v);
    return m;
  }

  bool inequalities_hold() const {
    return std::all_of(inequality_min.begin(), inequality_min.end(), [](const auto& kv) { return kv.second > 0.0; });
  }

  bool pass(double identity_tol = 1e-8, double shift_tol = 1e-9) const {
    return samples > 0 && identity_worst() < identity_tol && shift_max < shift_tol && inequalities_hold();
  }
};

inline PolygonReport verify_family(PolygonFamily f, int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("verify_family: samples >= 1");
  Rng rng(seed);
  PolygonReport r{f, 0, 0, {}, 0.0, {}};
  for (int k = 0; k < samples; ++k) {
    const PolygonSample s = sample_configuration(f, rng);
    ++r.samples;
    if (s.mirror) ++r.mirror_samples;
    for (const auto& e : s.identities.entries) {
      double& slot = r.identity_max[e.name];
      slot = std::max(slot, std::isfinite(e.residual) ? e.residual : std::numeric_limits<double>::infinity());
    }
    r.shift_max = std::max(r.shift_max, s.shift.max_residual());
    for (const auto& [name, margin] : s.inequalities) {
      auto it = r.inequality_min.find(name);
      if (it == r.inequality_min.end()) r.inequality_min.emplace(name, margin);
      else it->second = std::min(it->second, margin);
    }
  }
  return r;
}

}  // namespace exthyp
