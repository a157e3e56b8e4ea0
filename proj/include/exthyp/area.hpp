#pragma once

// Triangle areas: angle defect, the cosine-law form S1 and the half-perimeter
// form S2, plus the hyperbolic/spherical correspondence checks.

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "exthyp/branch.hpp"
#include "exthyp/lorentz.hpp"
#include "exthyp/triangle.hpp"

namespace exthyp {

/// pi - (A + B + C) on the hyperbolic model, A + B + C - pi on the spherical one.
inline Complex area_defect(const std::array<Complex, 3>& angles, Model model) {
  const Complex sum = angles[0] + angles[1] + angles[2];
  return model == Model::HyperbolicSphere ? kPi - sum : sum - kPi;
}

inline Complex area_defect(const ExtTriangle& t, Model model) { return area_defect(t.angles, model); }

/// Angle opposite side x from the cosine law, in the given model's lengths.
inline Complex cosine_law_angle(Complex x, Complex y, Complex z, Model model) {
  const Complex c = model == Model::HyperbolicSphere
                        ? (std::cosh(y) * std::cosh(z) - std::cosh(x)) / (std::sinh(y) * std::sinh(z))
                        : (std::cos(x) - std::cos(y) * std::cos(z)) / (std::sin(y) * std::sin(z));
  Complex a = std::acos(c);
  // Real arguments in [-1, 1] should give a real angle; keep the imaginary
  // rounding out of the area.
  if (c.imag() == 0.0 && std::abs(c.real()) <= 1.0) a = {std::acos(c.real()), 0.0};
  return a;
}

/// S1: the angle defect with each angle taken from the cosine law.
inline Complex area_cosine_law(Complex a, Complex b, Complex c, Model model) {
  return area_defect({cosine_law_angle(a, b, c, model), cosine_law_angle(b, c, a, model),
                      cosine_law_angle(c, a, b, model)},
                     model);
}

/// tanh(p/2) tanh((p-a)/2) tanh((p-b)/2) tanh((p-c)/2) with p = (a+b+c)/2,
/// tan in place of tanh on the spherical model.
inline Complex half_perimeter_product(Complex a, Complex b, Complex c, Model model) {
  const Complex p = (a + b + c) / 2.0;
  const std::array<Complex, 4> args{p / 2.0, (p - a) / 2.0, (p - b) / 2.0, (p - c) / 2.0};
  Complex prod{1.0, 0.0};
  for (const Complex& u : args) {
    const Complex den = model == Model::HyperbolicSphere ? std::cosh(u) : std::cos(u);
    if (std::abs(den) < 1e-12) throw GeometryError("area_sides: half-perimeter factor at a pole");
    prod *= (model == Model::HyperbolicSphere ? std::sinh(u) : std::sin(u)) / den;
  }
  return prod;
}

/// S2 = 4 atan(sqrt(product)), principal branches. For classical triangles the
/// product is positive real and S2 is the real positive area.
inline Complex area_sides(Complex a, Complex b, Complex c, Model model) {
  const Complex prod = half_perimeter_product(a, b, c, model);
  if (prod.imag() == 0.0 && prod.real() >= 0.0) return {4.0 * std::atan(std::sqrt(prod.real())), 0.0};
  return 4.0 * std::atan(std::sqrt(prod));
}

inline Complex area_sides(double a, double b, double c, Model model) {
  return area_sides(Complex(a, 0.0), Complex(b, 0.0), Complex(c, 0.0), model);
}

struct AreaComparison {
  Complex s_defect;
  Complex s1;
  Complex s2;
  double diff = 0.0;          // |S1 - S2|
  double diff_reduced = 0.0;  // min over signs and multiples of 2 pi of |S1 -+ S2 - 2 pi k|
};

namespace detail {
inline double reduce_2pi(Complex z) {
  const double k = std::round(z.real() / (2.0 * kPi));
  return std::abs(z - 2.0 * kPi * k);
}
}  // namespace detail

/// Defect, S1 and S2 for a measured triangle in the given model, in that
/// model's own lengths.
inline AreaComparison compare_areas(const ExtTriangle& t, Model model) {
  const bool h = model == Model::HyperbolicSphere;
  const Complex a = h ? t.a() : t.spherical_side(0), b = h ? t.b() : t.spherical_side(1),
                c = h ? t.c() : t.spherical_side(2);
  AreaComparison r;
  r.s_defect = area_defect(t, model);
  r.s1 = area_cosine_law(a, b, c, model);
  r.s2 = area_sides(a, b, c, model);
  r.diff = std::abs(r.s1 - r.s2);
  r.diff_reduced = std::min(detail::reduce_2pi(r.s1 - r.s2), detail::reduce_2pi(r.s1 + r.s2));
  return r;
}

// ---------------------------------------------------------------------------
// Correspondence between the two models: a k-dimensional hyperbolic quantity
// equals i^k times the spherical one, so lengths map by l -> -i l and angles
// stay.

enum class CorrespondenceLaw { Cosine, DualCosine, Sine, Area };

inline const char* to_string(CorrespondenceLaw l) {
  switch (l) {
    case CorrespondenceLaw::Cosine: return "cosine";
    case CorrespondenceLaw::DualCosine: return "dual_cosine";
    case CorrespondenceLaw::Sine: return "sine";
    case CorrespondenceLaw::Area: return "area";
  }
  return "?";
}

struct CorrespondenceResult {
  double residual = 0.0;  // hyperbolic form at l vs spherical form at -i l
  double symmetry = 0.0;  // spherical form at -i l vs at +i l
};

namespace detail {
inline double rel(Complex x, Complex y) { return std::abs(x - y) / std::max(1.0, std::abs(x)); }
}  // namespace detail

/// Evaluates the hyperbolic form of a law at the triangle's hyperbolic
/// lengths and the spherical form at lengths -i l, comparing the law's
/// derived quantity (cos of an angle, cosh of a side, the sine ratio, and the
/// half-perimeter product). Residuals are relative to max(1, |value|).
inline CorrespondenceResult correspondence_check(CorrespondenceLaw law, const ExtTriangle& t) {
  if (!(t.side_finite(0) && t.side_finite(1) && t.side_finite(2))) {
    throw GeometryError("correspondence_check: triangle has an infinite side");
  }
  const std::array<Complex, 3> l{t.a(), t.b(), t.c()};
  std::array<Complex, 3> m{}, p{};
  for (std::size_t k = 0; k < 3; ++k) {
    m[k] = -kI * l[k];
    p[k] = kI * l[k];
  }
  CorrespondenceResult r;
  for (int k = 0; k < 3; ++k) {
    const auto K = static_cast<std::size_t>(k), I = static_cast<std::size_t>((k + 1) % 3),
               J = static_cast<std::size_t>((k + 2) % 3);
    switch (law) {
      case CorrespondenceLaw::Cosine: {
        const Complex h = (std::cosh(l[I]) * std::cosh(l[J]) - std::cosh(l[K])) / (std::sinh(l[I]) * std::sinh(l[J]));
        auto sph = [&](const std::array<Complex, 3>& s) {
          return (std::cos(s[K]) - std::cos(s[I]) * std::cos(s[J])) / (std::sin(s[I]) * std::sin(s[J]));
        };
        r.residual = std::max(r.residual, detail::rel(h, sph(m)));
        r.symmetry = std::max(r.symmetry, detail::rel(sph(m), sph(p)));
        break;
      }
      case CorrespondenceLaw::DualCosine: {
        // Angles are shared, so the law corresponds exactly when cosh l = cos(-i l).
        r.residual = std::max(r.residual, detail::rel(std::cosh(l[K]), std::cos(m[K])));
        r.symmetry = std::max(r.symmetry, detail::rel(std::cos(m[K]), std::cos(p[K])));
        break;
      }
      case CorrespondenceLaw::Sine: {
        const Complex sa = std::sin(t.angles[K]);
        const Complex h = std::sinh(l[K]) / sa;
        r.residual = std::max(r.residual, detail::rel(h, kI * std::sin(m[K]) / sa));
        // The ratio is odd in the length; its square is even.
        const Complex sm = std::sin(m[K]) / sa, sp = std::sin(p[K]) / sa;
        r.symmetry = std::max(r.symmetry, detail::rel(sm * sm, sp * sp));
        break;
      }
      case CorrespondenceLaw::Area: {
        if (k > 0) break;
        const Complex h = half_perimeter_product(l[0], l[1], l[2], Model::HyperbolicSphere);
        const Complex sm = half_perimeter_product(m[0], m[1], m[2], Model::SphericalSphere);
        const Complex sp = half_perimeter_product(p[0], p[1], p[2], Model::SphericalSphere);
        r.residual = detail::rel(h, sm);
        r.symmetry = detail::rel(sm, sp);
        break;
      }
    }
  }
  return r;
}

}  // namespace exthyp
