#pragma once

// Singular radial integrals along the clockwise contour: the path from a to b
// on the real line that passes over the pole at r = 1 on a small upper
// semicircle.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "exthyp/branch.hpp"

namespace exthyp {

enum class Orientation { Clockwise, Counterclockwise };

inline const char* to_string(Orientation o) { return o == Orientation::Clockwise ? "clockwise" : "counterclockwise"; }

inline Orientation parse_orientation(const std::string& s) {
  if (s == "clockwise" || s == "cw") return Orientation::Clockwise;
  if (s == "counterclockwise" || s == "ccw") return Orientation::Counterclockwise;
  throw std::invalid_argument("unknown orientation '" + s + "'");
}

struct NotImplementedError : std::logic_error {
  using std::logic_error::logic_error;
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Integration path. b may be +infinity. delta is the detour radius; when
/// unset a default of min(1e-2, gap / 4) is used, gap being the distance from
/// the pole to the nearer endpoint.
struct ContourSpec {
  double a = 0.0;
  double b = 0.0;
  std::optional<double> delta;
  Orientation orientation = Orientation::Clockwise;
  double tolerance = 1e-13;  // relative target for each adaptive segment
  unsigned max_depth = 18;

  bool crosses_pole() const { return a < 1.0 && b > 1.0; }

  double gap() const { return std::min(1.0 - a, b - 1.0); }

  double detour_radius() const {
    if (!crosses_pole()) return 0.0;
    return delta.value_or(std::min(1e-2, gap() / 4.0));
  }

  void validate() const {
    if (orientation == Orientation::Counterclockwise) {
      throw NotImplementedError("counterclockwise contour: not implemented");
    }
    if (!std::isfinite(a) || std::isnan(b) || b == -kInfinity) throw std::invalid_argument("contour: bad endpoints");
    if (!(a < b)) throw std::invalid_argument("contour: need a < b");
    if (a == 1.0 || b == 1.0) throw GeometryError("contour: endpoint at the pole r = 1");
    if (b == kInfinity && a > 1.0) return;
    if (crosses_pole()) {
      const double d = detour_radius();
      if (!(d > 0.0) || !(d < gap() / 2.0)) {
        throw std::invalid_argument("contour: detour radius must lie in (0, gap/2), gap = " + std::to_string(gap()));
      }
    }
  }
};

/// w^e on the branch continued along the clockwise contour for w = 1 - z^2:
/// the argument lies in [-pi, pi) with the negative real axis sent to -pi.
/// For real r > 1 this gives (1 - r^2)^{1/2} = -i sqrt(r^2 - 1).
inline Complex contour_power(Complex w, double e) {
  if (w == Complex(0.0, 0.0)) throw GeometryError("contour_power: zero base");
  double arg = std::arg(w);
  if (arg >= kPi) arg = -kPi;
  return std::polar(std::pow(std::abs(w), e), e * arg);
}

using ContourIntegrand = std::function<Complex(Complex)>;

namespace detail {

template <unsigned Points = 15>
Complex gk_segment(const std::function<Complex(double)>& g, double lo, double hi, const ContourSpec& spec) {
  double err = 0.0;
  const Complex v = boost::math::quadrature::gauss_kronrod<double, Points>::integrate(g, lo, hi, spec.max_depth,
                                                                                     spec.tolerance, &err);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()) || err > 1e-8 * std::max(1.0, std::abs(v))) {
    throw GeometryError("contour quadrature did not converge (error estimate " + std::to_string(err) + ")");
  }
  return v;
}

/// Real segment [lo, hi] with hi possibly infinite. Beyond r = 2 lo the
/// variable r = 1/s is used, so long and infinite tails stay well resolved.
inline Complex real_segment(const ContourIntegrand& f, double lo, double hi, const ContourSpec& spec) {
  auto direct = [&](double r) { return f(Complex(r, 0.0)); };
  auto inverted = [&](double s) { return f(Complex(1.0 / s, 0.0)) / (s * s); };
  if (hi == kInfinity && lo <= 0.0) throw std::invalid_argument("contour: infinite segment must start at r > 0");
  if (lo <= 0.0 || hi <= 2.0 * lo) return gk_segment(direct, lo, hi, spec);
  const double m = 2.0 * lo;
  return gk_segment(direct, lo, m, spec) + gk_segment(inverted, hi == kInfinity ? 0.0 : 1.0 / hi, 1.0 / m, spec);
}

}  // namespace detail

/// Integral of f along the clockwise contour. f is evaluated at complex z on
/// the semicircle and at real z elsewhere; it must pick its own branch (see
/// contour_power).
inline Complex integrate_contour(const ContourIntegrand& f, const ContourSpec& spec) {
  spec.validate();
  if (!spec.crosses_pole()) return detail::real_segment(f, spec.a, spec.b, spec);
  const double d = spec.detour_radius();
  Complex total = detail::real_segment(f, spec.a, 1.0 - d, spec);
  // z = 1 + d e^{i t}, t from pi down to 0.
  total -= detail::gk_segment(
      [&](double t) {
        const Complex e = std::polar(1.0, t);
        return f(1.0 + d * e) * (kI * d * e);
      },
      0.0, kPi, spec);
  total += detail::real_segment(f, 1.0 + d, spec.b, spec);
  return total;
}

/// Closed-form length from the centre: atanh(b) inside the unit disc,
/// acoth(b) + pi i / 2 outside, pi i / 2 at infinity.
inline Complex length_1d(double b) {
  if (!(b >= 0.0)) throw std::invalid_argument("length_1d: need b >= 0");
  if (b == 1.0) throw GeometryError("length_1d: divergent at b = 1");
  if (b == kInfinity) return {0.0, kPi / 2.0};
  if (b < 1.0) return {std::atanh(b), 0.0};
  return {0.5 * std::log1p(2.0 / (b - 1.0)), kPi / 2.0};
}

inline Complex length_1d_contour(double b, std::optional<double> delta = std::nullopt) {
  if (b == 0.0) return {0.0, 0.0};
  ContourSpec spec{0.0, b, delta};
  return integrate_contour([](Complex z) { return 1.0 / (1.0 - z * z); }, spec);
}

/// Angular measure F(r) of the radial slice of a domain in K^n.
struct RadialProfile {
  int n = 2;
  std::function<Complex(Complex)> F = [](Complex) { return Complex(2.0 * kPi, 0.0); };

  static RadialProfile constant(int n, double value) {
    return {n, [value](Complex) { return Complex(value, 0.0); }};
  }
};

/// Volume of the Klein-model ball of radius b (b may be infinite, covering one
/// hemisphere of the extended space).
inline Complex volume_radial(const RadialProfile& profile, double b, std::optional<double> delta = std::nullopt) {
  if (profile.n < 1) throw std::invalid_argument("volume_radial: need n >= 1");
  if (!(b >= 0.0)) throw std::invalid_argument("volume_radial: need b >= 0");
  if (b == 0.0) return {0.0, 0.0};
  const int n = profile.n;
  const double e = -(n + 1) / 2.0;
  ContourSpec spec{0.0, b, delta};
  return integrate_contour(
      [&](Complex z) { return std::pow(z, n - 1) * profile.F(z) * contour_power(1.0 - z * z, e); }, spec);
}

/// Volume of one hemisphere of the extended sphere model in dimension n
/// measured with the spherical metric: (-i)^n times the hyperbolic value.
inline Complex spherical_from_hyperbolic(Complex vol_h, int n) {
  return QuarterTurn::power(-n).value() * vol_h;
}

/// Cross-check path: the same radial integral with the pole moved off the
/// real axis to d = 1 - eps i, integrated along the real line.
inline Complex volume_radial_eps(const RadialProfile& profile, double b, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("volume_radial_eps: need eps > 0");
  if (!(b > 0.0) || !std::isfinite(b)) throw std::invalid_argument("volume_radial_eps: need finite b > 0");
  const int n = profile.n;
  const Complex d{1.0, -eps};
  const double e = -(n + 1) / 2.0;
  auto g = [&](double r) {
    const Complex z{r, 0.0};
    return d * std::pow(z, n - 1) * profile.F(z) * std::pow(d * d - z * z, e);
  };
  ContourSpec spec{0.0, b, std::nullopt};
  spec.tolerance = 1e-11;
  spec.max_depth = 30;
  if (b <= 1.0) return detail::gk_segment<61>(g, 0.0, b, spec);
  // Break around the near-pole so the adaptive refinement sees the peak.
  const double w = std::min(0.5, (b - 1.0) / 2.0);
  return detail::gk_segment<61>(g, 0.0, 1.0 - w, spec) + detail::gk_segment<61>(g, 1.0 - w, 1.0, spec) +
         detail::gk_segment<61>(g, 1.0, 1.0 + w, spec) + detail::gk_segment<61>(g, 1.0 + w, b, spec);
}

}  // namespace exthyp
