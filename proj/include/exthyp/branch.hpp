#pragma once

// Sign and branch conventions shared by every complex-valued measurement.
//
// A single branch policy is used throughout: principal square root and
// principal logarithm, with negative reals carried to the *upper* side of the
// cut (so sqrt(-4) is 2i, never -2i). Everything downstream relies on this.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <initializer_list>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>

namespace exthyp {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

/// Degenerate or out-of-domain geometric input.
struct GeometryError : std::domain_error {
  using std::domain_error::domain_error;
};

/// A quantity that should be real or pure imaginary turned out genuinely
/// complex. Always indicates an upstream bug, never bad user input.
struct ConventionError : GeometryError {
  using GeometryError::GeometryError;
};

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// +1 or -1.
class SignValue {
 public:
  static constexpr SignValue plus() { return SignValue(1); }
  static constexpr SignValue minus() { return SignValue(-1); }
  static constexpr SignValue of(bool positive) { return SignValue(positive ? 1 : -1); }

  constexpr int value() const { return v_; }
  constexpr bool positive() const { return v_ > 0; }

  friend constexpr SignValue operator*(SignValue a, SignValue b) { return SignValue(a.v_ * b.v_); }
  friend constexpr SignValue operator-(SignValue a) { return SignValue(-a.v_); }
  friend constexpr bool operator==(SignValue, SignValue) = default;

 private:
  constexpr explicit SignValue(int v) : v_(v) {}
  int v_;
};

/// Square root of a real number; negative input maps to the positive
/// imaginary axis.
inline Complex sqrt_conv(double a) {
  return a >= 0.0 ? Complex(std::sqrt(a), 0.0) : Complex(0.0, std::sqrt(-a));
}

/// Relative size below which a component of a complex number is treated as
/// absent when deciding whether it lies on the real or imaginary axis.
inline constexpr double kAxisTolerance = 1e-9;

/// Sign of a nonzero real or pure-imaginary number: +1 for positive real or
/// positive imaginary, -1 for negative real or negative imaginary.
///
/// Note sgn(ab) != sgn(a) sgn(b) in general: sgn(i*i) = -1.
inline SignValue sgn(Complex a, double rel_tol = kAxisTolerance) {
  const double mag = std::abs(a);
  if (!(mag > 0.0) || !std::isfinite(mag)) {
    throw ConventionError("sgn: argument is zero or not finite");
  }
  if (std::abs(a.imag()) <= rel_tol * mag) return SignValue::of(a.real() > 0.0);
  if (std::abs(a.real()) <= rel_tol * mag) return SignValue::of(a.imag() > 0.0);
  throw ConventionError("sgn: argument is neither real nor pure imaginary");
}

inline SignValue sgn(double a) {
  if (a == 0.0 || !std::isfinite(a)) throw ConventionError("sgn: argument is zero or not finite");
  return SignValue::of(a > 0.0);
}

/// Many-argument sign msgn(a_1..a_k) = sqrt(a_1)...sqrt(a_k) / sqrt(a_1...a_k),
/// evaluated by the closed form (-1)^floor(alpha/2), alpha = number of
/// negative arguments.
inline SignValue msgn(std::span<const double> args) {
  int negatives = 0;
  for (double a : args) {
    if (a == 0.0) throw GeometryError("msgn: zero argument");
    if (a < 0.0) ++negatives;
  }
  return SignValue::of((negatives / 2) % 2 == 0);
}

inline SignValue msgn(std::initializer_list<double> args) {
  return msgn(std::span<const double>(args.begin(), args.size()));
}

/// msgn evaluated literally as a ratio of square roots. Used to cross-check
/// the closed form; magnitudes are normalized so long argument lists do not
/// overflow.
inline SignValue msgn_by_roots(std::span<const double> args) {
  Complex numerator{1.0, 0.0};
  double product = 1.0;
  for (double a : args) {
    if (a == 0.0) throw GeometryError("msgn: zero argument");
    const double unit = a > 0.0 ? 1.0 : -1.0;
    numerator *= sqrt_conv(unit);
    product *= unit;
  }
  return sgn(numerator / sqrt_conv(product));
}

inline SignValue msgn_by_roots(std::initializer_list<double> args) {
  return msgn_by_roots(std::span<const double>(args.begin(), args.size()));
}

/// exact element of {1, i, -1, -i}, stored as the exponent k of i^k.
/// Lets sign identities over norms like ||v|| in {1, i} be evaluated with no
/// rounding.
class QuarterTurn {
 public:
  constexpr QuarterTurn() = default;
  static constexpr QuarterTurn power(int k) { return QuarterTurn(((k % 4) + 4) % 4); }
  /// sqrt_conv of a nonzero real with the given sign.
  static constexpr QuarterTurn root_of_sign(int s) { return QuarterTurn(s > 0 ? 0 : 1); }
  static constexpr QuarterTurn real_sign(int s) { return QuarterTurn(s > 0 ? 0 : 2); }

  constexpr int exponent() const { return k_; }
  constexpr SignValue sgn() const { return SignValue::of(k_ < 2); }
  constexpr bool is_real() const { return k_ % 2 == 0; }

  friend constexpr QuarterTurn operator*(QuarterTurn a, QuarterTurn b) { return power(a.k_ + b.k_); }
  friend constexpr QuarterTurn operator-(QuarterTurn a) { return power(a.k_ + 2); }
  constexpr QuarterTurn pow(int e) const { return power(k_ * e); }
  friend constexpr bool operator==(QuarterTurn, QuarterTurn) = default;

  Complex value() const {
    constexpr Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[k_];
  }

 private:
  constexpr explicit QuarterTurn(int k) : k_(k) {}
  int k_ = 0;
};

namespace detail {
inline Complex positive_zero_imag(Complex q) {
  return q.imag() == 0.0 ? Complex(q.real(), 0.0) : q;
}
}  // namespace detail

/// Preimage of cosh: z with cosh z = q, via log(q + sqrt(q-1) sqrt(q+1)).
///
/// For real q (and q in the closed upper half-plane) the result has
/// Re z >= 0 and Im z in [0, pi]: cosh(1) -> 1, 0 -> pi i/2,
/// -cosh(1) -> 1 + pi i. For Im q < 0 the imaginary part is in (-pi, 0).
inline Complex arccosh_strip(Complex q) {
  q = detail::positive_zero_imag(q);
  const Complex one{1.0, 0.0};
  return std::log(q + std::sqrt(q - one) * std::sqrt(q + one));
}

inline Complex arccosh_strip(double q) { return arccosh_strip(Complex(q, 0.0)); }

}  // namespace exthyp
