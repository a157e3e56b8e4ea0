#pragma once

// Seeded samplers for isometries, points and triangle strata.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

#include "exthyp/distance.hpp"
#include "exthyp/lorentz.hpp"
#include "exthyp/triangle.hpp"

namespace exthyp {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

/// Element of the identity component of O(n,1): rotation, boost along x_1
/// with |rapidity| <= max_rapidity, rotation.
inline LorentzIsometry random_isometry(std::size_t n, Rng& rng, double max_rapidity = 5.0) {
  if (n == 0) throw DimensionError("random_isometry: n >= 1");
  LorentzIsometry g = LorentzIsometry::boost(n, 1, uniform(rng, -max_rapidity, max_rapidity));
  for (std::size_t i = 1; i < n; ++i) {
    g = LorentzIsometry::rotation(n, i, i + 1, uniform(rng, 0.0, 2.0 * kPi)) * g;
    g = g * LorentzIsometry::rotation(n, i, i + 1, uniform(rng, 0.0, 2.0 * kPi));
  }
  return g;
}

/// Point of the upper hyperboloid sheet in R^{2,1} at distance <= max_r from
/// (1,0,0).
inline MinkowskiVector random_hyperbolic_point(Rng& rng, double max_r = 1.5) {
  const double r = uniform(rng, 0.0, max_r), t = uniform(rng, 0.0, 2.0 * kPi);
  return {std::cosh(r), std::sinh(r) * std::cos(t), std::sinh(r) * std::sin(t)};
}

/// Unit spacelike vector of R^{2,1} with |x_0| <= sinh(max_r).
inline MinkowskiVector random_de_sitter_point(Rng& rng, double max_r = 1.5) {
  const double r = uniform(rng, -max_r, max_r), t = uniform(rng, 0.0, 2.0 * kPi);
  return {std::sinh(r), std::cosh(r) * std::cos(t), std::cosh(r) * std::sin(t)};
}

enum class Stratum { TTT, TTS, TSS, SSSSecant, SSSElliptic };

inline constexpr std::array<Stratum, 5> kAllStrata{Stratum::TTT, Stratum::TTS, Stratum::TSS, Stratum::SSSSecant,
                                                   Stratum::SSSElliptic};

inline const char* to_string(Stratum s) {
  switch (s) {
    case Stratum::TTT: return "TTT";
    case Stratum::TTS: return "TTS";
    case Stratum::TSS: return "TSS";
    case Stratum::SSSSecant: return "SSS/secant";
    case Stratum::SSSElliptic: return "SSS/elliptic";
  }
  return "?";
}

/// Rejects triangles too close to a degeneracy for residuals at the 1e-8
/// level to be meaningful: tiny sinh of a side or sin of an angle, nearly
/// lightlike duals, or side pairs near the tangent case.
inline bool well_conditioned(const ExtTriangle& t, double margin = 0.05) {
  if (t.ideal || !t.w_geo_valid) return false;
  for (int k = 0; k < 3; ++k) {
    if (!t.side_finite(k)) return false;
    if (std::abs(std::sinh(t.side(k))) < margin) return false;
    if (std::abs(std::sin(t.angles[static_cast<std::size_t>(k)])) < margin) return false;
    const auto K = static_cast<std::size_t>(k);
    if (std::abs(t.w_norm_sq[K]) < margin * t.w[K].euclidean_norm_sq()) return false;
    if (std::abs(t.v_norm_sq[K]) < margin * t.v[K].euclidean_norm_sq()) return false;
  }
  return true;
}

/// Random well-conditioned triangle in the given stratum, moved by a random
/// isometry and with each vertex rescaled by a positive factor.
inline ExtTriangle sample_stratum(Stratum s, Rng& rng, double max_rapidity = 2.0, int max_tries = 100000) {
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    std::array<std::optional<MinkowskiVector>, 3> p;
    auto t = [&] { return random_hyperbolic_point(rng); };
    auto d = [&](double r = 1.5) { return random_de_sitter_point(rng, r); };
    switch (s) {
      case Stratum::TTT: p = {t(), t(), t()}; break;
      case Stratum::TTS: p = {t(), t(), d()}; break;
      case Stratum::TSS: p = {t(), d(), d()}; break;
      case Stratum::SSSSecant: p = {d(), d(), d()}; break;
      case Stratum::SSSElliptic: p = {d(0.4), d(0.4), d(0.4)}; break;
    }
    const LorentzIsometry g = random_isometry(2, rng, max_rapidity);
    std::array<std::optional<MinkowskiVector>, 3> q;
    for (std::size_t i = 0; i < 3; ++i) q[i] = uniform(rng, 0.5, 2.0) * apply_isometry(g, *p[i]);
    std::shuffle(q.begin(), q.end(), rng);
    try {
      ExtTriangle tri = measure_triangle(*q[0], *q[1], *q[2]);
      if (!well_conditioned(tri)) continue;
      const std::string want = to_string(s);
      if (tri.stratum.name() != want) continue;
      return tri;
    } catch (const GeometryError&) {
      continue;
    }
  }
  throw std::runtime_error(std::string("sample_stratum: no sample found for ") + to_string(s));
}

}  // namespace exthyp
