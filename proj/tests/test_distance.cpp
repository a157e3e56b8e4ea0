#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "exthyp/distance.hpp"
#include "exthyp/random.hpp"
#include "exthyp/suite.hpp"

using namespace exthyp;

namespace {
void expect_complex(Complex got, Complex want, double tol = 1e-12) {
  EXPECT_NEAR(got.real(), want.real(), tol) << "got " << got << " want " << want;
  EXPECT_NEAR(got.imag(), want.imag(), tol) << "got " << got << " want " << want;
}

void expect_distance(const MinkowskiVector& x, const MinkowskiVector& y, Complex want, DistanceCase kase,
                     double tol = 1e-12) {
  const ExtDistance d = extended_distance(x, y);
  ASSERT_TRUE(d.finite());
  EXPECT_EQ(d.kase, kase) << to_string(d.kase);
  expect_complex(d.value, want, tol);
}

const double ch = std::cosh(1.0), sh = std::sinh(1.0);
}  // namespace

TEST(ExtendedDistance, Examples) {
  expect_distance({1.0, 0.0}, {ch, sh}, {1.0, 0.0}, DistanceCase::BothTimelike);
  expect_distance({1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, kPi / 2.0}, DistanceCase::TimelikeSpacelike);
  expect_distance({0.0, 1.0}, {sh, ch}, {-1.0, 0.0}, DistanceCase::SpacelikeSecant);
}

TEST(ExtendedDistance, CanonicalTableExamples) {
  for (const auto& p : canonical_distance_examples()) {
    ASSERT_TRUE(p.expected.has_value());
    expect_distance(p.x, p.y, *p.expected, p.kase);
  }
}

TEST(ExtendedDistance, LightlikeCases) {
  const MinkowskiVector l{1.0, 1.0, 0.0};
  expect_distance(l, 2.0 * l, {0.0, 0.0}, DistanceCase::BothLightlike);
  expect_distance(l, -3.0 * l, {0.0, kPi}, DistanceCase::BothLightlike);
  const ExtDistance independent = extended_distance(l, {1.0, -1.0, 0.0});
  EXPECT_TRUE(independent.infinite);
  EXPECT_EQ(independent.kase, DistanceCase::BothLightlike);
  EXPECT_THROW(independent.get(), GeometryError);
  expect_distance(l, {0.4, 0.4, 1.0}, {0.0, kPi / 2.0}, DistanceCase::OneLightlike);
  expect_distance({0.4, 0.4, -1.0}, l, {0.0, kPi / 2.0}, DistanceCase::OneLightlike);
  EXPECT_TRUE(extended_distance(l, {1.0, 0.0, 0.0}).infinite);
  EXPECT_TRUE(extended_distance(l, {0.0, 0.0, 1.0}).finite());
  EXPECT_TRUE(extended_distance(l, {0.0, 1.0, 1.0}).infinite);
}

TEST(ExtendedDistance, LowerSheetFoldsToAntipode) {
  expect_distance({-1.0, 0.0, 0.0}, {ch, sh, 0.0}, {-1.0, kPi}, DistanceCase::BothTimelike);
  expect_distance({-1.0, 0.0, 0.0}, {-ch, -sh, 0.0}, {1.0, 0.0}, DistanceCase::BothTimelike);
}

TEST(ExtendedDistance, ZeroVectorThrows) {
  EXPECT_THROW(extended_distance({0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}), GeometryError);
  EXPECT_THROW(extended_distance({1.0, 0.0}, {1.0, 0.0, 0.0}), DimensionError);
}

TEST(ExtendedDistance, StratifiedPairsMatchConstruction) {
  Rng rng(21);
  constexpr std::array<DistanceCase, 7> cases{
      DistanceCase::BothLightlike,    DistanceCase::OneLightlike,      DistanceCase::BothTimelike,
      DistanceCase::TimelikeSpacelike, DistanceCase::SpacelikeElliptic, DistanceCase::SpacelikeSecant,
      DistanceCase::SpacelikeTangent};
  for (int k = 0; k < 1400; ++k) {
    const DistanceProbe p = random_distance_probe(cases[static_cast<std::size_t>(k % 7)], rng);
    const ExtDistance d = extended_distance(p.x, p.y);
    EXPECT_EQ(d.kase, p.kase);
    ASSERT_EQ(d.infinite, !p.expected.has_value()) << to_string(p.kase);
    if (d.infinite) continue;
    EXPECT_LT(std::abs(d.value - *p.expected), 1e-9 * std::max(1.0, std::abs(*p.expected))) << to_string(p.kase);
    EXPECT_GE(d.value.imag(), -1e-9);
    EXPECT_LE(d.value.imag(), kPi + 1e-9);
  }
}

TEST(ExtendedDistance, IsometryInvariantAtCoshLevel) {
  Rng rng(22);
  for (int k = 0; k < 500; ++k) {
    const MinkowskiVector x = k % 2 ? random_hyperbolic_point(rng) : random_de_sitter_point(rng);
    const MinkowskiVector y = k % 3 ? random_hyperbolic_point(rng) : random_de_sitter_point(rng);
    const LorentzIsometry g = random_isometry(2, rng, 5.0);
    const Complex c0 = std::cosh(extended_distance(x, y).get());
    const Complex c1 = std::cosh(extended_distance(apply_isometry(g, x), apply_isometry(g, y)).get());
    EXPECT_LT(std::abs(c1 - c0), 1e-8 * std::max(1.0, std::abs(c0)));
  }
}

TEST(ExtendedDistance, HigherDimensionalEmbedding) {
  // A pair in R^{2,1} placed in R^{3,1} and moved by a random isometry keeps its distance.
  Rng rng(23);
  for (int k = 0; k < 200; ++k) {
    const MinkowskiVector x = random_hyperbolic_point(rng), y = random_de_sitter_point(rng);
    const MinkowskiVector X{x[0], x[1], x[2], 0.0}, Y{y[0], y[1], y[2], 0.0};
    const LorentzIsometry g = random_isometry(3, rng, 2.0);
    const ExtDistance d2 = extended_distance(x, y), d3 = extended_distance(apply_isometry(g, X), apply_isometry(g, Y));
    EXPECT_EQ(d2.kase, d3.kase);
    EXPECT_LT(std::abs(d2.get() - d3.get()), 1e-9);
  }
}

TEST(SphericalDistance, Examples) {
  expect_complex(spherical_distance({0.0, 1.0, 0.0}, {0.0, std::cos(1.0), std::sin(1.0)}).get(), {1.0, 0.0});
  expect_complex(spherical_distance({1.0, 0.0}, {ch, sh}).get(), {0.0, -1.0});
  expect_complex(spherical_distance({0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}).get(), {kPi / 2.0, 0.0});
  EXPECT_TRUE(spherical_distance({1.0, 1.0, 0.0}, {1.0, 0.0, 0.0}).infinite);
}

TEST(AngleBetween, Examples) {
  expect_complex(angle_between({0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}), {kPi / 2.0, 0.0});
  expect_complex(angle_between({0.0, 1.0, 0.0}, {0.0, std::cos(1.0), std::sin(1.0)}), {1.0, 0.0});
  expect_complex(angle_between({0.0, 1.0}, {sh, ch}), {0.0, 1.0});
  EXPECT_THROW(angle_between({1.0, 1.0, 0.0}, {1.0, -1.0, 0.0}), GeometryError);
}

TEST(AngleBetween, CosineIdentity) {
  Rng rng(24);
  for (int k = 0; k < 500; ++k) {
    const MinkowskiVector v = random_de_sitter_point(rng), w = random_de_sitter_point(rng);
    const ExtDistance d = extended_distance(v, w);
    if (d.kase == DistanceCase::SpacelikeTangent) continue;
    const Complex lhs = inner_product(v, w);
    const Complex rhs = lorentz_norm(v) * lorentz_norm(w) * std::cos(angle_between(v, w));
    EXPECT_LT(std::abs(lhs - rhs), 1e-10 * std::max(1.0, std::abs(lhs)));
  }
}

TEST(VertexAngle, Examples) {
  expect_complex(vertex_angle({1.0, 0.0, 0.0}, {ch, sh, 0.0}, {ch, 0.0, sh}), {kPi / 2.0, 0.0});
  const double c5 = std::cosh(0.5), s5 = std::sinh(0.5);
  expect_complex(vertex_angle({1.0, 0.0, 0.0}, {c5, s5, 0.0}, {c5, 0.0, s5}), {kPi / 2.0, 0.0});
  // Spacelike vertex with both tangents timelike: a pure imaginary angle.
  const Complex a = vertex_angle({0.0, 0.0, 1.0}, {ch, sh, 0.5}, {std::cosh(0.5), -std::sinh(0.5), -0.2});
  EXPECT_NEAR(a.real(), 0.0, 1e-12);
  EXPECT_GT(std::abs(a.imag()), 0.1);
  EXPECT_THROW(vertex_angle({1.0, 0.0, 0.0}, {2.0, 0.0, 0.0}, {ch, sh, 0.0}), GeometryError);
}

TEST(DualBasis, Examples) {
  const auto w = dual_basis({1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0});
  const std::array<std::array<double, 3>, 3> want{{{-1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(w[i][j], want[i][j], 1e-15);
}

TEST(DualBasis, OrthonormalFrame) {
  Rng rng(25);
  const LorentzIsometry g = random_isometry(2, rng, 2.0);
  const MinkowskiVector v1 = apply_isometry(g, {1.0, 0.0, 0.0}), v2 = apply_isometry(g, {0.0, 1.0, 0.0}),
                        v3 = apply_isometry(g, {0.0, 0.0, 1.0});
  const auto w = dual_basis(v1, v2, v3);
  for (std::size_t j = 0; j < 3; ++j) {
    EXPECT_NEAR(w[0][j], -v1[j], 1e-10);
    EXPECT_NEAR(w[1][j], v2[j], 1e-10);
    EXPECT_NEAR(w[2][j], v3[j], 1e-10);
  }
}

TEST(DualBasis, DeltaPairing) {
  Rng rng(26);
  for (int k = 0; k < 200; ++k) {
    const std::array<MinkowskiVector, 3> v{random_hyperbolic_point(rng), random_de_sitter_point(rng),
                                           random_de_sitter_point(rng)};
    const auto w = dual_basis(v[0], v[1], v[2]);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(inner_product(v[i], w[j]), i == j ? 1.0 : 0.0, 1e-9);
    // The algebraic dual of the algebraic dual is the original triangle.
    const auto vv = dual_basis(w[0], w[1], w[2]);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(vv[i][j], v[i][j], 1e-8 * std::max(1.0, v[i].euclidean_norm()));
  }
}

TEST(DualBasis, Errors) {
  EXPECT_THROW(dual_basis({1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {1.0, 1.0, 0.0}), GeometryError);
  EXPECT_THROW(dual_basis({1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}), DimensionError);
}

TEST(GeometricDual, Examples) {
  const MinkowskiVector s = geometric_dual({0.0, 1.0, 0.0}), t = geometric_dual({1.0, 0.0, 0.0});
  EXPECT_DOUBLE_EQ(s[1], -1.0);
  EXPECT_DOUBLE_EQ(t[0], 1.0);
  EXPECT_THROW(geometric_dual({1.0, 1.0, 0.0}), GeometryError);
}

TEST(DualPairs, SignRule) {
  const auto pairs = dual_pairs({1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0});
  EXPECT_DOUBLE_EQ(pairs[0].geometric_dual[0], -1.0);  // timelike dual kept
  EXPECT_DOUBLE_EQ(pairs[1].geometric_dual[1], -1.0);  // spacelike dual negated
  EXPECT_DOUBLE_EQ(pairs[2].algebraic_dual[2], 1.0);
}

TEST(LensLune, Examples) {
  const LensLune o = lens_lune_angles({0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {1.0, 0.0, 0.0});
  expect_complex(o.lens, {kPi / 2.0, 0.0});
  expect_complex(o.lune, {kPi / 2.0, 0.0});
  const double r = 1.0 / std::sqrt(2.0);
  const LensLune e = lens_lune_angles({0.0, 1.0, 0.0}, {0.0, -r, r}, {1.0, 0.0, 0.0});
  expect_complex(e.lune, {3.0 * kPi / 4.0, 0.0});
  expect_complex(e.lens, kPi - e.lune);
}

TEST(LensLune, LorentzianVertexRelation) {
  // p spacelike; x and y tangent there.
  const MinkowskiVector p{0.0, 0.0, 1.0};
  const std::vector<std::pair<MinkowskiVector, MinkowskiVector>> cases{
      {{0.0, 1.0, 0.0}, {sh, ch, 0.0}},
      {{ch, sh, 0.0}, {1.0, 0.0, 0.0}},
      {{0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}},
      {{1.0, 0.0, 0.0}, {-ch, sh, 0.0}}};
  for (const auto& [x, y] : cases) {
    const LensLune ll = lens_lune_angles(x, y, p);
    double best = 1e9;
    for (Complex opt : {kPi - ll.lune, ll.lune - kPi, kPi + ll.lune}) {
      const Complex diff = ll.lens - opt;
      best = std::min(best, std::abs(diff - 2.0 * kPi * std::round(diff.real() / (2.0 * kPi))));
    }
    EXPECT_LT(best, 1e-12) << "lune " << ll.lune << " lens " << ll.lens;
    const Complex nn = lorentz_norm(x) * lorentz_norm(y);
    EXPECT_LT(std::abs(inner_product(x, y) + nn * std::cos(ll.lens)), 1e-12);
  }
}

TEST(LensLune, Errors) {
  EXPECT_THROW(lens_lune_angles({0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {1.0, 1.0, 0.0}), GeometryError);
  EXPECT_THROW(lens_lune_angles({0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {1.0, 0.5, 0.0}), GeometryError);
}

TEST(MetricSuite, PropertiesPass) {
  const CheckResult r = check_metric_properties({5});
  EXPECT_TRUE(r.pass()) << summary_line(r);
}
