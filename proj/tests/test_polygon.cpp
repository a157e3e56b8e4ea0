#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "exthyp/polygon.hpp"

using namespace exthyp;

namespace {
std::array<double, 3> sorted(std::array<double, 3> v) {
  std::sort(v.begin(), v.end());
  return v;
}
}  // namespace

TEST(Polygon, FamilyNames) {
  for (PolygonFamily f : kAllFamilies) EXPECT_EQ(parse_family(to_string(f)), f);
  EXPECT_THROW(parse_family("Heptagon"), std::invalid_argument);
  EXPECT_NE(std::string(shift_signature(PolygonFamily::LambertQuadH)).find("-di"), std::string::npos);
}

TEST(Polygon, LambertQuadHSideShifts) {
  Rng rng(41);
  for (int k = 0; k < 50; ++k) {
    const ExtTriangle t = sample_configuration(PolygonFamily::LambertQuadH, rng).triangle;
    const auto im = sorted({t.a().imag(), t.b().imag(), t.c().imag()});
    EXPECT_NEAR(im[0], 0.0, 1e-9);
    EXPECT_NEAR(im[1], kPi / 2.0, 1e-9);
    EXPECT_NEAR(im[2], kPi / 2.0, 1e-9);
  }
}

TEST(Polygon, RightHexagonHSidesAndAngles) {
  Rng rng(42);
  for (int k = 0; k < 50; ++k) {
    const ExtTriangle t = sample_configuration(PolygonFamily::RightHexagonH, rng).triangle;
    for (int i = 0; i < 3; ++i) {
      EXPECT_NEAR(t.side(i).imag(), kPi, 1e-9);
      EXPECT_NEAR(t.angles[static_cast<std::size_t>(i)].real(), 0.0, 1e-9);
    }
  }
}

TEST(Polygon, RightPentagonDSSphericalSides) {
  Rng rng(43);
  for (int k = 0; k < 50; ++k) {
    const ExtTriangle t = sample_configuration(PolygonFamily::RightPentagonDS, rng).triangle;
    const auto re = sorted({t.spherical_side(0).real(), t.spherical_side(1).real(), t.spherical_side(2).real()});
    EXPECT_NEAR(re[0], kPi / 2.0, 1e-9);
    EXPECT_NEAR(re[1], kPi / 2.0, 1e-9);
    EXPECT_NEAR(re[2], kPi, 1e-9);
  }
}

TEST(Polygon, SubstitutionIdentities) {
  for (double x = -3.0; x <= 3.0; x += 0.25) {
    EXPECT_LT(std::abs(std::sinh(Complex(x, kPi / 2.0)) - kI * std::cosh(x)), 1e-12);
    EXPECT_LT(std::abs(std::cosh(Complex(x, kPi / 2.0)) - kI * std::sinh(x)), 1e-12);
    EXPECT_LT(std::abs(std::cosh(Complex(x, kPi)) + std::cosh(x)), 1e-12);
    EXPECT_LT(std::abs(std::sinh(Complex(x, kPi)) + std::sinh(x)), 1e-12);
  }
}

class PolygonFamilyTest : public ::testing::TestWithParam<PolygonFamily> {};

TEST_P(PolygonFamilyTest, IdentitiesAndInequalitiesHold) {
  const PolygonReport r = verify_family(GetParam(), 1000, 2024);
  EXPECT_EQ(r.samples, 1000);
  EXPECT_FALSE(r.identity_max.empty());
  for (const auto& [name, v] : r.identity_max) EXPECT_LT(v, 1e-8) << name;
  EXPECT_LT(r.shift_max, 1e-9);
  EXPECT_TRUE(r.inequalities_hold());
  EXPECT_TRUE(r.pass());
}

TEST_P(PolygonFamilyTest, Deterministic) {
  const PolygonReport a = verify_family(GetParam(), 20, 5), b = verify_family(GetParam(), 20, 5);
  EXPECT_EQ(a.identity_max, b.identity_max);
  EXPECT_EQ(a.mirror_samples, b.mirror_samples);
}

INSTANTIATE_TEST_SUITE_P(AllFamilies, PolygonFamilyTest, ::testing::ValuesIn(kAllFamilies),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST(Polygon, InequalitiesPresent) {
  const PolygonReport q = verify_family(PolygonFamily::LambertQuadDS, 200, 9);
  ASSERT_TRUE(q.inequality_min.count("sinh_a_gt_sinh_c_cos_d"));
  EXPECT_GT(q.inequality_min.at("sinh_a_gt_sinh_c_cos_d"), 0.0);
  const PolygonReport p = verify_family(PolygonFamily::RightPentagonDS, 200, 9);
  ASSERT_TRUE(p.inequality_min.count("sinh_a_sinh_e_lt_cosh_c"));
  EXPECT_GT(p.inequality_min.at("sinh_a_sinh_e_lt_cosh_c"), 0.0);
}

TEST(Polygon, MirrorSamplesAreTagged) {
  const PolygonReport r = verify_family(PolygonFamily::OppositeRightQuadH, 400, 10);
  EXPECT_GT(r.mirror_samples, 0);
  EXPECT_LT(r.mirror_samples, r.samples);
}

TEST(Polygon, SampleCountValidated) { EXPECT_THROW(verify_family(PolygonFamily::LambertQuadH, 0, 1), std::invalid_argument); }
