#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "exthyp/branch.hpp"
#include "exthyp/suite.hpp"

using namespace exthyp;

namespace {
void expect_complex(Complex got, Complex want, double tol = 1e-12) {
  EXPECT_NEAR(got.real(), want.real(), tol) << "got " << got << " want " << want;
  EXPECT_NEAR(got.imag(), want.imag(), tol) << "got " << got << " want " << want;
}
}  // namespace

TEST(SqrtConv, Examples) {
  expect_complex(sqrt_conv(4.0), {2.0, 0.0}, 0.0);
  expect_complex(sqrt_conv(-4.0), {0.0, 2.0}, 0.0);
  expect_complex(sqrt_conv(0.0), {0.0, 0.0}, 0.0);
}

TEST(SqrtConv, SquareRecoversArgument) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-100.0, 100.0);
  for (int k = 0; k < 1000; ++k) {
    const double a = u(rng);
    const Complex s = sqrt_conv(a);
    EXPECT_LT(std::abs(s * s - a), 1e-12 * std::max(1.0, std::abs(a)));
    EXPECT_GE(s.imag(), 0.0);
  }
}

TEST(Sgn, Examples) {
  EXPECT_EQ(sgn(kI), SignValue::plus());
  EXPECT_EQ(sgn(-kI), SignValue::minus());
  EXPECT_EQ(sgn(Complex(-3.0, 0.0)), SignValue::minus());
  EXPECT_EQ(sgn(-3.0), SignValue::minus());
}

TEST(Sgn, RejectsZeroAndGenuinelyComplex) {
  EXPECT_THROW(sgn(Complex(0.0, 0.0)), ConventionError);
  EXPECT_THROW(sgn(Complex(1.0, 1.0)), ConventionError);
  EXPECT_THROW(sgn(0.0), ConventionError);
  // Rounding noise below the axis tolerance is accepted.
  EXPECT_EQ(sgn(Complex(1e-14, -2.0)), SignValue::minus());
}

TEST(Sgn, NotMultiplicativeOnImaginaryArguments) {
  EXPECT_EQ(sgn(kI * kI), SignValue::minus());
  EXPECT_EQ(sgn(kI) * sgn(kI), SignValue::plus());
}

TEST(Msgn, Examples) {
  EXPECT_EQ(msgn({5.0}), SignValue::plus());
  EXPECT_EQ(msgn({-2.0, -3.0}), SignValue::minus());
  EXPECT_EQ(msgn({-1.0, -1.0, -1.0, 2.0}), SignValue::minus());
}

TEST(Msgn, ZeroArgumentThrows) {
  EXPECT_THROW(msgn({1.0, 0.0}), GeometryError);
  EXPECT_THROW(msgn_by_roots({0.0}), GeometryError);
}

TEST(Msgn, PropositionExhaustiveUpToEightArguments) {
  Rng rng(11);
  for (const auto& [name, failures] : msgn_property_failures(rng)) EXPECT_EQ(failures, 0) << name;
}

TEST(Msgn, ClosedFormMatchesRatioOfRoots) {
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::vector<double> xs;
    for (int i = 0; i < 6; ++i) xs.push_back(((mask >> i) & 1u) ? -(i + 1.5) : (i + 0.5));
    EXPECT_EQ(msgn(std::span<const double>(xs)), msgn_by_roots(std::span<const double>(xs))) << "mask " << mask;
  }
}

TEST(ArccoshStrip, Examples) {
  expect_complex(arccosh_strip(std::cosh(1.0)), {1.0, 0.0});
  expect_complex(arccosh_strip(0.0), {0.0, kPi / 2.0});
  expect_complex(arccosh_strip(-std::cosh(1.0)), {1.0, kPi});
  expect_complex(std::cosh(Complex(1.0, kPi)), {-std::cosh(1.0), 0.0});
}

TEST(ArccoshStrip, InvertsCoshOnRandomComplex) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 5000; ++k) {
    Complex q{10.0 * u(rng), 10.0 * u(rng)};
    if (std::abs(q) > 10.0) q /= std::abs(q) / 10.0;
    EXPECT_LT(std::abs(std::cosh(arccosh_strip(q)) - q), 1e-10) << q;
  }
}

TEST(ArccoshStrip, RealArgumentsLandInTheStrip) {
  for (double q = -5.0; q <= 5.0; q += 0.01) {
    const Complex d = arccosh_strip(q);
    EXPECT_GE(d.real(), -1e-12);
    EXPECT_GE(d.imag(), 0.0);
    EXPECT_LE(d.imag(), kPi);
  }
}

TEST(QuarterTurn, PowersOfI) {
  for (int k = -9; k <= 9; ++k) {
    const Complex want = std::pow(kI, k);
    expect_complex(QuarterTurn::power(k).value(), want, 1e-15);
  }
  EXPECT_EQ(QuarterTurn::root_of_sign(-1).exponent(), 1);
  EXPECT_EQ(QuarterTurn::root_of_sign(1).exponent(), 0);
  EXPECT_EQ(QuarterTurn::real_sign(-1).exponent(), 2);
  EXPECT_EQ((QuarterTurn::power(1) * QuarterTurn::power(1)).exponent(), 2);
  EXPECT_EQ((-QuarterTurn::power(1)).exponent(), 3);
  EXPECT_EQ(QuarterTurn::power(1).pow(3).exponent(), 3);
  EXPECT_TRUE(QuarterTurn::power(2).is_real());
  EXPECT_FALSE(QuarterTurn::power(3).is_real());
  EXPECT_EQ(QuarterTurn::power(3).sgn(), SignValue::minus());
  EXPECT_EQ(QuarterTurn::power(1).sgn(), SignValue::plus());
}

TEST(BranchSuite, PropertiesPass) {
  const CheckResult r = check_branch_properties({3});
  EXPECT_TRUE(r.pass()) << summary_line(r);
}
