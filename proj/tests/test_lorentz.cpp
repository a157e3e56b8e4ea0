#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "exthyp/lorentz.hpp"
#include "exthyp/random.hpp"
#include "exthyp/suite.hpp"

using namespace exthyp;

namespace {
void expect_complex(Complex got, Complex want, double tol = 1e-12) {
  EXPECT_NEAR(got.real(), want.real(), tol) << "got " << got << " want " << want;
  EXPECT_NEAR(got.imag(), want.imag(), tol) << "got " << got << " want " << want;
}

void expect_vector(const MinkowskiVector& got, const std::vector<double>& want, double tol = 1e-12) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(got[i], want[i], tol) << "coordinate " << i;
}

MinkowskiVector random_vector(Rng& rng, std::size_t n, double r = 2.0) {
  std::vector<double> xs(n + 1);
  for (auto& x : xs) x = uniform(rng, -r, r);
  return MinkowskiVector(std::span<const double>(xs));
}
}  // namespace

TEST(MinkowskiVector, Construction) {
  const MinkowskiVector x{1.0, 2.0, 3.0};
  EXPECT_EQ(x.dimension(), 2u);
  EXPECT_EQ(x.size(), 3u);
  EXPECT_DOUBLE_EQ(x[2], 3.0);
  EXPECT_THROW(MinkowskiVector({1.0}), DimensionError);
  EXPECT_THROW(MinkowskiVector({1.0, NAN}), GeometryError);
  expect_vector(MinkowskiVector::basis(3, 2), {0.0, 0.0, 1.0, 0.0}, 0.0);
}

TEST(InnerProduct, Examples) {
  EXPECT_DOUBLE_EQ(inner_product({1.0, 0.0, 0.0}, {1.0, 0.0, 0.0}), -1.0);
  EXPECT_NEAR(inner_product({1.0, 0.0}, {std::cosh(1.0), std::sinh(1.0)}), -1.543081, 1e-6);
  EXPECT_NEAR(inner_product({0.0, 1.0, 0.0}, {0.0, std::cos(1.0), std::sin(1.0)}), 0.540302, 1e-6);
}

TEST(InnerProduct, DimensionMismatchThrows) {
  EXPECT_THROW(inner_product({1.0, 0.0}, {1.0, 0.0, 0.0}), DimensionError);
}

TEST(InnerProduct, BilinearAndSymmetric) {
  Rng rng(5);
  for (int k = 0; k < 1000; ++k) {
    const MinkowskiVector x = random_vector(rng, 2), y = random_vector(rng, 2), z = random_vector(rng, 2);
    const double a = uniform(rng, -3.0, 3.0), b = uniform(rng, -3.0, 3.0);
    EXPECT_LT(std::abs(inner_product(x, y) - inner_product(y, x)), 1e-12);
    EXPECT_LT(std::abs(inner_product(a * x + b * y, z) - a * inner_product(x, z) - b * inner_product(y, z)), 1e-12);
  }
}

TEST(LorentzNorm, Examples) {
  expect_complex(lorentz_norm({1.0, 0.0, 0.0}), {0.0, 1.0}, 0.0);
  expect_complex(lorentz_norm({0.0, 1.0, 0.0}), {1.0, 0.0}, 0.0);
  expect_complex(lorentz_norm({1.0, 1.0, 0.0}), {0.0, 0.0}, 0.0);
}

TEST(LorentzNorm, SquareIsTheForm) {
  Rng rng(6);
  for (int k = 0; k < 1000; ++k) {
    const MinkowskiVector x = random_vector(rng, 2);
    const Complex n = lorentz_norm(x);
    if (causal_class(x).lightlike()) continue;
    EXPECT_LT(std::abs(n * n - norm_sq(x)), 1e-12 * std::max(1.0, x.euclidean_norm_sq()));
  }
}

TEST(CausalClass, Examples) {
  EXPECT_EQ(causal_class({1.0, 0.0, 0.0}), (CausalClass{CausalKind::Timelike, Sheet::Upper}));
  EXPECT_EQ(causal_class({-1.0, 0.0, 0.0}), (CausalClass{CausalKind::Timelike, Sheet::Lower}));
  EXPECT_TRUE(causal_class({0.5, 1.0, 0.0}).spacelike());
  EXPECT_TRUE(causal_class({1.0, 1.0, 0.0}).lightlike());
  EXPECT_THROW(causal_class({0.0, 0.0, 0.0}), GeometryError);
}

TEST(CausalClass, ToleranceBand) {
  // Slightly off the cone: lightlike under the default band, spacelike with a zero band.
  const MinkowskiVector x{1.0, 1.0 + 1e-12, 0.0};
  EXPECT_TRUE(causal_class(x).lightlike());
  EXPECT_TRUE(causal_class(x, 0.0).spacelike());
  EXPECT_THROW(causal_class(x, -1.0), std::invalid_argument);
}

TEST(ModelNorm, Examples) {
  const MinkowskiVector p_lorentz{0.0, 0.0, 1.0};
  const MinkowskiVector x{0.0, 2.0, 0.0};
  expect_complex(model_norm(x, p_lorentz, Model::HyperbolicSphere), {0.0, 2.0});
  expect_complex(model_norm(x, p_lorentz, Model::SphericalSphere), {2.0, 0.0});
  expect_complex(model_norm({0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}, Model::SphericalSphere), {0.0, -1.0});
  expect_complex(model_norm({0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}, Model::HyperbolicSphere), {1.0, 0.0});
  // Timelike tangent at a Lorentzian point: negative real.
  expect_complex(model_norm({3.0, 0.0, 0.0}, p_lorentz, Model::HyperbolicSphere), {-3.0, 0.0});
  expect_complex(model_norm({1.0, 1.0, 0.0}, p_lorentz, Model::HyperbolicSphere), {0.0, 0.0});
}

TEST(ModelNorm, Errors) {
  EXPECT_THROW(model_norm({0.0, 1.0, 0.0}, {1.0, 0.0, 1.0}, Model::HyperbolicSphere), GeometryError);
  EXPECT_THROW(model_norm({1.0, 1.0, 0.0}, {1.0, 0.0, 0.0}, Model::HyperbolicSphere), GeometryError);
}

TEST(ModelNorm, ImaginaryUnitRelatesTheModels) {
  Rng rng(7);
  for (int k = 0; k < 500; ++k) {
    const MinkowskiVector p = k % 2 ? random_hyperbolic_point(rng) : random_de_sitter_point(rng);
    const MinkowskiVector q = random_vector(rng, 2);
    const MinkowskiVector x = q - (inner_product(q, p) / norm_sq(p)) * p;
    const Complex h = model_norm(x, p, Model::HyperbolicSphere), s = model_norm(x, p, Model::SphericalSphere);
    EXPECT_LT(std::abs(kI * s - h), 1e-12);
  }
}

TEST(Isometry, Examples) {
  const MinkowskiVector x{0.3, -1.2, 2.0};
  expect_vector(apply_isometry(LorentzIsometry::identity(2), x), {0.3, -1.2, 2.0}, 0.0);
  expect_vector(apply_isometry(LorentzIsometry::boost(1, 1, 1.0), {1.0, 0.0}), {std::cosh(1.0), std::sinh(1.0)});
  expect_vector(apply_isometry(LorentzIsometry::rotation(2, 1, 2, kPi / 2.0), {0.0, 1.0, 0.0}), {0.0, 0.0, 1.0});
}

TEST(Isometry, RejectsNonIsometries) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(3, 3);
  m(1, 1) = 2.0;
  EXPECT_THROW(LorentzIsometry{m}, GeometryError);
  EXPECT_THROW(LorentzIsometry{Eigen::MatrixXd::Identity(2, 3)}, DimensionError);
  EXPECT_THROW(LorentzIsometry::boost(2, 0, 1.0), std::invalid_argument);
  EXPECT_THROW(apply_isometry(LorentzIsometry::identity(3), {1.0, 0.0, 0.0}), DimensionError);
}

TEST(Isometry, PreservesTheForm) {
  Rng rng(8);
  for (int k = 0; k < 500; ++k) {
    const std::size_t n = 1 + static_cast<std::size_t>(k % 4);
    const LorentzIsometry g = random_isometry(n, rng, 5.0);
    const MinkowskiVector x = random_vector(rng, n, 1.0), y = random_vector(rng, n, 1.0);
    EXPECT_LT(std::abs(inner_product(apply_isometry(g, x), apply_isometry(g, y)) - inner_product(x, y)), 1e-9);
  }
}

TEST(Isometry, InverseUndoes) {
  Rng rng(9);
  const LorentzIsometry g = random_isometry(3, rng, 3.0);
  const MinkowskiVector x{1.0, 2.0, -0.5, 0.25};
  const MinkowskiVector back = apply_isometry(g.inverse(), apply_isometry(g, x));
  expect_vector(back, {1.0, 2.0, -0.5, 0.25}, 1e-10);
}

TEST(TangentToward, Examples) {
  expect_vector(tangent_toward({1.0, 0.0, 0.0}, {std::cosh(1.0), std::sinh(1.0), 0.0}), {0.0, std::sinh(1.0), 0.0});
  expect_vector(tangent_toward({0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}), {0.0, 0.0, 1.0});
  expect_vector(tangent_toward({0.0, 1.0, 0.0}, {std::sinh(1.0), std::cosh(1.0), 0.0}), {std::sinh(1.0), 0.0, 0.0});
}

TEST(TangentToward, Errors) {
  EXPECT_THROW(tangent_toward({1.0, 0.0, 0.0}, {2.0, 0.0, 0.0}), GeometryError);
  EXPECT_THROW(tangent_toward({1.0, 1.0, 0.0}, {1.0, 0.0, 0.0}), GeometryError);
}

TEST(TangentToward, OrthogonalToBase) {
  Rng rng(10);
  for (int k = 0; k < 1000; ++k) {
    const MinkowskiVector p = random_vector(rng, 2), q = random_vector(rng, 2);
    if (causal_class(p).lightlike()) continue;
    const MinkowskiVector u = tangent_toward(p, q);
    EXPECT_LT(std::abs(inner_product(u, p)), 1e-10 * std::max(1.0, u.euclidean_norm() * p.euclidean_norm()));
  }
}

TEST(LorentzSuite, PropertiesPass) {
  const CheckResult r = check_lorentz_properties({4});
  EXPECT_TRUE(r.pass()) << summary_line(r);
}
