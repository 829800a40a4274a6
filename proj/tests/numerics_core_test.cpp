#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "chebydyn/errors.hpp"
#include "chebydyn/operators.hpp"
#include "chebydyn/polynomial.hpp"
#include "chebydyn/rational_map.hpp"
#include "chebydyn/sphere.hpp"

namespace chebydyn {
namespace {

constexpr Complex I(0.0, 1.0);

TEST(SpherePoint, NormalizesHugeAndNonFiniteToInfinity) {
  EXPECT_TRUE(SpherePoint::normalized(Complex(2e15, 0.0)).is_infinite());
  EXPECT_TRUE(SpherePoint::normalized(Complex(NAN, 0.0)).is_infinite());
  EXPECT_TRUE(SpherePoint::normalized(Complex(INFINITY, 1.0)).is_infinite());
  EXPECT_FALSE(SpherePoint::normalized(Complex(1e14, 0.0)).is_infinite());
}

TEST(SpherePoint, Equality) {
  EXPECT_EQ(SpherePoint::infinity(), SpherePoint::infinity());
  EXPECT_NE(SpherePoint::infinity(), SpherePoint(0.0));
  EXPECT_EQ(SpherePoint(Complex(1.0, 2.0)), SpherePoint(Complex(1.0, 2.0)));
}

TEST(SpherePoint, ReciprocalSwapsZeroAndInfinity) {
  EXPECT_TRUE(reciprocal(SpherePoint(0.0)).is_infinite());
  EXPECT_EQ(reciprocal(SpherePoint::infinity()), SpherePoint(0.0));
  EXPECT_NEAR(std::abs(reciprocal(SpherePoint(Complex(0.0, 2.0))).value() - Complex(0.0, -0.5)), 0.0, 1e-15);
}

TEST(SpherePoint, RelativeErrorHandlesInfinity) {
  EXPECT_EQ(sphere_rel_error(SpherePoint::infinity(), SpherePoint::infinity()), 0.0);
  EXPECT_NEAR(sphere_rel_error(SpherePoint(1e12), SpherePoint::infinity()), 1e-12, 1e-20);
  EXPECT_NEAR(sphere_rel_error(SpherePoint(2.0), SpherePoint(2.0 + 2e-9)), 1e-9, 1e-15);
  EXPECT_NEAR(sphere_rel_error(SpherePoint(0.0), SpherePoint(1e-9)), 1e-9, 1e-20);
}

TEST(SpherePoint, ToString) {
  EXPECT_EQ(to_string(SpherePoint::infinity()), "inf");
  EXPECT_EQ(to_string(Complex(0.5, -2.0)), "0.5-2i");
}

TEST(Polynomial, EvalExamples) {
  EXPECT_EQ(poly_eval(Polynomial{0.0}, Complex(3.0, 1.0)), Complex(0.0));
  EXPECT_NEAR(std::abs(poly_eval(Polynomial{1.0, 0.0, 0.0, 0.0, 1.0}, I) - Complex(2.0)), 0.0, 1e-15);
  EXPECT_EQ(poly_eval(Polynomial{-1.0, 0.0, 1.0}, 3.0), Complex(8.0));
}

TEST(Polynomial, ZeroPolynomialIsEmpty) {
  EXPECT_TRUE(Polynomial{0.0}.is_zero());
  EXPECT_EQ(Polynomial{0.0}.degree(), -1);
  EXPECT_EQ((Polynomial{1.0, 2.0} - Polynomial{1.0, 2.0}).degree(), -1);
}

TEST(Polynomial, DeriveExamples) {
  EXPECT_TRUE(poly_derive(Polynomial{5.0}).is_zero());
  EXPECT_EQ(poly_derive(Polynomial{0.0, 0.0, 1.0}), (Polynomial{0.0, 2.0}));
  EXPECT_EQ(poly_derive(Polynomial{-1.0, 0.0, 1.0}), (Polynomial{0.0, 2.0}));
}

TEST(Polynomial, TrailingZerosStripped) {
  const Polynomial p{1.0, 2.0, 0.0, 0.0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p.leading(), Complex(2.0));
  EXPECT_EQ(p.coeff(7), Complex(0.0));
}

TEST(Polynomial, ArithmeticAgreesWithPointwiseEvaluation) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> nd;
  auto rnd = [&] { return Complex(nd(rng), nd(rng)); };
  const Polynomial a{rnd(), rnd(), rnd()};
  const Polynomial b{rnd(), rnd(), rnd(), rnd()};
  for (int t = 0; t < 20; ++t) {
    const Complex z = rnd();
    EXPECT_NEAR(std::abs((a * b)(z) - a(z) * b(z)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs((a + b)(z) - (a(z) + b(z))), 0.0, 1e-12);
    EXPECT_NEAR(std::abs((a - b)(z) - (a(z) - b(z))), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(poly_pow(a, 3)(z) - a(z) * a(z) * a(z)), 0.0, 1e-10 * std::max(1.0, std::pow(std::abs(a(z)), 3)));
    EXPECT_NEAR(std::abs(compose_affine(b, 2.0 - I, 0.5)(z) - b((2.0 - I) * z + 0.5)), 0.0, 1e-10);
  }
}

TEST(Polynomial, FromRootAndSyntheticDivision) {
  const Polynomial p = Polynomial::from_root(2.0, 3);
  EXPECT_EQ(p, (Polynomial{-8.0, 12.0, -6.0, 1.0}));
  const LinearDivision d = divide_by_linear(p, 2.0);
  EXPECT_EQ(d.remainder, Complex(0.0));
  EXPECT_EQ(d.quotient, Polynomial::from_root(2.0, 2));
  EXPECT_EQ(divide_by_linear(Polynomial{1.0, 0.0, 1.0}, 1.0).remainder, Complex(2.0));
}

TEST(Polynomial, QuadraticRoots) {
  auto r = roots_up_to_quadratic(Polynomial{1.0, 3.0, 1.0});
  ASSERT_EQ(r.size(), 2u);
  for (Complex z : r) EXPECT_NEAR(std::abs(z * z + 3.0 * z + 1.0), 0.0, 1e-14);
  // Cancellation-prone: roots 1e8 and 1e-8.
  r = roots_up_to_quadratic(Polynomial{1.0, -(1e8 + 1e-8), 1.0});
  ASSERT_EQ(r.size(), 2u);
  const double small = std::min(std::abs(r[0]), std::abs(r[1]));
  EXPECT_NEAR(small, 1e-8, 1e-20);
  r = roots_up_to_quadratic(Polynomial{1.0, -2.0, 1.0});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0], Complex(1.0));
  EXPECT_EQ(r[1], Complex(1.0));
  r = roots_up_to_quadratic(Polynomial{-5.0, 2.0});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0], Complex(2.5));
  EXPECT_TRUE(roots_up_to_quadratic(Polynomial{3.0}).empty());
}

TEST(RationalMap, RejectsZeroDenominator) {
  EXPECT_THROW(RationalMap(Polynomial{1.0}, Polynomial{}), std::invalid_argument);
}

TEST(RationalMap, ApplyExamples) {
  const RationalMap s2 = build_S(RatioParam(2.0));
  EXPECT_EQ(s2(SpherePoint(-2.0)), SpherePoint(1.0));
  EXPECT_TRUE(s2(SpherePoint::infinity()).is_infinite());
  const RationalMap sm2 = build_S(RatioParam(-2.0));
  EXPECT_NEAR(std::abs(sm2(SpherePoint(2.0)).value() - 1.0), 0.0, 1e-15);
}

TEST(RationalMap, InfinityByDegreeComparison) {
  const RationalMap lower(Polynomial{1.0}, Polynomial{0.0, 1.0});
  EXPECT_EQ(lower(SpherePoint::infinity()), SpherePoint(0.0));
  const RationalMap equal(Polynomial{1.0, 6.0}, Polynomial{1.0, 2.0});
  EXPECT_EQ(equal(SpherePoint::infinity()), SpherePoint(3.0));
  const RationalMap higher(Polynomial{0.0, 0.0, 1.0}, Polynomial{1.0});
  EXPECT_TRUE(higher(SpherePoint::infinity()).is_infinite());
}

TEST(RationalMap, PoleAndIndeterminate) {
  const RationalMap r(Polynomial{-1.0, 1.0}, Polynomial{-1.0, 0.0, 1.0});  // (z-1)/(z^2-1)
  EXPECT_TRUE(r(SpherePoint(-1.0)).is_infinite());
  EXPECT_FALSE(r.try_apply(SpherePoint(1.0)).has_value());
  EXPECT_THROW(r(SpherePoint(1.0)), EvalIndeterminate);
  EXPECT_EQ(rational_apply(r, SpherePoint(3.0)), r(SpherePoint(3.0)));
}

TEST(RationalMap, DerivativeMatchesCentralDifference) {
  const RationalMap r(Polynomial{1.0, Complex(0.0, 2.0), 0.0, 3.0}, Polynomial{2.0, -1.0, 1.0});
  const RationalMap d = derivative(r);
  for (Complex z : {Complex(0.3, 0.4), Complex(-2.0, 1.0), Complex(5.0, -3.0)}) {
    const double h = 1e-6;
    const Complex fd = (r(SpherePoint(z + h)).value() - r(SpherePoint(z - h)).value()) / (2.0 * h);
    const Complex exact = d(SpherePoint(z)).value();
    EXPECT_LT(std::abs(fd - exact) / std::max(1.0, std::abs(exact)), 1e-7);
  }
}

}  // namespace
}  // namespace chebydyn
