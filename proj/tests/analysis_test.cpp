#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "chebydyn/analysis.hpp"
#include "chebydyn/errors.hpp"

namespace chebydyn {
namespace {

const FixedPointReport* find_near(const std::vector<FixedPointReport>& reports, const SpherePoint& p,
                                  double tol = 1e-9) {
  for (const auto& r : reports)
    if (sphere_rel_error(r.location, p) < tol) return &r;
  return nullptr;
}

const CriticalPoint* find_critical(const CriticalPointSet& set, const SpherePoint& p, double tol = 1e-9) {
  for (const auto& c : set)
    if (sphere_rel_error(c.location, p) < tol) return &c;
  return nullptr;
}

std::vector<FixedPointReport> strange(const std::vector<FixedPointReport>& reports) {
  std::vector<FixedPointReport> out;
  std::copy_if(reports.begin(), reports.end(), std::back_inserter(out),
               [](const FixedPointReport& r) { return r.kind == FixedPointKind::kStrange; });
  return out;
}

TEST(Classify, Bands) {
  EXPECT_EQ(classify(0.0), StabilityClass::kSuperattracting);
  EXPECT_EQ(classify(0.5), StabilityClass::kAttracting);
  EXPECT_EQ(classify(2.0), StabilityClass::kRepelling);
  EXPECT_EQ(classify(1.0), StabilityClass::kNeutral);
  EXPECT_EQ(classify(1.0 + 1e-10), StabilityClass::kNeutral);
  EXPECT_EQ(classify(1.0 - 2e-9), StabilityClass::kAttracting);
  EXPECT_TRUE(is_attracting(StabilityClass::kSuperattracting));
  EXPECT_FALSE(is_attracting(StabilityClass::kNeutral));
}

TEST(FixedPointsS, KMinusTwo) {
  const auto s = strange(fixed_points_S(RatioParam(-2.0)));
  ASSERT_EQ(s.size(), 2u);
  for (Complex p : {Complex(6.0, 2.0) / 5.0, Complex(6.0, -2.0) / 5.0}) {
    const auto* r = find_near(s, p);
    ASSERT_NE(r, nullptr) << p;
    EXPECT_NEAR(r->multiplier_modulus, 3.0, 1e-12);
    EXPECT_EQ(r->stability, StabilityClass::kRepelling);
  }
}

TEST(FixedPointsS, KTwo) {
  const auto all = fixed_points_S(RatioParam(2.0));
  EXPECT_EQ(all.size(), 5u);
  const auto s = strange(all);
  ASSERT_EQ(s.size(), 3u);
  const double r7 = std::sqrt(7.0);
  const std::pair<double, double> want[] = {{1.0, 4.5}, {-2.0 * (3.0 + r7), 2.8311}, {-2.0 * (3.0 - r7), 6.9467}};
  for (auto [loc, mod] : want) {
    const auto* r = find_near(s, loc);
    ASSERT_NE(r, nullptr) << loc;
    EXPECT_NEAR(r->multiplier_modulus, mod, 5e-5);
  }
}

TEST(FixedPointsS, KThree) {
  const auto s = strange(fixed_points_S(RatioParam(3.0)));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_NEAR(find_near(s, 1.0)->multiplier_modulus, 6.4, 1e-12);
  EXPECT_NEAR(find_near(s, -1.0)->multiplier_modulus, 7.75, 1e-12);
}

TEST(FixedPointsS, KOne) {
  const auto all = fixed_points_S(RatioParam(1.0));
  const auto* z1 = find_near(all, 1.0);
  ASSERT_NE(z1, nullptr);
  EXPECT_NEAR(z1->multiplier_modulus, 8.0 / 3.0, 1e-12);
  for (const auto& r : strange(all)) EXPECT_EQ(r.stability, StabilityClass::kRepelling);
  const auto* z0 = find_near(all, 0.0);
  ASSERT_NE(z0, nullptr);
  EXPECT_EQ(z0->kind, FixedPointKind::kRootImage);
  EXPECT_EQ(z0->stability, StabilityClass::kSuperattracting);
}

TEST(FixedPointsS, KMinusOneSuperattractingAtOne) {
  const auto all = fixed_points_S(RatioParam(-1.0));
  const auto* one = find_near(all, 1.0);
  ASSERT_NE(one, nullptr);
  EXPECT_EQ(one->stability, StabilityClass::kSuperattracting);
  const auto* half = find_near(all, 0.5);
  ASSERT_NE(half, nullptr);
  EXPECT_NEAR(half->multiplier_modulus, 3.0, 1e-12);
}

TEST(FixedPointsS, EveryReportIsAFixedPoint) {
  for (Complex k : {Complex(0.6), Complex(0.0, -0.2), Complex(-1.5), Complex(-3.0, 1.0), Complex(2.5, 0.5)}) {
    const RatioParam kp(k);
    const RationalMap s = build_S(kp);
    for (const auto& r : fixed_points_S(kp)) EXPECT_LT(sphere_rel_error(s(r.location), r.location), 1e-10) << k;
  }
}

TEST(Multiplier, AtInfinity) {
  const RatioParam k1(1.0), k3(3.0);
  EXPECT_EQ(multiplier(build_S_prime(k1), build_S(k1), SpherePoint::infinity()), 0.0);
  EXPECT_NEAR(multiplier(build_S_prime(k3), build_S(k3), SpherePoint::infinity()), 1.0, 1e-15);
  EXPECT_NEAR(multiplier(build_S_prime(k1), build_S(k1), SpherePoint(1.0)), 8.0 / 3.0, 1e-14);
}

TEST(Multiplier, RejectsNonFixedPoints) {
  const RatioParam k(2.0);
  EXPECT_THROW(multiplier(build_S_prime(k), build_S(k), SpherePoint(0.5)), NotAFixedPoint);
}

TEST(FixedPointsG, KOne) {
  const auto all = fixed_points_G(RatioParam(1.0));
  const auto* minus_one = find_near(all, -1.0);
  ASSERT_NE(minus_one, nullptr);
  EXPECT_EQ(minus_one->stability, StabilityClass::kSuperattracting);
  const double r5 = std::sqrt(5.0) / 5.0;
  for (double p : {r5, -r5}) {
    const auto* r = find_near(all, p);
    ASSERT_NE(r, nullptr) << p;
    EXPECT_NEAR(r->multiplier_modulus, 6.0, 1e-12);
  }
}

TEST(FixedPointsG, KMinusTwo) {
  const auto* r = find_near(fixed_points_G(RatioParam(-2.0)), -1.0);
  ASSERT_NE(r, nullptr);
  EXPECT_NEAR(r->multiplier_modulus, 6.0, 1e-12);
  EXPECT_EQ(r->stability, StabilityClass::kRepelling);
}

TEST(FixedPointsG, OneIsSuperattractingForAnyK) {
  for (Complex k : {Complex(1.0), Complex(0.5), Complex(-1.0), Complex(-1.5), Complex(3.0), Complex(0.4, -2.0)}) {
    const auto* r = find_near(fixed_points_G(RatioParam(k)), 1.0);
    ASSERT_NE(r, nullptr) << k;
    EXPECT_EQ(r->multiplier_modulus, 0.0);
    EXPECT_EQ(r->stability, StabilityClass::kSuperattracting);
  }
}

TEST(FixedPointsG, KMinusOneIsPolynomialCase) {
  // G = (z^3 - 3z^2 + 3z + 3) / 4 fixes 1, -1, 3 and infinity.
  const auto all = fixed_points_G(RatioParam(-1.0));
  for (SpherePoint p : {SpherePoint(1.0), SpherePoint(-1.0), SpherePoint(3.0), SpherePoint::infinity()})
    EXPECT_NE(find_near(all, p), nullptr) << to_string(p);
}

TEST(FixedPointsG, MultipliersMatchSUnderConjugacy) {
  const MoebiusMap m(1.0, -1.0);
  for (Complex k : {Complex(0.5), Complex(2.5), Complex(-0.7, 1.3), Complex(3.0), Complex(-2.0)}) {
    const RatioParam kp(k);
    const auto g = fixed_points_G(kp);
    for (const auto& rs : fixed_points_S(kp)) {
      const SpherePoint image = moebius_inverse(m, rs.location);
      const auto* rg = find_near(g, image, 1e-8);
      ASSERT_NE(rg, nullptr) << k << " " << rs.label;
      EXPECT_NEAR(rg->multiplier_modulus, rs.multiplier_modulus, 1e-8 * std::max(1.0, rs.multiplier_modulus));
      EXPECT_EQ(rg->kind, rs.kind);
    }
  }
}

TEST(StabilityFns, Z1) {
  EXPECT_NEAR(*stability_fn_z1(-1.0), 0.0, 1e-15);
  EXPECT_NEAR(*stability_fn_z1(2.0), 4.5, 1e-15);
  EXPECT_NEAR(*stability_fn_z1(0.0), 1.0, 1e-15);
  EXPECT_FALSE(stability_fn_z1(-2.0).has_value());
}

TEST(StabilityFns, Z23) {
  auto v = stability_fn_z23(-2.0);
  ASSERT_TRUE(v);
  EXPECT_NEAR(v->first, 3.0, 1e-12);
  EXPECT_NEAR(v->second, 3.0, 1e-12);
  v = stability_fn_z23(2.0);
  ASSERT_TRUE(v);
  EXPECT_NEAR(v->first, 2.8311, 5e-5);
  EXPECT_NEAR(v->second, 6.9467, 5e-5);
  v = stability_fn_z23(1.0);
  ASSERT_TRUE(v);
  EXPECT_NEAR(v->first, 6.0, 1e-12);
  EXPECT_NEAR(v->second, 6.0, 1e-12);
}

TEST(StabilityFns, ClosedFormMatchesDirect) {
  for (Complex k : {Complex(0.6), Complex(2.0), Complex(-0.3, 0.9), Complex(5.0, -1.0)}) {
    const auto closed = stability_fn_z23(k);
    const auto direct = multipliers_z23_direct(RatioParam(k));
    ASSERT_TRUE(closed && direct) << k;
    EXPECT_NEAR(closed->first, direct->first, 1e-9 * std::max(1.0, direct->first)) << k;
    EXPECT_NEAR(closed->second, direct->second, 1e-9 * std::max(1.0, direct->second)) << k;
  }
}

TEST(StabilityFns, Mins) {
  EXPECT_NEAR(*stability_min_fns(-1.0).s1, 0.0, 1e-15);
  EXPECT_EQ(*stability_min_fns(2.0).s1, 1.0);
  const auto s23 = stability_min_fns(-2.0).s23;
  ASSERT_TRUE(s23);
  EXPECT_EQ(s23->first, 1.0);
  EXPECT_EQ(s23->second, 1.0);
}

TEST(CriticalPointsS, KTwo) {
  const auto c = critical_points_S(RatioParam(2.0));
  ASSERT_NE(find_critical(c, 0.0), nullptr);
  EXPECT_EQ(find_critical(c, 0.0)->multiplicity, 2);
  ASSERT_NE(find_critical(c, -2.0), nullptr);
  EXPECT_EQ(find_critical(c, -2.0)->multiplicity, 2);
  ASSERT_NE(find_critical(c, 2.5), nullptr);
  EXPECT_EQ(c.size(), 3u);
  EXPECT_FALSE(critical_point_S(RatioParam(2.0), CriticalLabel::kC2).has_value());
  EXPECT_NEAR(critical_point_S(RatioParam(2.0), CriticalLabel::kC3)->value().real(), 2.5, 1e-14);
}

TEST(CriticalPointsS, KThree) {
  const auto c = critical_points_S(RatioParam(3.0));
  const double r = 2.0 * std::sqrt(10.0);
  EXPECT_NE(find_critical(c, -3.0), nullptr);
  EXPECT_NE(find_critical(c, 3.0 * (7.0 + r)), nullptr);
  EXPECT_NE(find_critical(c, 3.0 * (7.0 - r)), nullptr);
  EXPECT_NEAR(critical_point_S(RatioParam(3.0), CriticalLabel::kC3)->value().real(), 3.0 * (7.0 - r), 1e-12);
  EXPECT_NEAR(critical_point_S(RatioParam(3.0), CriticalLabel::kC1)->value().real(), -3.0, 0.0);
}

TEST(CriticalPointsS, KOne) {
  const auto c = critical_points_S(RatioParam(1.0));
  EXPECT_EQ(c.size(), 2u);
  EXPECT_NE(find_critical(c, 0.0), nullptr);
  EXPECT_NE(find_critical(c, -1.0), nullptr);
  EXPECT_FALSE(critical_point_S(RatioParam(1.0), CriticalLabel::kC2).has_value());
}

TEST(CriticalPointsS, ZerosOfSPrime) {
  for (Complex k : {Complex(0.6), Complex(-0.3, 0.9), Complex(5.0, -1.0)}) {
    const RatioParam kp(k);
    const RationalMap sp = build_S_prime(kp);
    for (const auto& c : critical_points_S(kp))
      if (c.location.is_finite()) {
        EXPECT_LT(std::abs(sp(c.location).value()), 1e-8) << k << " " << c.label;
      }
  }
}

TEST(CriticalPointsG, KOne) {
  const auto c = critical_points_G(RatioParam(1.0));
  const auto* one = find_critical(c, 1.0);
  const auto* minus_one = find_critical(c, -1.0);
  ASSERT_NE(one, nullptr);
  ASSERT_NE(minus_one, nullptr);
  EXPECT_EQ(one->multiplicity, 2);
  EXPECT_EQ(minus_one->multiplicity, 2);
}

TEST(ClosedFormG, PrintedFormulaDisagreesAtOne) {
  const auto f = multiplier_formula_G_z23(1.0);
  ASSERT_TRUE(f);
  const double r5 = std::sqrt(5.0);
  EXPECT_NEAR(std::min(f->first, f->second), (24.0 - r5) / 4.0, 1e-12);
  EXPECT_NEAR(std::max(f->first, f->second), (24.0 + r5) / 4.0, 1e-12);
  const auto d = closed_form_discrepancies(RatioParam(1.0));
  EXPECT_TRUE(std::any_of(d.begin(), d.end(), [](const Discrepancy& x) { return x.quantity == "g_z2_formula"; }));
  EXPECT_TRUE(std::any_of(d.begin(), d.end(), [](const Discrepancy& x) { return x.quantity == "g_z3_formula"; }));
  EXPECT_NEAR(multiplier_formula_G_z1(-2.0), 6.0, 1e-15);
}

TEST(Records, FlatText) {
  const auto all = fixed_points_S(RatioParam(2.0));
  const std::string line = format_record(Complex(2.0), *find_near(all, 1.0));
  EXPECT_EQ(line, "2 0 z1 1 0 4.5 repelling strange");
  const std::string inf = format_record(Complex(2.0), *find_near(all, SpherePoint::infinity()));
  EXPECT_NE(inf.find("inf inf"), std::string::npos);
  const auto c = critical_points_S(RatioParam(2.0));
  EXPECT_EQ(format_record(Complex(2.0), *find_critical(c, 2.5)), "2 0 C3 2.5 0 1");
  const Discrepancy d{Complex(1.0), "g_z2_formula", 5.5, 6.0};
  EXPECT_EQ(format_record(d), "discrepancy 1 0 g_z2_formula 5.5 6");
}

}  // namespace
}  // namespace chebydyn
