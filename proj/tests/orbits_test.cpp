#include <gtest/gtest.h>

#include <cmath>

#include "chebydyn/operators.hpp"
#include "chebydyn/orbits.hpp"

namespace chebydyn {
namespace {

TEST(OrbitConfig, Validation) {
  const OrbitConfig c = OrbitConfig::make(50, 1e-2);
  EXPECT_EQ(c.inf_threshold, 100.0);
  EXPECT_EQ(OrbitConfig::make(50, 1e-2, 1e6).inf_threshold, 1e6);
  EXPECT_THROW(OrbitConfig::make(0, 1e-2), std::invalid_argument);
  EXPECT_THROW(OrbitConfig::make(10, 0.0), std::invalid_argument);
  EXPECT_THROW(OrbitConfig::make(10, 1.5), std::invalid_argument);
  EXPECT_THROW(OrbitConfig::make(10, 1e-2, 0.5), std::invalid_argument);
}

TEST(IterateOrbit, SeedAtZeroIsImmediate) {
  for (double k : {0.5, 1.0, 2.0, -1.0}) {
    const OrbitOutcome o =
        iterate_orbit(build_S(RatioParam(k)), SpherePoint(0.0), OrbitConfig::make(50, 1e-2), OrbitTargets::conjugate_plane());
    EXPECT_EQ(o.status, OrbitStatus::kRootA);
    EXPECT_EQ(o.iters, 0);
  }
}

TEST(IterateOrbit, LandsOnRepellingPointAtKTwo) {
  const OrbitOutcome o = iterate_orbit(build_S(RatioParam(2.0)), SpherePoint(-2.0), OrbitConfig::make(50, 1e-2),
                                       OrbitTargets::conjugate_plane());
  EXPECT_EQ(o.status, OrbitStatus::kNoConvergence);
  EXPECT_EQ(o.final_point, SpherePoint(1.0));
  EXPECT_EQ(o.iters, 50);
}

TEST(IterateOrbit, CriticalSeedAtKThreeGoesToZero) {
  const double seed = 3.0 * (7.0 - 2.0 * std::sqrt(10.0));
  const OrbitOutcome o = iterate_orbit(build_S(RatioParam(3.0)), SpherePoint(seed), OrbitConfig::make(50, 1e-2),
                                       OrbitTargets::conjugate_plane());
  EXPECT_EQ(o.status, OrbitStatus::kRootA);
  EXPECT_LE(o.iters, 50);
}

TEST(IterateOrbit, EscapesToInfinity) {
  const OrbitOutcome o = iterate_orbit(build_S(RatioParam(1.0)), SpherePoint(5.0), OrbitConfig::make(50, 1e-2),
                                       OrbitTargets::conjugate_plane());
  EXPECT_EQ(o.status, OrbitStatus::kRootB);
  EXPECT_GE(o.iters, 1);
}

TEST(IterateOrbit, AttractingStrangeTarget) {
  // K = -1: 1 is a superattracting strange fixed point of S.
  const OrbitOutcome o = iterate_orbit(build_S(RatioParam(-1.0)), SpherePoint(1.05), OrbitConfig::make(50, 1e-6),
                                       OrbitTargets::conjugate_plane({SpherePoint(1.0)}));
  EXPECT_EQ(o.status, OrbitStatus::kStrange);
  EXPECT_EQ(o.attractor, 0u);
}

TEST(IterateOrbit, TwoRootPlane) {
  const RationalMap g = build_G(RatioParam(1.0));
  const OrbitConfig cfg = OrbitConfig::make(30, 1e-5);
  EXPECT_EQ(iterate_orbit(g, SpherePoint(1.0), cfg, OrbitTargets::two_root_plane()).status, OrbitStatus::kRootA);
  const OrbitOutcome o = iterate_orbit(g, SpherePoint(-1.0), cfg, OrbitTargets::two_root_plane());
  EXPECT_EQ(o.status, OrbitStatus::kRootB);
  EXPECT_EQ(o.iters, 0);
}

TEST(IterateOrbit, Deterministic) {
  const RationalMap s = build_S(RatioParam(Complex(0.0, -0.2)));
  const OrbitConfig cfg = OrbitConfig::make(50, 1e-12);
  for (Complex z : {Complex(0.3, 1.2), Complex(-4.0, 2.0)})
    EXPECT_EQ(iterate_orbit(s, z, cfg, OrbitTargets::conjugate_plane()),
              iterate_orbit(s, z, cfg, OrbitTargets::conjugate_plane()));
}

TEST(OrbitTrace, Examples) {
  auto t = orbit_trace(build_S(RatioParam(2.0)), SpherePoint(-2.0), 2);
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[0], SpherePoint(-2.0));
  EXPECT_EQ(t[1], SpherePoint(1.0));
  EXPECT_EQ(t[2], SpherePoint(1.0));
  t = orbit_trace(build_S(RatioParam(1.0)), SpherePoint(-2.0), 1);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[1], SpherePoint(0.0));
  t = orbit_trace(build_S(RatioParam(1.5)), SpherePoint(Complex(0.2, 3.0)), 0);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0], SpherePoint(Complex(0.2, 3.0)));
}

TEST(OrbitTrace, TruncatesOnIndeterminate) {
  // (z - 1) / (z^2 - 1) is 0/0 at 1.
  const RationalMap r(Polynomial{-1.0, 1.0}, Polynomial{-1.0, 0.0, 1.0});
  const auto t = orbit_trace(r, SpherePoint(1.0), 5);
  EXPECT_EQ(t.size(), 1u);
}

}  // namespace
}  // namespace chebydyn
