#pragma once

#include <cstddef>
#include <vector>

#include "chebydyn/rational_map.hpp"
#include "chebydyn/sphere.hpp"

namespace chebydyn {

/// Iteration budget and proximity thresholds.
struct OrbitConfig {
  int max_iters = 50;
  double tol = 1e-2;
  double inf_threshold = 1e2;

  /// inf_threshold defaults to 1/tol. Throws std::invalid_argument unless
  /// max_iters >= 1, 0 < tol < 1 and inf_threshold > 1.
  static OrbitConfig make(int max_iters, double tol, double inf_threshold = 0.0);
};

/// What an orbit may converge to. For S the roots sit at 0 (a) and
/// infinity (b); for G at 1 and -1. A target at infinity is reached once
/// |z| > inf_threshold, a finite target once |z - p| < tol.
struct OrbitTargets {
  SpherePoint root_a = 0.0;
  SpherePoint root_b = SpherePoint::infinity();
  std::vector<SpherePoint> strange;  ///< attracting strange fixed points

  static OrbitTargets conjugate_plane(std::vector<SpherePoint> strange = {});
  static OrbitTargets two_root_plane(std::vector<SpherePoint> strange = {});
};

/// kRootA is "to zero" on the S plane, kRootB is "to infinity".
enum class OrbitStatus { kRootA, kRootB, kStrange, kNoConvergence };

struct OrbitOutcome {
  OrbitStatus status;
  std::size_t attractor = 0;  ///< index into OrbitTargets::strange for kStrange
  int iters;
  SpherePoint final_point;

  friend bool operator==(const OrbitOutcome&, const OrbitOutcome&) = default;
};

/// Iterates `map` from `seed`, testing the seed and then each image in the
/// order root a, root b, strange targets. An exact 0/0 from the map counts as
/// convergence to the nearest finite target among {root a} and the strange
/// ones within 10 tol; anything else is kNoConvergence after max_iters steps.
OrbitOutcome iterate_orbit(const RationalMap& map, const SpherePoint& seed, const OrbitConfig& cfg,
                           const OrbitTargets& targets);

/// seed, F(seed), ..., F^n(seed). Stops early (truncated) if the map hits 0/0.
std::vector<SpherePoint> orbit_trace(const RationalMap& map, const SpherePoint& seed, int n);

}  // namespace chebydyn
