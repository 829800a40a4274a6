#include "chebydyn/orbits.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace chebydyn {

OrbitConfig OrbitConfig::make(int max_iters, double tol, double inf_threshold) {
  if (inf_threshold == 0.0) inf_threshold = 1.0 / tol;
  if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  if (!(tol > 0.0 && tol < 1.0)) throw std::invalid_argument("tol must lie in (0, 1)");
  if (!(inf_threshold > 1.0)) throw std::invalid_argument("inf_threshold must exceed 1");
  return {max_iters, tol, inf_threshold};
}

OrbitTargets OrbitTargets::conjugate_plane(std::vector<SpherePoint> strange) {
  return {SpherePoint(0.0), SpherePoint::infinity(), std::move(strange)};
}

OrbitTargets OrbitTargets::two_root_plane(std::vector<SpherePoint> strange) {
  return {SpherePoint(1.0), SpherePoint(-1.0), std::move(strange)};
}

namespace {

bool near(const SpherePoint& z, const SpherePoint& target, const OrbitConfig& cfg) {
  if (target.is_infinite()) return z.is_infinite() || std::abs(z.value()) > cfg.inf_threshold;
  if (z.is_infinite()) return false;
  return std::abs(z.value() - target.value()) < cfg.tol;
}

std::optional<OrbitOutcome> test(const SpherePoint& z, int iters, const OrbitConfig& cfg,
                                 const OrbitTargets& t) {
  if (near(z, t.root_a, cfg)) return OrbitOutcome{OrbitStatus::kRootA, 0, iters, z};
  if (near(z, t.root_b, cfg)) return OrbitOutcome{OrbitStatus::kRootB, 0, iters, z};
  for (std::size_t i = 0; i < t.strange.size(); ++i)
    if (near(z, t.strange[i], cfg)) return OrbitOutcome{OrbitStatus::kStrange, i, iters, z};
  return std::nullopt;
}

OrbitOutcome resolve_indeterminate(const SpherePoint& z, int iters, const OrbitConfig& cfg,
                                   const OrbitTargets& t) {
  const double radius = 10.0 * cfg.tol;
  double best = std::numeric_limits<double>::infinity();
  OrbitOutcome out{OrbitStatus::kNoConvergence, 0, iters, z};
  auto consider = [&](const SpherePoint& target, OrbitStatus status, std::size_t index) {
    if (target.is_infinite() || z.is_infinite()) return;
    const double d = std::abs(z.value() - target.value());
    if (d < radius && d < best) {
      best = d;
      out.status = status;
      out.attractor = index;
    }
  };
  consider(t.root_a, OrbitStatus::kRootA, 0);
  for (std::size_t i = 0; i < t.strange.size(); ++i) consider(t.strange[i], OrbitStatus::kStrange, i);
  return out;
}

}  // namespace

OrbitOutcome iterate_orbit(const RationalMap& map, const SpherePoint& seed, const OrbitConfig& cfg,
                           const OrbitTargets& targets) {
  SpherePoint z = seed;
  if (auto hit = test(z, 0, cfg, targets)) return *hit;
  for (int it = 1; it <= cfg.max_iters; ++it) {
    const auto next = map.try_apply(z);
    if (!next) return resolve_indeterminate(z, it - 1, cfg, targets);
    z = *next;
    if (auto hit = test(z, it, cfg, targets)) return *hit;
  }
  return {OrbitStatus::kNoConvergence, 0, cfg.max_iters, z};
}

std::vector<SpherePoint> orbit_trace(const RationalMap& map, const SpherePoint& seed, int n) {
  if (n < 0 || n > 1'000'000) throw std::invalid_argument("orbit_trace: n out of range");
  std::vector<SpherePoint> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  out.push_back(seed);
  for (int i = 0; i < n; ++i) {
    const auto next = map.try_apply(out.back());
    if (!next) break;
    out.push_back(*next);
  }
  return out;
}

}  // namespace chebydyn
