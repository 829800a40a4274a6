#pragma once

#include <optional>

#include "chebydyn/polynomial.hpp"
#include "chebydyn/sphere.hpp"

namespace chebydyn {

/// num/den acting on the Riemann sphere. Maps produced by the operators
/// module are reduced at their removable points, so 0/0 never happens
/// outside of construction bugs.
class RationalMap {
 public:
  /// Throws std::invalid_argument when den is the zero polynomial.
  RationalMap(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  /// Throws EvalIndeterminate on an exact 0/0.
  SpherePoint operator()(const SpherePoint& w) const;

  /// Same as operator() with 0/0 reported as nullopt instead of throwing.
  std::optional<SpherePoint> try_apply(const SpherePoint& w) const;

 private:
  Polynomial num_;
  Polynomial den_;
};

SpherePoint rational_apply(const RationalMap& r, const SpherePoint& w);

/// Quotient rule, (num' den - num den') / den^2. Unreduced.
RationalMap derivative(const RationalMap& r);

}  // namespace chebydyn
