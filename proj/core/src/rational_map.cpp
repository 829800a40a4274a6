#include "chebydyn/rational_map.hpp"

#include <stdexcept>

#include "chebydyn/errors.hpp"

namespace chebydyn {

RationalMap::RationalMap(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("rational map with zero denominator");
}

std::optional<SpherePoint> RationalMap::try_apply(const SpherePoint& w) const {
  if (w.is_infinite()) {
    const int dn = num_.degree(), dd = den_.degree();
    if (dn > dd) return SpherePoint::infinity();
    if (dn < dd) return SpherePoint(0.0);
    return SpherePoint::normalized(num_.leading() / den_.leading());
  }
  const Complex z = w.value();
  const Complex n = num_(z);
  const Complex d = den_(z);
  if (d == Complex{}) {
    if (n == Complex{}) return std::nullopt;
    return SpherePoint::infinity();
  }
  return SpherePoint::normalized(n / d);
}

SpherePoint RationalMap::operator()(const SpherePoint& w) const {
  if (auto r = try_apply(w)) return *r;
  throw EvalIndeterminate("0/0 evaluating rational map at " + to_string(w));
}

SpherePoint rational_apply(const RationalMap& r, const SpherePoint& w) { return r(w); }

RationalMap derivative(const RationalMap& r) {
  Polynomial num = poly_derive(r.num()) * r.den() - r.num() * poly_derive(r.den());
  return RationalMap(std::move(num), r.den() * r.den());
}

}  // namespace chebydyn
