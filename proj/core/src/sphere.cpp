#include "chebydyn/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>

#include "chebydyn/errors.hpp"

namespace chebydyn {

namespace {

std::string shortest(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x == 0.0 ? 0.0 : x);
  return std::string(buf, res.ptr);
}

std::string format_ratio(std::complex<double> k) {
  if (k.imag() == 0.0) return shortest(k.real());
  return to_string(k);
}

}  // namespace

DegenerateParam::DegenerateParam(std::complex<double> k, const std::string& why)
    : std::invalid_argument("degenerate parameter K=" + format_ratio(k) + " (" + why + ")"), k_(k) {}

SpherePoint SpherePoint::normalized(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return infinity();
  if (std::abs(z) > kInfinityModulus) return infinity();
  return SpherePoint(z);
}

double SpherePoint::distance_to_infinity() const {
  if (infinite_) return 0.0;
  return 1.0 / std::abs(z_);
}

SpherePoint reciprocal(const SpherePoint& w) {
  if (w.is_infinite()) return SpherePoint(0.0);
  if (w.value() == Complex(0.0, 0.0)) return SpherePoint::infinity();
  return SpherePoint::normalized(1.0 / w.value());
}

namespace {

double finite_rel_error(Complex x, Complex y) {
  return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)});
}

}  // namespace

double sphere_rel_error(const SpherePoint& x, const SpherePoint& y) {
  if (x.is_finite() && y.is_finite()) return finite_rel_error(x.value(), y.value());
  const SpherePoint rx = reciprocal(x);
  const SpherePoint ry = reciprocal(y);
  // Both reciprocals are finite unless an input was exactly zero, in which case
  // the pair is as far apart as the sphere allows.
  if (rx.is_infinite() || ry.is_infinite()) return 1.0;
  return finite_rel_error(rx.value(), ry.value());
}

std::string to_string(Complex z) {
  const std::string im = shortest(z.imag());
  return shortest(z.real()) + (im.front() == '-' ? "" : "+") + im + "i";
}

std::string to_string(const SpherePoint& p) {
  if (p.is_infinite()) return "inf";
  return to_string(p.value());
}

}  // namespace chebydyn
