#pragma once

#include <complex>
#include <string>

namespace chebydyn {

using Complex = std::complex<double>;

/// Finite points with modulus above this are folded into the point at infinity
/// after every map application.
inline constexpr double kInfinityModulus = 1e15;

/// A point of the extended complex plane: a finite complex value or infinity.
class SpherePoint {
 public:
  constexpr SpherePoint() = default;
  constexpr SpherePoint(Complex z) : z_(z) {}  // NOLINT(google-explicit-constructor)
  constexpr SpherePoint(double re) : z_(re, 0.0) {}  // NOLINT(google-explicit-constructor)

  static constexpr SpherePoint infinity() {
    SpherePoint p;
    p.infinite_ = true;
    return p;
  }

  /// Non-finite components or modulus beyond kInfinityModulus become infinity.
  static SpherePoint normalized(Complex z);

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  /// Precondition: is_finite().
  constexpr Complex value() const { return z_; }

  /// 1/|z|, zero at infinity.
  double distance_to_infinity() const;

  friend constexpr bool operator==(const SpherePoint& a, const SpherePoint& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.z_ == b.z_;
  }

 private:
  Complex z_{};
  bool infinite_ = false;
};

/// 1/w on the sphere, with 1/0 = infinity and 1/infinity = 0.
SpherePoint reciprocal(const SpherePoint& w);

/// Uniform error measure across the chart boundary: |x-y| / max(1, |x|, |y|)
/// for finite pairs, the same on reciprocals when either side is infinite.
double sphere_rel_error(const SpherePoint& x, const SpherePoint& y);

/// "re+imi" / "inf", full round-trip precision.
std::string to_string(const SpherePoint& p);
std::string to_string(Complex z);

}  // namespace chebydyn
