#include "chebydyn/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "chebydyn/errors.hpp"

namespace chebydyn {

namespace {

constexpr double kSnapRadius = 1e-9;
constexpr std::array<double, 7> kSpecialRatios = {0.0, -1.0, -2.0, -1.5, 1.0, 2.0, 3.0};

Polynomial s_denominator(Complex k) {
  return Polynomial{2.0 * k * k * k, 2.0 * k * k * (3.0 - k), 6.0 * k * (1.0 - k), (k - 1.0) * (k - 2.0)};
}

Polynomial s_numerator(Complex k) { return Polynomial{0.0, 0.0, 0.0, k * (k + 3.0), 2.0}; }

/// (K+1) z + (K-1)
Polynomial g_linear(Complex k) { return Polynomial{k - 1.0, k + 1.0}; }

}  // namespace

Complex snap_ratio(Complex k) {
  for (double s : kSpecialRatios)
    if (std::abs(k - s) < kSnapRadius) return Complex(s, 0.0);
  return k;
}

RatioParam::RatioParam(Complex k) : k_(snap_ratio(k)) {
  if (k_ == Complex{}) throw DegenerateParam(k, "identity map");
}

MultiplicityPair::MultiplicityPair(int m_, int n_) : m(m_), n(n_) {
  if (m < 1 || n < 1) throw std::invalid_argument("multiplicities must be >= 1");
}

MoebiusMap::MoebiusMap(Complex a, Complex b) : a_(a), b_(b) {
  if (a == b) throw std::invalid_argument("Moebius map needs distinct roots");
}

SpherePoint moebius_apply(const MoebiusMap& m, const SpherePoint& w) {
  if (w.is_infinite()) return SpherePoint(1.0);
  const Complex z = w.value();
  const Complex den = z - m.b();
  if (den == Complex{}) return SpherePoint::infinity();
  return SpherePoint::normalized((z - m.a()) / den);
}

SpherePoint moebius_inverse(const MoebiusMap& m, const SpherePoint& u) {
  if (u.is_infinite()) return SpherePoint(m.b());
  const Complex w = u.value();
  const Complex den = w - 1.0;
  if (den == Complex{}) return SpherePoint::infinity();
  return SpherePoint::normalized((m.b() * w - m.a()) / den);
}

AffineMap::AffineMap(Complex alpha, Complex beta) : alpha_(alpha), beta_(beta) {
  if (alpha == Complex{}) throw std::invalid_argument("affine map needs alpha != 0");
}

SpherePoint affine_apply(const AffineMap& t, const SpherePoint& z) {
  if (z.is_infinite()) return z;
  return SpherePoint::normalized(t.alpha() * z.value() + t.beta());
}

SpherePoint affine_inverse(const AffineMap& t, const SpherePoint& z) {
  if (z.is_infinite()) return z;
  return SpherePoint::normalized((z.value() - t.beta()) / t.alpha());
}

SpherePoint modified_chebyshev_step(const Polynomial& f, int m, Complex z) {
  if (f.degree() < 1) throw std::invalid_argument("modified_chebyshev_step: constant f");
  const Polynomial df = poly_derive(f);
  const Complex fz = f(z);
  const Complex d1 = df(z);
  if (d1 == Complex{}) {
    if (fz == Complex{}) throw EvalIndeterminate("f and f' vanish at " + to_string(z));
    return SpherePoint::infinity();
  }
  const Complex d2 = poly_derive(df)(z);
  const double md = m;
  const Complex log_convexity = fz * d2 / (d1 * d1);
  return SpherePoint::normalized(z - (md * fz / (2.0 * d1)) * (3.0 - md + md * log_convexity));
}

SpherePoint modified_chebyshev_step(std::span<const RootFactor> f, int m, Complex z) {
  if (f.empty()) throw std::invalid_argument("modified_chebyshev_step: constant f");
  Complex s1{}, s2{};
  for (const RootFactor& r : f) {
    const Complex d = z - r.root;
    if (d == Complex{}) {
      if (r.multiplicity > 1) throw EvalIndeterminate("f and f' vanish at " + to_string(z));
      return SpherePoint(z);  // simple root: f = 0, f' != 0, zero step
    }
    const Complex inv = 1.0 / d;
    s1 += double(r.multiplicity) * inv;
    s2 += double(r.multiplicity) * inv * inv;
  }
  if (s1 == Complex{}) return SpherePoint::infinity();
  const double md = m;
  // f/f' = 1/s1,  L_f = (f''/f) / (f'/f)^2 = (s1^2 - s2) / s1^2
  const Complex log_convexity = (s1 * s1 - s2) / (s1 * s1);
  return SpherePoint::normalized(z - (md / (2.0 * s1)) * (3.0 - md + md * log_convexity));
}

RationalMap build_S(const RatioParam& param) {
  const Complex k = param.value();
  Polynomial num = s_numerator(k);
  Polynomial den = s_denominator(k);
  if (param.is(-1.0) || param.is(-2.0)) {
    // Both vanish at z = 1: num(1) = den(1) = (K+1)(K+2).
    num = divide_by_linear(num, 1.0).quotient;
    den = divide_by_linear(den, 1.0).quotient;
  }
  const Complex lead = num.leading();
  return RationalMap(Complex(1.0) / lead * num, Complex(1.0) / lead * den);
}

RationalMap build_S_prime(const RatioParam& param) {
  const Complex k = param.value();
  if (param.is(-1.0) || param.is(-2.0)) return derivative(build_S(param));
  const Polynomial z_plus_k_sq = poly_pow(Polynomial{k, 1.0}, 2);
  Polynomial num = Polynomial{0.0, 0.0, 2.0} * z_plus_k_sq * s_prime_quadratic(k);
  const Polynomial den = s_denominator(k);
  return RationalMap(std::move(num), den * den);
}

Polynomial s_prime_quadratic(Complex k) {
  return Polynomial{3.0 * k * k * (k + 3.0), -2.0 * k * (k - 1.0) * (k + 4.0), (k - 1.0) * (k - 2.0)};
}

std::array<Complex, 5> u_coefficients(Complex k) {
  const Complex k2 = k * k, k3 = k2 * k;
  return {
      k2 + 3.0 * k + 2.0,
      2.0 * k3 + 4.0 * k2 - 6.0,
      6.0 * k3 + 6.0 * k2 - 6.0 * k + 6.0,
      6.0 * k3 - 4.0 * k2 - 2.0,
      2.0 * k3 - 7.0 * k2 + 3.0 * k,
  };
}

RationalMap build_G(const RatioParam& param) {
  const Complex k = param.value();
  const auto u = u_coefficients(k);
  Polynomial num{u[4], u[3], u[2], u[1], u[0]};
  Polynomial den = Complex(2.0) * poly_pow(g_linear(k), 3);
  return RationalMap(std::move(num), std::move(den));
}

Polynomial g_prime_bracket(Complex k) {
  const Complex k2 = k * k, k3 = k2 * k;
  return k3 * Polynomial{5.0, 6.0, 1.0} + 4.0 * k2 * Polynomial::from_root(-2.0, 2) +
         k * Polynomial{-11.0, 6.0, 5.0} + Complex(2.0) * Polynomial::from_root(1.0, 2);
}

RationalMap build_G_prime(const RatioParam& param) {
  const Complex k = param.value();
  Polynomial num = Polynomial::from_root(1.0, 2) * g_prime_bracket(k);
  Polynomial den = Complex(2.0) * poly_pow(g_linear(k), 4);
  return RationalMap(std::move(num), std::move(den));
}

}  // namespace chebydyn
