#pragma once

#include <array>
#include <span>

#include "chebydyn/polynomial.hpp"
#include "chebydyn/rational_map.hpp"
#include "chebydyn/sphere.hpp"

namespace chebydyn {

/// Multiplicity ratio K (m = K n) indexing the conjugate family.
///
/// Values within 1e-9 of a parameter where a formula changes shape
/// (0, -1, -2, -3/2, 1, 2, 3) are snapped onto it, so "-2" typed on a command
/// line or accumulated on a grid lands on the exact special case.
/// K = 0 is rejected: the conjugate family degenerates to the identity.
class RatioParam {
 public:
  explicit RatioParam(Complex k);
  explicit RatioParam(double k) : RatioParam(Complex(k, 0.0)) {}

  Complex value() const { return k_; }
  /// Exact comparison against a (snapped) special value.
  bool is(double special) const { return k_ == Complex(special, 0.0); }

 private:
  Complex k_;
};

/// Snaps k onto the nearest special value within 1e-9; otherwise returns k.
Complex snap_ratio(Complex k);

struct MultiplicityPair {
  int m;
  int n;
  /// Throws std::invalid_argument unless m, n >= 1.
  MultiplicityPair(int m, int n);
  Complex ratio() const { return Complex(double(m) / double(n), 0.0); }
};

/// M(z) = (z - a) / (z - b), sending a to 0 and b to infinity.
class MoebiusMap {
 public:
  /// Throws std::invalid_argument when a == b.
  MoebiusMap(Complex a, Complex b);
  Complex a() const { return a_; }
  Complex b() const { return b_; }

 private:
  Complex a_, b_;
};

SpherePoint moebius_apply(const MoebiusMap& m, const SpherePoint& w);
/// M^{-1}(u) = (b u - a) / (u - 1)
SpherePoint moebius_inverse(const MoebiusMap& m, const SpherePoint& u);

/// T(z) = alpha z + beta, alpha != 0.
class AffineMap {
 public:
  AffineMap(Complex alpha, Complex beta);
  Complex alpha() const { return alpha_; }
  Complex beta() const { return beta_; }

 private:
  Complex alpha_, beta_;
};

SpherePoint affine_apply(const AffineMap& t, const SpherePoint& z);
SpherePoint affine_inverse(const AffineMap& t, const SpherePoint& z);

/// One step of the modified Chebyshev iteration for a root of multiplicity m:
///
///   z - (m f / (2 f')) (3 - m + m L_f),   L_f = f f'' / f'^2.
///
/// Returns infinity where f' = 0 != f; throws EvalIndeterminate where
/// f = f' = 0 (an exact hit on a multiple root).
SpherePoint modified_chebyshev_step(const Polynomial& f, int m, Complex z);

/// A root together with its multiplicity.
struct RootFactor {
  Complex root;
  int multiplicity;
};

/// Same step for f = prod (z - r_i)^{m_i}, evaluated through the logarithmic
/// derivatives f'/f = sum m_i/(z - r_i) and f''/f = (f'/f)^2 - sum m_i/(z - r_i)^2.
/// Stays accurate next to multiple roots where expanded coefficients lose
/// every significant digit.
SpherePoint modified_chebyshev_step(std::span<const RootFactor> f, int m, Complex z);

/// Conjugate family S(z; K). The (z - 1) factor shared by numerator and
/// denominator at K in {-1, -2} is divided out; the result is scaled to a
/// monic numerator.
RationalMap build_S(const RatioParam& k);

/// S'(z; K) in the closed form
///   2 z^2 (z+K)^2 [(K-1)(K-2) z^2 - 2K(K-1)(K+4) z + 3K^2(K+3)] / den(z)^2,
/// or the quotient-rule derivative of the reduced map at K in {-1, -2}.
RationalMap build_S_prime(const RatioParam& k);

/// Numerator coefficients (u1..u5) of G, leading first. Defined for any K.
std::array<Complex, 5> u_coefficients(Complex k);

/// Iteration map for g(x) = (x-1)^m (x+1)^n:
///   (u1 z^4 + u2 z^3 + u3 z^2 + u4 z + u5) / (2 ((K+1) z + (K-1))^3), unreduced.
RationalMap build_G(const RatioParam& k);

/// G'(z; K) in closed form
///   (z-1)^2 [(z^2+6z+5)K^3 + 4(z+2)^2 K^2 + (5z^2+6z-11)K + 2(z-1)^2]
///   / (2 ((K+1) z + K - 1)^4).
RationalMap build_G_prime(const RatioParam& k);

/// The bracket of G' as A z^2 + B z + C.
Polynomial g_prime_bracket(Complex k);

/// Quadratic factor of S' numerator: (K-1)(K-2) z^2 - 2K(K-1)(K+4) z + 3K^2(K+3).
Polynomial s_prime_quadratic(Complex k);

}  // namespace chebydyn
