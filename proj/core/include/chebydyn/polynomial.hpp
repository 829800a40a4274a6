#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "chebydyn/sphere.hpp"

namespace chebydyn {

/// Dense polynomial over C, coefficients in ascending degree.
///
/// Trailing coefficients whose modulus is below 1e-14 of the largest
/// coefficient are dropped on construction, so degree drops caused by a
/// vanishing leading term (e.g. (K-1)(K-2) at K in {1, 2}) are seen
/// reliably. The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coeffs);
  Polynomial(std::initializer_list<Complex> coeffs);

  /// prod (z - root)^multiplicity
  static Polynomial from_root(Complex root, int multiplicity);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Complex> coeffs() const { return coeffs_; }
  /// Coefficient of z^k, zero beyond the degree.
  Complex coeff(int k) const;
  /// Zero for the zero polynomial.
  Complex leading() const;

  Complex operator()(Complex z) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Complex s, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  std::vector<Complex> coeffs_;
};

/// Horner evaluation.
Complex poly_eval(const Polynomial& p, Complex z);

/// Formal derivative.
Polynomial poly_derive(const Polynomial& p);

/// Integer power by repeated multiplication.
Polynomial poly_pow(const Polynomial& p, int exponent);

/// p(alpha z + beta), expanded.
Polynomial compose_affine(const Polynomial& p, Complex alpha, Complex beta);

struct LinearDivision {
  Polynomial quotient;
  Complex remainder;
};

/// Synthetic division by (z - root).
LinearDivision divide_by_linear(const Polynomial& p, Complex root);

/// Roots of a polynomial of degree <= 2 via the closed form, principal
/// square root, cancellation-free variant. A double root is returned twice.
/// Degree drops are honored (linear -> one root, constant -> none).
std::vector<Complex> roots_up_to_quadratic(const Polynomial& p);

}  // namespace chebydyn
