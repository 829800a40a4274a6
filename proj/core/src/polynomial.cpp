#include "chebydyn/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chebydyn {

namespace {

constexpr double kTrailingRelTol = 1e-14;

void normalize(std::vector<Complex>& c) {
  double scale = 0.0;
  for (const Complex& x : c) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) {
    c.clear();
    return;
  }
  while (!c.empty() && std::abs(c.back()) < kTrailingRelTol * scale) c.pop_back();
}

}  // namespace

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  normalize(coeffs_);
}

Polynomial::Polynomial(std::initializer_list<Complex> coeffs)
    : Polynomial(std::vector<Complex>(coeffs)) {}

Polynomial Polynomial::from_root(Complex root, int multiplicity) {
  if (multiplicity < 0) throw std::invalid_argument("negative root multiplicity");
  return poly_pow(Polynomial{-root, 1.0}, multiplicity);
}

Complex Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

Complex Polynomial::leading() const { return coeffs_.empty() ? Complex{} : coeffs_.back(); }

Complex Polynomial::operator()(Complex z) const { return poly_eval(*this, z); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(int(k)) + b.coeff(int(k));
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Complex(-1.0) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(Complex s, const Polynomial& p) {
  std::vector<Complex> c(p.coeffs_.begin(), p.coeffs_.end());
  for (Complex& x : c) x *= s;
  return Polynomial(std::move(c));
}

Complex poly_eval(const Polynomial& p, Complex z) {
  const auto c = p.coeffs();
  Complex acc{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial poly_derive(const Polynomial& p) {
  const auto c = p.coeffs();
  if (c.size() <= 1) return {};
  std::vector<Complex> d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = static_cast<double>(k) * c[k];
  return Polynomial(std::move(d));
}

Polynomial poly_pow(const Polynomial& p, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative polynomial exponent");
  Polynomial out{1.0};
  for (int i = 0; i < exponent; ++i) out = out * p;
  return out;
}

Polynomial compose_affine(const Polynomial& p, Complex alpha, Complex beta) {
  // Horner over polynomials: acc = acc * (alpha z + beta) + c_k
  const Polynomial inner{beta, alpha};
  Polynomial acc;
  const auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + Polynomial{*it};
  return acc;
}

LinearDivision divide_by_linear(const Polynomial& p, Complex root) {
  const auto c = p.coeffs();
  if (c.empty()) return {{}, {}};
  std::vector<Complex> q(c.size() - 1);
  Complex carry = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    q[k] = carry;
    carry = c[k] + carry * root;
  }
  return {Polynomial(std::move(q)), carry};
}

std::vector<Complex> roots_up_to_quadratic(const Polynomial& p) {
  switch (p.degree()) {
    case -1:
    case 0:
      return {};
    case 1:
      return {-p.coeff(0) / p.coeff(1)};
    case 2:
      break;
    default:
      throw std::invalid_argument("roots_up_to_quadratic: degree > 2");
  }
  const Complex a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
  const Complex d = std::sqrt(b * b - 4.0 * a * c);
  // Pick the sign that avoids cancellation in b + d.
  const Complex s = std::abs(b + d) >= std::abs(b - d) ? b + d : b - d;
  if (s == Complex{}) return {Complex{}, Complex{}};
  const Complex q = -0.5 * s;
  return {q / a, c / q};
}

}  // namespace chebydyn
