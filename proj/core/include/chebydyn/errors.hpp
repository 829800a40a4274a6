#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace chebydyn {

/// A map evaluation hit 0/0 exactly. For maps built by this library that
/// only happens at a multiple root of the underlying polynomial.
class EvalIndeterminate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The multiplicity ratio K makes the requested construction meaningless
/// (K = 0 collapses the conjugate family to the identity map).
class DegenerateParam : public std::invalid_argument {
 public:
  DegenerateParam(std::complex<double> k, const std::string& why);
  std::complex<double> k() const noexcept { return k_; }

 private:
  std::complex<double> k_;
};

/// A multiplier was requested at a point that is not fixed by the map.
class NotAFixedPoint : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace chebydyn
