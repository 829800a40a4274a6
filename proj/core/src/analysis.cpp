#include "chebydyn/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "chebydyn/errors.hpp"

namespace chebydyn {

namespace {

constexpr double kFixedResidual = 1e-8;

FixedPointReport make_report(std::string label, const SpherePoint& p, const RationalMap& d,
                             const RationalMap& f, FixedPointKind kind) {
  const double rho = multiplier(d, f, p);
  return {std::move(label), p, rho, classify(rho), kind};
}

std::string fmt_num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string fmt_point(const SpherePoint& p) {
  if (p.is_infinite()) return "inf inf";
  return fmt_num(p.value().real()) + " " + fmt_num(p.value().imag());
}

std::string fmt_k(Complex k) { return fmt_num(k.real()) + " " + fmt_num(k.imag()); }

}  // namespace

StabilityClass classify(double rho) {
  if (rho < kSuperattractingBound) return StabilityClass::kSuperattracting;
  if (rho < 1.0 - kNeutralBand) return StabilityClass::kAttracting;
  if (rho > 1.0 + kNeutralBand) return StabilityClass::kRepelling;
  return StabilityClass::kNeutral;
}

const char* to_string(StabilityClass c) {
  switch (c) {
    case StabilityClass::kSuperattracting: return "superattracting";
    case StabilityClass::kAttracting: return "attracting";
    case StabilityClass::kRepelling: return "repelling";
    case StabilityClass::kNeutral: return "neutral";
  }
  return "?";
}

bool is_attracting(StabilityClass c) {
  return c == StabilityClass::kSuperattracting || c == StabilityClass::kAttracting;
}

const char* to_string(FixedPointKind k) {
  return k == FixedPointKind::kRootImage ? "root-image" : "strange";
}

double multiplier(const RationalMap& d, const RationalMap& f, const SpherePoint& p) {
  const auto image = f.try_apply(p);
  if (!image || sphere_rel_error(*image, p) >= kFixedResidual)
    throw NotAFixedPoint("not a fixed point: " + to_string(p));
  if (p.is_finite()) {
    const SpherePoint v = d(p);
    return v.is_infinite() ? HUGE_VAL : std::abs(v.value());
  }
  // Chart w = 1/z: 1/F(1/w) = w lead(den)/lead(num) + O(w^2) when the degree gap is one.
  const int gap = f.num().degree() - f.den().degree();
  if (gap >= 2) return 0.0;
  return std::abs(f.den().leading() / f.num().leading());
}

std::vector<FixedPointReport> fixed_points_S(const RatioParam& param) {
  const Complex k = param.value();
  const RationalMap s = build_S(param);
  const RationalMap ds = build_S_prime(param);
  std::vector<FixedPointReport> out;
  out.push_back(make_report("z0", 0.0, ds, s, FixedPointKind::kRootImage));
  if (!param.is(-1.0) && !param.is(-2.0))
    out.push_back(make_report("z1", 1.0, ds, s, FixedPointKind::kStrange));
  if (param.is(3.0)) {
    out.push_back(make_report("z3", -1.0, ds, s, FixedPointKind::kStrange));
  } else {
    const Complex r = std::sqrt(2.0 * k + 3.0);
    out.push_back(make_report("z2", (3.0 + r) * k / (k - 3.0), ds, s, FixedPointKind::kStrange));
    out.push_back(make_report("z3", (3.0 - r) * k / (k - 3.0), ds, s, FixedPointKind::kStrange));
  }
  out.push_back(make_report("z4", SpherePoint::infinity(), ds, s, FixedPointKind::kRootImage));
  return out;
}

std::vector<FixedPointReport> fixed_points_G(const RatioParam& param) {
  const Complex k = param.value();
  const RationalMap g = build_G(param);
  const RationalMap dg = build_G_prime(param);
  std::vector<FixedPointReport> out;
  out.push_back(make_report("z0", 1.0, dg, g, FixedPointKind::kRootImage));
  out.push_back(make_report("z1", -1.0, dg, g, FixedPointKind::kRootImage));
  if (param.is(-1.0) || param.is(-1.5)) {
    // G(z) - z = (z - 1)(z + 1) Q(z) with deg Q <= 2.
    const Polynomial fixed = g.num() - Polynomial{0.0, 1.0} * g.den();
    const Polynomial q = divide_by_linear(divide_by_linear(fixed, 1.0).quotient, -1.0).quotient;
    const auto roots = roots_up_to_quadratic(q);
    const char* labels[] = {"z2", "z3"};
    for (std::size_t i = 0; i < roots.size(); ++i)
      out.push_back(make_report(labels[i], roots[i], dg, g, FixedPointKind::kStrange));
  } else {
    const Complex r = std::sqrt(2.0 * k + 3.0);
    const Complex den = (2.0 * k + 3.0) * (k + 1.0);
    const Complex z2 = -(2.0 * k * k + k * (1.0 + 2.0 * r) - 3.0) / den;
    const Complex z3 = -(2.0 * k * k + k * (1.0 - 2.0 * r) - 3.0) / den;
    // At K = 3, z2 lands on -1 (the image of S's z2 escaping to infinity).
    if (!param.is(3.0)) out.push_back(make_report("z2", z2, dg, g, FixedPointKind::kStrange));
    out.push_back(make_report("z3", z3, dg, g, FixedPointKind::kStrange));
  }
  if (g.num().degree() > g.den().degree())
    out.push_back(make_report("zinf", SpherePoint::infinity(), dg, g, FixedPointKind::kStrange));
  return out;
}

std::optional<double> stability_fn_z1(Complex k) {
  if (k == Complex(-2.0, 0.0)) return std::nullopt;
  return 2.0 * std::abs((k + 1.0) * (k + 1.0) / (k + 2.0));
}

std::optional<std::pair<double, double>> stability_fn_z23(Complex k) {
  if (k == Complex(3.0, 0.0)) {
    const RatioParam p(k);
    const RationalMap s = build_S(p), ds = build_S_prime(p);
    return std::pair{multiplier(ds, s, 1.0), multiplier(ds, s, -1.0)};
  }
  const Complex r = std::sqrt(3.0 + 2.0 * k);
  const Complex a = 7.0 * k + 11.0, b = 2.0 * k + 4.0;
  const Complex d2 = (r - 1.0) * (r - 1.0), d3 = (r + 1.0) * (r + 1.0);
  if (d2 == Complex{} || d3 == Complex{}) return std::nullopt;
  return std::pair{2.0 * std::abs((a - b * r) / d2), 2.0 * std::abs((a + b * r) / d3)};
}

std::optional<std::pair<double, double>> multipliers_z23_direct(const RatioParam& param) {
  if (param.is(3.0)) return std::nullopt;
  const auto reports = fixed_points_S(param);
  std::optional<double> z2, z3;
  for (const auto& r : reports) {
    if (r.label == "z2") z2 = r.multiplier_modulus;
    if (r.label == "z3") z3 = r.multiplier_modulus;
  }
  if (!z2 || !z3) return std::nullopt;
  return std::pair{*z2, *z3};
}

StabilityMins stability_min_fns(Complex k) {
  StabilityMins out;
  if (auto s1 = stability_fn_z1(k)) out.s1 = std::min(*s1, 1.0);
  if (auto s23 = stability_fn_z23(k)) out.s23 = std::pair{std::min(s23->first, 1.0), std::min(s23->second, 1.0)};
  return out;
}

std::optional<SpherePoint> critical_point_S(const RatioParam& param, CriticalLabel which) {
  const Complex k = param.value();
  if (which == CriticalLabel::kC1) return SpherePoint(-k);
  if (param.is(1.0) || param.is(-1.0) || param.is(-2.0)) return std::nullopt;
  if (param.is(2.0)) {
    // Quadratic factor degenerates to -2K(K-1)(K+4) z + 3K^2(K+3); the finite
    // root is the limit of the minus branch.
    if (which == CriticalLabel::kC2) return std::nullopt;
    return SpherePoint(3.0 * k * k * (k + 3.0) / (2.0 * k * (k - 1.0) * (k + 4.0)));
  }
  const Complex root = std::sqrt((k - 1.0) * (k + 2.0));
  const Complex sign = which == CriticalLabel::kC2 ? 1.0 : -1.0;
  return SpherePoint(((k - 1.0) * (k + 4.0) + sign * (k + 1.0) * root) * k / ((k - 1.0) * (k - 2.0)));
}

CriticalPointSet critical_points_S(const RatioParam& param) {
  CriticalPointSet out{{"0", 0.0, 2}, {"C1", -param.value(), 2}};
  if (auto c2 = critical_point_S(param, CriticalLabel::kC2)) out.push_back({"C2", *c2, 1});
  if (auto c3 = critical_point_S(param, CriticalLabel::kC3)) out.push_back({"C3", *c3, 1});
  return out;
}

CriticalPointSet critical_points_G(const RatioParam& param) {
  CriticalPointSet out{{"1", 1.0, 2}};
  const Polynomial bracket = g_prime_bracket(param.value());
  const auto roots = roots_up_to_quadratic(bracket);
  if (roots.size() == 2 && roots[0] == roots[1]) {
    out.push_back({"Q", roots[0], 2});
  } else {
    for (std::size_t i = 0; i < roots.size(); ++i) out.push_back({"Q" + std::to_string(i + 1), roots[i], 1});
  }
  return out;
}

std::optional<std::pair<double, double>> multiplier_formula_G_z23(Complex k) {
  if (k == Complex(-1.0, 0.0)) return std::nullopt;
  const Complex r = std::sqrt(2.0 * k + 3.0);
  const Complex base = 3.0 * k * k + 11.0 * k + 10.0;
  const Complex lin = k * k + k - 3.0;
  const Complex den = (k + 1.0) * (k + 1.0);
  return std::pair{std::abs((base + lin * r) / den), std::abs((base - lin * r) / den)};
}

double multiplier_formula_G_z1(Complex k) { return 0.5 * std::abs((k - 1.0) * (k - 2.0)); }

std::vector<Discrepancy> closed_form_discrepancies(const RatioParam& param, double threshold) {
  const Complex k = param.value();
  std::vector<Discrepancy> out;
  auto check = [&](const char* name, double closed, double direct) {
    if (!(std::abs(closed - direct) <= threshold)) out.push_back({k, name, closed, direct});
  };

  const RationalMap s = build_S(param), ds = build_S_prime(param);
  if (auto z1 = stability_fn_z1(k)) check("s_z1_formula", *z1, multiplier(ds, s, 1.0));
  if (!param.is(3.0)) {
    const auto closed = stability_fn_z23(k);
    const auto direct = multipliers_z23_direct(param);
    if (closed && direct) {
      check("s_z2_formula", closed->first, direct->first);
      check("s_z3_formula", closed->second, direct->second);
    }
  }

  const RationalMap g = build_G(param), dg = build_G_prime(param);
  check("g_z1_formula", multiplier_formula_G_z1(k), multiplier(dg, g, -1.0));
  if (!param.is(-1.0) && !param.is(-1.5) && !param.is(3.0)) {
    if (auto closed = multiplier_formula_G_z23(k)) {
      for (const auto& r : fixed_points_G(param)) {
        if (r.label == "z2") check("g_z2_formula", closed->first, r.multiplier_modulus);
        if (r.label == "z3") check("g_z3_formula", closed->second, r.multiplier_modulus);
      }
    }
  }
  return out;
}

std::string format_record(Complex k, const FixedPointReport& r) {
  return fmt_k(k) + " " + r.label + " " + fmt_point(r.location) + " " + fmt_num(r.multiplier_modulus) + " " +
         to_string(r.stability) + " " + to_string(r.kind);
}

std::string format_record(Complex k, const CriticalPoint& c) {
  return fmt_k(k) + " " + c.label + " " + fmt_point(c.location) + " " + std::to_string(c.multiplicity);
}

std::string format_record(const Discrepancy& d) {
  return "discrepancy " + fmt_k(d.k) + " " + d.quantity + " " + fmt_num(d.closed_form) + " " + fmt_num(d.direct);
}

}  // namespace chebydyn
