#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chebydyn/operators.hpp"
#include "chebydyn/rational_map.hpp"
#include "chebydyn/sphere.hpp"

namespace chebydyn {

enum class StabilityClass { kSuperattracting, kAttracting, kRepelling, kNeutral };

inline constexpr double kSuperattractingBound = 1e-12;
inline constexpr double kNeutralBand = 1e-9;

/// rho < 1e-12 superattracting, rho < 1 - 1e-9 attracting,
/// rho > 1 + 1e-9 repelling, neutral otherwise.
StabilityClass classify(double multiplier_modulus);
const char* to_string(StabilityClass c);
bool is_attracting(StabilityClass c);

/// RootImage: image of a root of the underlying polynomial (0 and infinity for
/// S, 1 and -1 for G). Strange: every other fixed point.
enum class FixedPointKind { kRootImage, kStrange };
const char* to_string(FixedPointKind k);

struct FixedPointReport {
  std::string label;
  SpherePoint location;
  double multiplier_modulus;
  StabilityClass stability;
  FixedPointKind kind;
};

struct CriticalPoint {
  std::string label;
  SpherePoint location;
  int multiplicity;
};
using CriticalPointSet = std::vector<CriticalPoint>;

/// Fixed points of S(z; K): z0 = 0, z1 = 1, z2,3 = (3 +- sqrt(2K+3)) K / (K-3),
/// z4 = infinity. Special cases:
///   K = -2: z1 is not fixed by the reduced map and is left out;
///   K = -1: z1 merges with z2 = 1 (superattracting) and is left out;
///   K = 3:  z2 escapes to infinity; the strange set is {1, -1}.
std::vector<FixedPointReport> fixed_points_S(const RatioParam& k);

/// Fixed points of G(z; K): z0 = 1, z1 = -1 (root images), z2,3 from the
/// closed form, and infinity (the image of S's z1) whenever G fixes it.
/// K in {-1, -3/2} falls back to deflating G(z) - z by (z-1)(z+1).
std::vector<FixedPointReport> fixed_points_G(const RatioParam& k);

/// |F'(p)| at a fixed point p of F. At infinity the chart w = 1/z gives
/// |lead(den)/lead(num)| when deg num = deg den + 1, and 0 for larger gaps.
/// Throws NotAFixedPoint when the sphere residual of F(p) vs p exceeds 1e-8.
double multiplier(const RationalMap& derivative, const RationalMap& map, const SpherePoint& p);

/// 2 |(K+1)^2 / (K+2)|, the multiplier of z1 = 1. nullopt at K = -2.
std::optional<double> stability_fn_z1(Complex k);

/// 2 |(7K+11 -+ (2K+4) sqrt(3+2K)) / (sqrt(3+2K) -+ 1)^2| for (z2, z3).
/// At K = 3 the closed form has a pole and |S'(1)|, |S'(-1)| are returned.
std::optional<std::pair<double, double>> stability_fn_z23(Complex k);

/// |S'(z2)|, |S'(z3)| by direct evaluation at the closed-form points.
/// nullopt where z2 or z3 does not exist as a finite fixed point.
std::optional<std::pair<double, double>> multipliers_z23_direct(const RatioParam& k);

struct StabilityMins {
  std::optional<double> s1;
  std::optional<std::pair<double, double>> s23;
};

/// min(|multiplier|, 1) for z1 and for the pair z2, z3.
StabilityMins stability_min_fns(Complex k);

/// 0 (double), C1 = -K (double) and the roots C2, C3 of the quadratic factor
/// of S'. C2 takes + and C3 takes - in
///   ((K-1)(K+4) +- (K+1) sqrt((K-1)(K+2))) K / ((K-1)(K-2)).
/// K = 1: no C2, C3. K = 2: only C3 = 5/2. K in {-1, -2}: the quadratic is a
/// multiple of (z-1)^2, which cancels against the denominator, so no C2, C3.
CriticalPointSet critical_points_S(const RatioParam& k);

enum class CriticalLabel { kC1, kC2, kC3 };

/// The labelled critical point used to seed parameter-space orbits;
/// nullopt where it does not exist for this K.
std::optional<SpherePoint> critical_point_S(const RatioParam& k, CriticalLabel which);

/// 1 (double) and the zeros of the bracket A z^2 + B z + C of G'.
CriticalPointSet critical_points_G(const RatioParam& k);

/// |(3K^2 + 11K +- (K^2+K-3) sqrt(2K+3) + 10) / (K+1)^2| as printed for G's
/// z2, z3. Kept as a cross-check only; direct |G'| evaluation is authoritative.
std::optional<std::pair<double, double>> multiplier_formula_G_z23(Complex k);

/// 1/2 |(K-1)(K-2)|, the multiplier of G's z1 = -1.
double multiplier_formula_G_z1(Complex k);

/// A closed-form multiplier that disagrees with direct derivative evaluation.
struct Discrepancy {
  Complex k;
  std::string quantity;
  double closed_form;
  double direct;
};

/// Compares every closed-form multiplier against direct evaluation at K and
/// returns the ones differing by more than `threshold`.
std::vector<Discrepancy> closed_form_discrepancies(const RatioParam& k, double threshold = 1e-6);

/// "k_re k_im label loc_re loc_im modulus class kind", infinity as "inf inf".
std::string format_record(Complex k, const FixedPointReport& r);
/// "k_re k_im label loc_re loc_im multiplicity"
std::string format_record(Complex k, const CriticalPoint& c);
/// "discrepancy k_re k_im quantity closed_form direct"
std::string format_record(const Discrepancy& d);

}  // namespace chebydyn
