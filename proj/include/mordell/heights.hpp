#pragma once

// Naive and canonical heights, and the closed-form height bounds.

#include <string>

#include "mordell/curve.hpp"

namespace mordell {

// log max(|num x|, den x).
long double naive_height(const CurvePoint& P);

// Canonical height normalized so that h^([2]P) = 4 h^(P) and
// h^(P) = (1/2) lim h([2^k]P) / 4^k. Exact torsion returns 0.
long double canonical_height(const MordellCurve& E, const CurvePoint& P,
                             long double tol = 1e-6L);

struct HeightEstimate {
  long double naive = 0;
  long double canonical = 0;
  long double tol = 0;
};
HeightEstimate height_estimate(const MordellCurve& E, const CurvePoint& P,
                               long double tol = 1e-6L);

struct LowerBoundRule {
  long modulus;
  std::vector<long> residues;
  double C;
  bool cube_variant;
};
// Congruence classes in dispatch order; the last entry is the fallback.
const std::vector<LowerBoundRule>& lower_bound_rules();

// C of the 1/36 congruence dispatch; no quasi-minimality requirement.
long double congruence_constant(const Int& B);

struct LowerBoundConstant {
  long double coefficient;  // 1/36, or 1/24 for cubes
  long double C;
};
// h^(P) > coefficient log|B| - C for non-torsion P. Throws NotQuasiMinimal.
LowerBoundConstant lower_bound_constant(const Int& B);
// Best available bound value at B (max over the congruence and cube rules).
long double lower_bound_value(const Int& B);

bool check_lower_bound(const MordellCurve& E, const CurvePoint& P);

// Lower bound on h(P)/2 - h^(P).
long double height_difference_interval(const MordellCurve& E);

enum class HeightBoundKind { TwoDivPoint, FourDivFloor, NMultWitness };
HeightBoundKind parse_height_bound_kind(const std::string& s);  // throws UnknownKind
long double multiple_height_upper_bound(HeightBoundKind kind, const Int& B, long n = 0);

}  // namespace mordell
