#pragma once

// Mordell curves y^2 = x^3 + B over Q: construction, group law, torsion.

#include <string>
#include <vector>

#include "mordell/arith.hpp"

namespace mordell {

struct CurvePoint {
  bool identity = true;
  Rat x, y;

  static CurvePoint at_infinity() { return {}; }
  static CurvePoint affine(const Rat& x, const Rat& y);

  bool is_integral() const;
  bool operator==(const CurvePoint& o) const;
  bool operator!=(const CurvePoint& o) const { return !(*this == o); }
  std::string str() const;
};

enum class TorsionGroup { Trivial, Z2, Z3, Z6 };

struct TorsionKind {
  TorsionGroup group = TorsionGroup::Trivial;
  // Nontrivial torsion points with their orders.
  std::vector<std::pair<CurvePoint, int>> points;

  int order() const;
};

struct MordellCurve {
  Int B;
  Factorization factorization;  // of |B|
  bool quasi_minimal = false;
  TorsionKind torsion;

  bool contains(const CurvePoint& P) const;
  long double log_abs_B() const;
};

MordellCurve make_curve(const Int& B);

struct Reduced {
  Int B;  // sixth-power-free part
  Int u;  // B = B' * u^6
};
Reduced sixth_power_free_reduce(const Int& B);

CurvePoint negate(const CurvePoint& P);
CurvePoint add(const MordellCurve& E, const CurvePoint& P, const CurvePoint& Q);
CurvePoint dbl(const MordellCurve& E, const CurvePoint& P);
CurvePoint multiply(const MordellCurve& E, const CurvePoint& P, long n);

// Torsion orders on Mordell curves divide 6, so [6]P = O decides torsion.
bool is_torsion(const MordellCurve& E, const CurvePoint& P);

struct DenominatorProfile {
  Int A;
  Int D;
};
// x(P) = A / D^2 in lowest terms; checks den(y) = D^3.
DenominatorProfile denominator_profile(const CurvePoint& P);

// Throws PointNotOnCurve.
void require_on_curve(const MordellCurve& E, const CurvePoint& P);

}  // namespace mordell
