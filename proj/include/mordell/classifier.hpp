#pragma once

// Integral multiples: detection, the 2-, 3- and 4-divisibility
// parametrizations, the [2]P and [3]P families, and the exceptional points.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mordell/curve.hpp"

namespace mordell {

struct MultipleEntry {
  long n = 0;
  bool integral = false;
  CurvePoint point;
  Int D;  // sqrt of the denominator of x([n]P); 0 for the identity
};

struct MultipleReport {
  MordellCurve curve;
  CurvePoint base;
  std::vector<MultipleEntry> entries;  // n = 1..n_max

  std::vector<long> integral_indices() const;
};

// Throws TorsionInput for torsion P.
MultipleReport integral_multiples(const MordellCurve& E, const CurvePoint& P, long n_max = 30);

// P = (MNt, 3^alpha M^2 N), B = M^3 N^2 K, with M = Nt^3 + K (alpha = 0)
// or 9M = Nt^3 + K (alpha = 1).
struct TwoDivisibilityParams {
  Int M, N, t, K;
  int alpha = 0;
  bool operator==(const TwoDivisibilityParams& o) const {
    return M == o.M && N == o.N && t == o.t && K == o.K && alpha == o.alpha;
  }
};

bool two_divisible(const CurvePoint& P);  // 2y | 3x^2
TwoDivisibilityParams two_div_decompose(const MordellCurve& E, const CurvePoint& P);
struct CurveAndPoint {
  MordellCurve curve;
  CurvePoint point;
};
CurveAndPoint two_div_construct(const TwoDivisibilityParams& p);
// Closed form for x([2]P) in terms of the parameters.
Int two_div_double_x(const TwoDivisibilityParams& p);

bool four_div_check(const MordellCurve& E, const CurvePoint& P);
// A^2 + 20AB - 8B^2 with A = a^3/g, B = B/g, g = gcd(a^3, B).
Int tabef_value(const MordellCurve& E, const CurvePoint& P);

enum class ThreeDivType { I = 1, II, III, IV, V, VI, VII };
const char* three_div_type_name(ThreeDivType t);

struct ThreeDivClass {
  ThreeDivType type;
  Int M, N, K;
};
std::optional<ThreeDivClass> three_div_classify(const MordellCurve& E, const CurvePoint& P);
CurveAndPoint three_div_construct(ThreeDivType type, const Int& M, const Int& N, const Int& K);

struct FamilyInstance {
  int family = 0;
  Int parameter;
  MordellCurve curve;
  CurvePoint point;
  Int x3P;  // closed-form x([3]P)
  bool quasi_minimal = false;
  bool torsion = false;
};
FamilyInstance family_generate(int family, const Int& param);
bool family_parameter_admissible(int family, const Int& param);

bool theorem1_admissible(long n);

struct ExceptionalEntry {
  Int B;
  CurvePoint P;
  std::set<long> multiples;  // n > 1 with [n]P integral
};
const std::vector<ExceptionalEntry>& exceptional_registry();

}  // namespace mordell
