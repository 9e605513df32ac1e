#pragma once

// Bounded searches for Thue equations, Thue systems, definite quadratic
// forms and the Pell-type conditions behind four-divisible points.

#include <vector>

#include "mordell/arith.hpp"
#include "mordell/curve.hpp"
#include "mordell/divpoly.hpp"

namespace mordell {

constexpr long kMaxSearchBound = 1000000;

// sum c[i] x^i y^(d-i), d = c.size() - 1.
struct BinaryForm {
  std::vector<Int> c;
  long degree() const { return static_cast<long>(c.size()) - 1; }
  Int eval(const Int& x, const Int& y) const;
};

BinaryForm from_weighted(const WeightedBinaryForm& w);

struct ThueProblem {
  BinaryForm form;
  std::vector<Int> rhs_set;
  long bound = 1;
  bool primitive_only = true;
};

struct Solution {
  Int x, y, rhs;
  bool operator==(const Solution& o) const { return x == o.x && y == o.y && rhs == o.rhs; }
  bool operator<(const Solution& o) const;
};

struct SearchResult {
  std::vector<Solution> solutions;
  bool complete = false;  // true only when the bound provably covers everything
};

// All solutions with |x|, |y| <= bound, sorted by (x, y, rhs). Each y-slice
// is solved for x through the complex roots of the slice polynomial, and
// every candidate is verified exactly. `threads` = 0 picks the hardware count.
SearchResult thue_solve_bounded(const ThueProblem& problem, unsigned threads = 0);

// The Psi_5 form against +-3^a 5^g, a in {0,4,6}, g in {0,1}.
std::vector<ThueProblem> psi5_problems(long bound = 100);

// Psi_7 = F7 * G7 with G7 = 7X^2 - XY + Y^2; F7 is obtained by exact division.
BinaryForm psi7_sextic();
BinaryForm psi7_quadratic();

struct Psi7Solution {
  Int x, y;
  Int f_value, g_value;
  long alpha1 = 0, alpha2 = 0, gamma = 0;
  int sign = 1;  // sign of f_value
  bool operator==(const Psi7Solution& o) const { return x == o.x && y == o.y; }
};

// Primitive nontrivial (xy != 0) solutions of F7 = +-3^a1, G7 = 3^a2 7^g over
// (a1, a2) in {(0,0),(5,3),(6,2),(9,3),(10,2)}, g in {0,1}. The sextic is
// solved as a Thue equation and filtered by G7.
std::vector<Psi7Solution> psi7_system_solve(long bound);
// Second route: complete solution of G7 = 3^a2 7^g, then filtered by F7.
std::vector<Psi7Solution> psi7_system_solve_by_quadratic();

// Inner octic of the [4]P + T equation.
BinaryForm four_torsion_octic();
// Primitive solutions of the octic = +-2^a 3^b, a in {0,5}, b in {0,4}.
SearchResult four_torsion_thue(long bound);

// Curves and points attached to a coprime pair (X, Y) = (a^3, 4B) / gcd for
// integral P = (a, b) on a sixth-power-free E_B. For X != 0 the pair fixes
// (a, B) up to the parity condition on b^2, so the list is short.
struct WeightedPairPoint {
  Int B;
  CurvePoint P;
  bool torsion = false;
};
std::vector<WeightedPairPoint> points_from_weighted_pair(const Int& X, const Int& Y);

// Solutions whose pair (x, y) or (-x, -y) maps to a non-torsion P with
// [n]P integral.
std::vector<Solution> integral_multiple_solutions(const std::vector<Solution>& sols, long n);

struct FourDivRow {
  Int B;
  CurvePoint P;  // y > 0
  long variant = 0;  // 0: M = Nt^3 + K, 1: 9M = Nt^3 + K
  Int M, N, t, K, r;
};

// All quasi-minimal (B, P), |B| <= b_max, P integral non-torsion with [4]P
// integral, reached by the three Pell-type branches. Sorted by |B|, then B.
std::vector<FourDivRow> pell_sweep_four_div(const Int& b_max);

// Representations a x^2 + b xy + c y^2 = rhs with |x|, |y| <= bound for a
// positive definite form; complete when the form's own bound fits inside.
SearchResult quadratic_form_solve(const Int& a, const Int& b, const Int& c, const Int& rhs,
                                  long bound);

}  // namespace mordell
