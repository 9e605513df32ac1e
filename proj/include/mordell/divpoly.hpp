#pragma once

// Division polynomials psi_n, phi_n, omega_n on y^2 = x^3 + B.

#include <optional>
#include <vector>

#include "mordell/curve.hpp"
#include "mordell/poly.hpp"

namespace mordell {

struct DivisionPolyValue {
  long n = 0;
  Rat psi, phi, omega;
  // P = (a/d^2, b/d^3); hatted values are d^(n^2-1) psi, d^(2n^2) phi,
  // d^(3n^2) omega, all integers.
  Int d;
  Int psi_hat, phi_hat, omega_hat;
};

// Memoized evaluation of the recurrences at one point. g_k stores psi_k for
// odd k and psi_k / y for even k, evaluated at the integral model (a, b) of
// the curve y^2 = x^3 + B d^6, so every entry is an integer.
class DivisionPolySession {
 public:
  DivisionPolySession(const MordellCurve& E, const CurvePoint& P);

  DivisionPolyValue eval(long n);
  // x([n]P), y([n]P); throws TorsionObstruction when psi_n(P) = 0.
  CurvePoint multiple(long n);

  const Int& g(long k);  // k >= -1

 private:
  void extend(long k);

  Int a_, b_, Bd_, d_, F_;  // F = a^3 + Bd^6 = b^2
  std::vector<Int> g_;      // g_[k + 1] holds g_k
};

DivisionPolyValue eval_division_polys(const MordellCurve& E, const CurvePoint& P, long n);
CurvePoint multiple_via_division_polys(const MordellCurve& E, const CurvePoint& P, long n);

// psi_n for odd n (psi_n / y for even n) at B = 1 as a polynomial in x. The
// coefficient of x^k for general B is c[k] * B^((w - 2k)/6), w the weight.
struct UnitPsi {
  long n;
  long weight;  // n^2 - 1 (odd n) or n^2 - 4 (even n)
  ZPoly poly;
};
UnitPsi unit_psi(long n);

// Same polynomial with B substituted.
ZPoly psi_poly(long n, const Int& B);

// sum c[i] X^i Y^(d-i) with X = x^3, Y = 4B.
struct WeightedBinaryForm {
  long degree = 0;
  std::vector<Int> c;
  Int eval(const Int& X, const Int& Y) const;
};
WeightedBinaryForm psi_weighted_form(long n);

// |psi_n(P)^2 - n^2 prod |x(P) - x(Q)|| / max(1, psi_n(P)^2) over the
// nontrivial n-torsion, with roots of psi_n found numerically.
long double torsion_product_residual(const MordellCurve& E, long n, const CurvePoint& P);

// Complex x-coordinates of the nontrivial n-torsion (one per +-pair).
std::vector<cplx> torsion_x_roots(long n, const Int& B);

Int division_resultant(long m, const Int& B);
bool resultant_check(long m, const Int& B);

struct ValuationPrediction {
  long value = 0;
  bool exact = true;  // false: value is a lower bound
  const char* rule = "";
};
ValuationPrediction predicted_psi_valuation(const MordellCurve& E, const CurvePoint& P,
                                            long n, const Int& p);

// |psi_n(P)| < (3^(3/2) 4 |B|)^((n^2-1)/6). `relax_index` skips the n > 10
// hypothesis for fixture testing.
bool psi_size_bound_check(const MordellCurve& E, const CurvePoint& P, long n,
                          bool relax_index = false);

}  // namespace mordell
