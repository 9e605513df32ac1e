#pragma once

// Real period, elliptic logarithms, and the linear-form inequalities.

#include <string>

#include "mordell/curve.hpp"

namespace mordell {

struct PeriodData {
  long double omega_real = 0;  // real period of y^2 = x^3 + B
  long double omega1 = 0;      // real period of y^2 = x^3 + 1
  long double tau_im = 0;      // Im of the period ratio, reduced to the fundamental domain
};
PeriodData real_period(const Int& B, long double tol = 1e-15L);

// Incomplete elliptic integral of the first kind by descending Landen steps.
long double elliptic_f(long double phi, long double k);

struct EllipticLog {
  long double z = 0;  // in [0, omega)
  long double omega = 0;
  CurvePoint target;

  // Representative in (-omega/2, omega/2].
  long double symmetric() const { return z > omega / 2 ? z - omega : z; }
};
// z = (1/2) int_{x}^{inf} dt / sqrt(t^3 + B), oriented so that y < 0 gives
// z < omega/2. Every real point lies on the single real component.
EllipticLog elliptic_log(const MordellCurve& E, const CurvePoint& P, long double tol = 1e-15L);

// Same quantity by Gauss-Legendre quadrature of the defining integral.
long double elliptic_log_quadrature(const MordellCurve& E, const CurvePoint& P);

// log|z| <= (3/2) log 2 - (1/2) log x(P), for x(P) >= 2 |B|^(1/3).
bool tza_bound_holds(const MordellCurve& E, const CurvePoint& P);

// Every root of psi_n has |x| < (n^2/7) |B|^(1/3). Requires n >= 11.
bool torsion_x_bound_check(long n, const Int& B, long double tol = 1e-9L);

enum class LinearFormKind { GeneralN, FourMult, TwoThreeMult };
LinearFormKind parse_linear_form_kind(const std::string& s);  // throws UnknownKind
long double linear_form_upper(const Int& B, LinearFormKind kind, long n = 0);

// David-type lower bound on log|L_{n,m}| with the regime chosen from n and B.
long double david_lower(const Int& B, long n);
long double david_lower(const Int& B, long double log_n);
int david_regime(const Int& B, long double log_n);  // 1, 2 or 3

struct LinearFormParams {
  long double log_V1 = 0;
  long double log_V2 = 0;
  long double log_B_david = 0;
  long double C_abs = 4e41L;
  long double h_E = 0;  // log(4|B|)
};
// Parameter choices of the regime for (B, n).
LinearFormParams linear_form_params(const Int& B, long double log_n);
// -C (log B + 1)(log log B + h(E) + 1)^3 log V1 log V2.
long double david_general(const LinearFormParams& p);

// max{3e22 (log|B|)^(5/2), 7.511e26}, |B| > 75.
long double n_upper_bound(const Int& B);

// n1^2 (log|B|/36 - C) + log omega1 - log|B|/3 - 1.399.
long double gap_lower_bound_on_log_n2(long n1, const Int& B);

// m with z([n]P) = n z(P) + m omega for symmetric principal values.
long reduction_witness(const MordellCurve& E, const CurvePoint& P, long n);

}  // namespace mordell
