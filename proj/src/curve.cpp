#include "mordell/curve.hpp"

#include "mordell/error.hpp"

namespace mordell {

CurvePoint CurvePoint::affine(const Rat& x, const Rat& y) {
  CurvePoint P;
  P.identity = false;
  P.x = x;
  P.y = y;
  P.x.canonicalize();
  P.y.canonicalize();
  return P;
}

bool CurvePoint::is_integral() const {
  return !identity && x.get_den() == 1 && y.get_den() == 1;
}

bool CurvePoint::operator==(const CurvePoint& o) const {
  if (identity || o.identity) return identity == o.identity;
  return x == o.x && y == o.y;
}

std::string CurvePoint::str() const {
  if (identity) return "O";
  return "(" + to_string(x) + "," + to_string(y) + ")";
}

int TorsionKind::order() const {
  switch (group) {
    case TorsionGroup::Trivial: return 1;
    case TorsionGroup::Z2: return 2;
    case TorsionGroup::Z3: return 3;
    case TorsionGroup::Z6: return 6;
  }
  return 1;
}

bool MordellCurve::contains(const CurvePoint& P) const {
  if (P.identity) return true;
  return P.y * P.y == P.x * P.x * P.x + Rat(B);
}

long double MordellCurve::log_abs_B() const { return log_abs(B); }

Reduced sixth_power_free_reduce(const Int& B) {
  if (B == 0) throw Error(ErrorKind::ZeroB, "B must be nonzero");
  Int u = 1, r = B;
  for (const auto& [p, e] : factor(B)) {
    Int p6 = ipow(p, 6);
    for (unsigned k = 0; k < e / 6; ++k) {
      u *= p;
      r /= p6;
    }
  }
  return {r, u};
}

namespace {

TorsionKind classify_quasi_minimal(const Int& B) {
  TorsionKind t;
  auto pt = [](long x, long y) { return CurvePoint::affine(Rat(x), Rat(y)); };
  if (B == 1) {
    t.group = TorsionGroup::Z6;
    t.points = {{pt(-1, 0), 2}, {pt(0, 1), 3}, {pt(0, -1), 3},
                {pt(2, 3), 6},  {pt(2, -3), 6}};
    return t;
  }
  if (B == -432) {
    t.group = TorsionGroup::Z3;
    t.points = {{pt(12, 36), 3}, {pt(12, -36), 3}};
    return t;
  }
  Int r;
  if (is_square(B, &r)) {
    t.group = TorsionGroup::Z3;
    t.points = {{CurvePoint::affine(0, Rat(r)), 3},
                {CurvePoint::affine(0, Rat(Int(-r))), 3}};
    return t;
  }
  if (is_cube(B, &r)) {
    t.group = TorsionGroup::Z2;
    t.points = {{CurvePoint::affine(Rat(Int(-r)), 0), 2}};
  }
  return t;
}

}  // namespace

MordellCurve make_curve(const Int& B) {
  if (B == 0) throw Error(ErrorKind::ZeroB, "B must be nonzero");
  MordellCurve E;
  E.B = B;
  E.factorization = factor(B);
  E.quasi_minimal = true;
  for (const auto& [p, e] : E.factorization)
    if (e >= 6) E.quasi_minimal = false;
  if (E.quasi_minimal) {
    E.torsion = classify_quasi_minimal(B);
  } else {
    // Scale the torsion of the quasi-minimal model by (u^2, u^3).
    Reduced red = sixth_power_free_reduce(B);
    E.torsion = classify_quasi_minimal(red.B);
    Int u2 = red.u * red.u, u3 = u2 * red.u;
    for (auto& [P, o] : E.torsion.points)
      P = CurvePoint::affine(P.x * Rat(u2), P.y * Rat(u3));
  }
  return E;
}

void require_on_curve(const MordellCurve& E, const CurvePoint& P) {
  if (!E.contains(P))
    throw Error(ErrorKind::PointNotOnCurve,
                P.str() + " not on y^2 = x^3 + " + to_string(E.B));
}

CurvePoint negate(const CurvePoint& P) {
  if (P.identity) return P;
  return CurvePoint::affine(P.x, -P.y);
}

namespace {

CurvePoint add_unchecked(const CurvePoint& P, const CurvePoint& Q) {
  if (P.identity) return Q;
  if (Q.identity) return P;
  Rat lambda;
  if (P.x == Q.x) {
    if (P.y != Q.y || P.y == 0) return CurvePoint::at_infinity();
    lambda = Rat(3) * P.x * P.x / (Rat(2) * P.y);
  } else {
    lambda = (Q.y - P.y) / (Q.x - P.x);
  }
  Rat x3 = lambda * lambda - P.x - Q.x;
  Rat y3 = lambda * (P.x - x3) - P.y;
  return CurvePoint::affine(x3, y3);
}

CurvePoint multiply_unchecked(const CurvePoint& P, long n) {
  if (n < 0) return negate(multiply_unchecked(P, -n));
  CurvePoint acc = CurvePoint::at_infinity(), base = P;
  unsigned long m = static_cast<unsigned long>(n);
  while (m) {
    if (m & 1) acc = add_unchecked(acc, base);
    m >>= 1;
    if (m) base = add_unchecked(base, base);
  }
  return acc;
}

}  // namespace

CurvePoint add(const MordellCurve& E, const CurvePoint& P, const CurvePoint& Q) {
  require_on_curve(E, P);
  require_on_curve(E, Q);
  return add_unchecked(P, Q);
}

CurvePoint dbl(const MordellCurve& E, const CurvePoint& P) {
  require_on_curve(E, P);
  return add_unchecked(P, P);
}

CurvePoint multiply(const MordellCurve& E, const CurvePoint& P, long n) {
  require_on_curve(E, P);
  return multiply_unchecked(P, n);
}

bool is_torsion(const MordellCurve& E, const CurvePoint& P) {
  require_on_curve(E, P);
  if (P.identity) return true;
  // Nagell-Lutz: torsion points on an integral model are integral.
  if (!P.is_integral()) return false;
  return multiply_unchecked(P, 6).identity;
}

DenominatorProfile denominator_profile(const CurvePoint& P) {
  if (P.identity) throw Error(ErrorKind::IdentityPoint, "identity has no denominator");
  Int D;
  const Int& dx = P.x.get_den();
  if (!is_square(dx, &D) || P.y.get_den() != D * D * D)
    throw Error(ErrorKind::MalformedPoint,
                "denominators of " + P.str() + " are not (D^2, D^3)");
  return {P.x.get_num(), D};
}

}  // namespace mordell
