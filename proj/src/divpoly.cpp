#include "mordell/divpoly.hpp"

#include <cmath>
#include <stdexcept>

#include "mordell/error.hpp"

namespace mordell {

namespace {

Int halve(const Int& v) {
  if (!mpz_divisible_2exp_p(v.get_mpz_t(), 1))
    throw std::logic_error("division polynomial recurrence: odd value in exact halving");
  Int r;
  mpz_divexact_ui(r.get_mpz_t(), v.get_mpz_t(), 2);
  return r;
}

Int quarter(const Int& v) {
  if (!mpz_divisible_2exp_p(v.get_mpz_t(), 2))
    throw std::logic_error("omega recovery: value not divisible by 4");
  Int r;
  mpz_divexact_ui(r.get_mpz_t(), v.get_mpz_t(), 4);
  return r;
}

}  // namespace

DivisionPolySession::DivisionPolySession(const MordellCurve& E, const CurvePoint& P) {
  if (P.identity) throw Error(ErrorKind::IdentityPoint, "division polynomials need an affine point");
  require_on_curve(E, P);
  DenominatorProfile prof = denominator_profile(P);
  a_ = prof.A;
  d_ = prof.D;
  b_ = P.y.get_num();
  Bd_ = E.B * ipow(d_, 6);
  F_ = b_ * b_;
  Int a3 = a_ * a_ * a_;
  g_ = {Int(-1), Int(0), Int(1), Int(2), 3 * a3 * a_ + 12 * Bd_ * a_,
        4 * (a3 * a3 + 20 * Bd_ * a3 - 8 * Bd_ * Bd_)};
}

void DivisionPolySession::extend(long k) {
  while (static_cast<long>(g_.size()) - 2 < k) {
    long n = static_cast<long>(g_.size()) - 1;  // next index
    auto G = [&](long i) -> const Int& { return g_[i + 1]; };
    Int v;
    if (n & 1) {
      long m = (n - 1) / 2;
      Int t1 = G(m + 2) * G(m) * G(m) * G(m);
      Int t2 = G(m - 1) * G(m + 1) * G(m + 1) * G(m + 1);
      if (m % 2 == 0)
        v = F_ * F_ * t1 - t2;
      else
        v = t1 - F_ * F_ * t2;
    } else {
      long m = n / 2;
      v = G(m) * halve(G(m + 2) * G(m - 1) * G(m - 1) - G(m - 2) * G(m + 1) * G(m + 1));
    }
    g_.push_back(std::move(v));
  }
}

const Int& DivisionPolySession::g(long k) {
  if (k < -1) throw std::out_of_range("division polynomial index");
  extend(k);
  return g_[k + 1];
}

DivisionPolyValue DivisionPolySession::eval(long n) {
  if (n < 1) throw Error(ErrorKind::UnsupportedIndex, "n must be >= 1");
  extend(n + 2);
  auto G = [&](long i) -> const Int& { return g_[i + 1]; };
  DivisionPolyValue v;
  v.n = n;
  v.d = d_;
  bool odd = n & 1;
  v.psi_hat = odd ? G(n) : Int(b_ * G(n));
  if (odd)
    v.phi_hat = a_ * G(n) * G(n) - F_ * G(n + 1) * G(n - 1);
  else
    v.phi_hat = a_ * F_ * G(n) * G(n) - G(n + 1) * G(n - 1);
  Int w = quarter(G(n + 2) * G(n - 1) * G(n - 1) - G(n - 2) * G(n + 1) * G(n + 1));
  v.omega_hat = odd ? Int(b_ * w) : w;

  unsigned long n2 = static_cast<unsigned long>(n) * n;
  v.psi = Rat(v.psi_hat, ipow(d_, n2 - 1));
  v.phi = Rat(v.phi_hat, ipow(d_, 2 * n2));
  v.omega = Rat(v.omega_hat, ipow(d_, 3 * n2));
  v.psi.canonicalize();
  v.phi.canonicalize();
  v.omega.canonicalize();
  return v;
}

CurvePoint DivisionPolySession::multiple(long n) {
  DivisionPolyValue v = eval(n);
  if (v.psi_hat == 0)
    throw Error(ErrorKind::TorsionObstruction, "psi_" + std::to_string(n) + "(P) = 0");
  Int d2 = d_ * d_;
  Int s2 = v.psi_hat * v.psi_hat;
  Rat x(v.phi_hat, s2 * d2);
  Rat y(v.omega_hat, s2 * v.psi_hat * d2 * d_);
  x.canonicalize();
  y.canonicalize();
  return CurvePoint::affine(x, y);
}

DivisionPolyValue eval_division_polys(const MordellCurve& E, const CurvePoint& P, long n) {
  DivisionPolySession s(E, P);
  return s.eval(n);
}

CurvePoint multiple_via_division_polys(const MordellCurve& E, const CurvePoint& P, long n) {
  DivisionPolySession s(E, P);
  return s.multiple(n);
}

UnitPsi unit_psi(long n) {
  if (n < 1) throw Error(ErrorKind::UnsupportedIndex, "n must be >= 1");
  const ZPoly x = monomial(1, 1);
  const ZPoly F({Int(1), Int(0), Int(0), Int(1)});
  const ZPoly F2 = F * F;
  std::vector<ZPoly> g = {ZPoly({Int(-1)}), ZPoly(), ZPoly({Int(1)}), ZPoly({Int(2)}),
                          ZPoly({Int(0), Int(12), Int(0), Int(0), Int(3)}),
                          ZPoly({Int(-32), Int(0), Int(0), Int(80), Int(0), Int(0), Int(4)})};
  auto G = [&](long i) -> const ZPoly& { return g[i + 1]; };
  while (static_cast<long>(g.size()) - 2 < n) {
    long k = static_cast<long>(g.size()) - 1;
    ZPoly v;
    if (k & 1) {
      long m = (k - 1) / 2;
      ZPoly t1 = G(m + 2) * G(m) * G(m) * G(m);
      ZPoly t2 = G(m - 1) * G(m + 1) * G(m + 1) * G(m + 1);
      v = (m % 2 == 0) ? F2 * t1 - t2 : t1 - F2 * t2;
    } else {
      long m = k / 2;
      v = G(m) * div_exact(G(m + 2) * G(m - 1) * G(m - 1) - G(m - 2) * G(m + 1) * G(m + 1),
                           Int(2));
    }
    g.push_back(std::move(v));
  }
  UnitPsi u;
  u.n = n;
  u.weight = (n & 1) ? n * n - 1 : n * n - 4;
  u.poly = G(n);
  return u;
}

ZPoly psi_poly(long n, const Int& B) {
  UnitPsi u = unit_psi(n);
  std::vector<Int> c(u.poly.c.size());
  for (size_t k = 0; k < c.size(); ++k) {
    if (u.poly.c[k] == 0) continue;
    long e = (u.weight - 2 * static_cast<long>(k)) / 6;
    c[k] = u.poly.c[k] * ipow(B, static_cast<unsigned long>(e));
  }
  return ZPoly(std::move(c));
}

Int WeightedBinaryForm::eval(const Int& X, const Int& Y) const {
  Int r = 0;
  for (long i = 0; i <= degree; ++i)
    r += c[i] * ipow(X, i) * ipow(Y, degree - i);
  return r;
}

WeightedBinaryForm psi_weighted_form(long n) {
  if (n < 1 || n % 2 == 0 || n % 3 == 0)
    throw Error(ErrorKind::UnsupportedIndex,
                "weighted form needs odd n prime to 3, got " + std::to_string(n));
  UnitPsi u = unit_psi(n);
  WeightedBinaryForm f;
  f.degree = (n * n - 1) / 6;
  f.c.resize(f.degree + 1);
  for (long i = 0; i <= f.degree; ++i) {
    Int a = u.poly.coeff(3 * i);
    Int q = ipow(Int(4), f.degree - i);
    if (!mpz_divisible_p(a.get_mpz_t(), q.get_mpz_t()))
      throw std::logic_error("psi coefficient not divisible by the 4B weight");
    f.c[i] = a / q;
  }
  return f;
}

namespace {

void push_cube_roots(std::vector<cplx>& out, cplx w) {
  if (w == cplx(0)) {
    out.push_back(0);
    return;
  }
  const long double pi = std::acos(-1.0L);
  long double r = std::cbrt(std::abs(w));
  long double t = std::arg(w);
  for (int k = 0; k < 3; ++k) out.push_back(std::polar(r, (t + 2 * pi * k) / 3));
}

}  // namespace

std::vector<cplx> torsion_x_roots(long n, const Int& B) {
  if (n < 2) throw Error(ErrorKind::UnsupportedIndex, "n must be >= 2");
  UnitPsi u = unit_psi(n);
  // psi = x^e * U(x^3) at B = 1, e = weight/2 mod 3.
  long e = ((u.weight / 2) % 3 + 3) % 3;
  std::vector<long double> U;
  for (long k = e; k <= u.poly.degree(); k += 3) U.push_back(static_cast<long double>(u.poly.c[k].get_d()));
  std::vector<cplx> out;
  for (long i = 0; i < e; ++i) out.push_back(0);
  long double Bf = static_cast<long double>(B.get_d());
  if (U.size() > 1) {
    for (const cplx& r : poly_roots(U)) push_cube_roots(out, r * Bf);
  }
  if (n % 2 == 0) push_cube_roots(out, cplx(-Bf));
  return out;
}

long double torsion_product_residual(const MordellCurve& E, long n, const CurvePoint& P) {
  if (n < 2) throw Error(ErrorKind::UnsupportedIndex, "n must be >= 2");
  DivisionPolyValue v = eval_division_polys(E, P, n);
  if (v.psi == 0) return 0.0L;
  UnitPsi u = unit_psi(n);
  std::vector<cplx> roots = torsion_x_roots(n, E.B);
  long double xp = to_ld(P.x);
  long double logprod = 2 * std::log(static_cast<long double>(n));
  size_t nonsplit = (n % 2 == 0) ? 3 : 0;  // 2-torsion x-values occur once
  for (size_t i = 0; i < roots.size(); ++i) {
    long double f = std::abs(cplx(xp) - roots[i]);
    if (f == 0) return 0.0L;
    logprod += (i + nonsplit >= roots.size() ? 1 : 2) * std::log(f);
  }
  long double logpsi2 = 2 * (log_abs(v.psi.get_num()) - log_abs(v.psi.get_den()));
  if (logpsi2 >= 0) return std::fabs(1.0L - std::exp(logprod - logpsi2));
  return std::fabs(std::exp(logpsi2) - std::exp(logprod));
}

Int division_resultant(long m, const Int& B) {
  ZPoly x = monomial(1, 1);
  ZPoly F({B, Int(0), Int(0), Int(1)});
  ZPoly gm = psi_poly(m, B), gp = psi_poly(m + 1, B), gq = psi_poly(m - 1, B);
  ZPoly phi, psi2;
  if (m & 1) {
    phi = x * gm * gm - F * gp * gq;
    psi2 = gm * gm;
  } else {
    phi = x * F * gm * gm - gp * gq;
    psi2 = F * gm * gm;
  }
  return resultant(phi, psi2);
}

bool resultant_check(long m, const Int& B) {
  if (m < 2 || m > 4) throw Error(ErrorKind::UnsupportedIndex, "resultant check covers m in 2..4");
  Int r = division_resultant(m, B);
  unsigned long d = static_cast<unsigned long>(m * m * (m * m - 1) / 6);
  return abs(r) == ipow(Int(432) * B * B, d);
}

ValuationPrediction predicted_psi_valuation(const MordellCurve& E, const CurvePoint& P,
                                            long n, const Int& p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, to_string(p));
  if (!P.is_integral()) throw Error(ErrorKind::CaseNotApplicable, "P must be integral");
  if (n < 1 || n % 2 == 0) throw Error(ErrorKind::CaseNotApplicable, "n must be odd");
  const Int a = P.x.get_num(), b = P.y.get_num();
  const long d6 = (n * n - 1) / 6;  // used only when 3 does not divide n
  const bool n3 = n % 3 == 0;
  auto o = [&](const Int& v) -> long { return v == 0 ? 1L << 30 : static_cast<long>(ord(v, p)); };
  const long oa3 = 3 * o(a), oB = o(E.B);
  ValuationPrediction r;

  if (p > 3) {
    if (n3 || mpz_divisible_p(Int(n).get_mpz_t(), p.get_mpz_t()))
      throw Error(ErrorKind::CaseNotApplicable, "index shares a factor with the prime");
    if (oB == 0) {
      if (oa3 == 0) throw Error(ErrorKind::CaseNotApplicable, "p does not divide 6B");
      r.value = 0;  // p | a only: leading term n a^(3d) is the unique minimum
      r.rule = "p>3, p | a, p does not divide B";
      return r;
    }
    if (oa3 != oB) {
      r.value = d6 * std::min(oa3, oB);
      r.rule = "p>3, ord(a^3) != ord(B)";
      return r;
    }
    if (oB == 3) {
      r.value = d6 * oB;
      r.rule = "p>3, ord(a^3) = ord(B) = 3";
      return r;
    }
    throw Error(ErrorKind::CaseNotApplicable, "no listed case for p > 3");
  }

  if (p == 2) {
    long o4B = oB + 2;
    if (oa3 != o4B) {
      if (n3) throw Error(ErrorKind::CaseNotApplicable, "2-adic min rule needs 3 not dividing n");
      r.value = d6 * std::min(oa3, o4B);
      r.rule = "p=2, ord(a^3) != ord(4B)";
      return r;
    }
    if (oa3 == 6) {
      r.value = n3 ? n * n : n * n - 1;
      r.exact = !n3;
      r.rule = "p=2, ord(a^3) = ord(4B) = 6";
      return r;
    }
    throw Error(ErrorKind::CaseNotApplicable, "no listed 2-adic case");
  }

  // p == 3
  const long ob = o(b);
  if (oa3 != oB) {
    if (n3) throw Error(ErrorKind::CaseNotApplicable, "3-adic min rule needs 3 not dividing n");
    r.value = d6 * std::min(oa3, oB);
    r.rule = "p=3, ord(a^3) != ord(B)";
    return r;
  }
  if (oa3 == 0 && oB == 0) {
    if (ob == 0) {
      r.value = 0;
      r.exact = !n3;
      r.rule = "p=3, 3 does not divide abB";
      return r;
    }
    r.value = (n * n - 1) / 4;
    r.rule = "p=3, 3 does not divide aB, 3 | b";
    return r;
  }
  if (oa3 == 3 && oB == 3) {
    if (ob == 2) {
      r.exact = !n3;
      r.value = n3 ? (2 * n * n + 2) / 3 : 2 * (n * n - 1) / 3;
      r.rule = "p=3, ord(a^3) = ord(B) = 3, ord(b) = 2";
      return r;
    }
    if (ob > 2) {
      r.value = 3 * (n * n - 1) / 4;
      r.rule = "p=3, ord(a^3) = ord(B) = 3, ord(b) > 2";
      return r;
    }
  }
  throw Error(ErrorKind::CaseNotApplicable, "no listed 3-adic case");
}

bool psi_size_bound_check(const MordellCurve& E, const CurvePoint& P, long n, bool relax_index) {
  if (n % 2 == 0 || n % 3 == 0)
    throw Error(ErrorKind::HypothesisViolated, "n must be odd and prime to 3");
  if (!relax_index && n <= 10) throw Error(ErrorKind::HypothesisViolated, "n must exceed 10");
  DivisionPolySession s(E, P);
  CurvePoint Q = s.multiple(n);
  if (!Q.is_integral()) throw Error(ErrorKind::HypothesisViolated, "[n]P is not integral");
  DivisionPolyValue v = s.eval(n);
  // Squared form of the bound: psi^2 < (432 B^2)^((n^2-1)/6).
  Rat lhs = v.psi * v.psi;
  Int rhs = ipow(Int(432) * E.B * E.B, static_cast<unsigned long>((n * n - 1) / 6));
  return lhs < Rat(rhs);
}

}  // namespace mordell
