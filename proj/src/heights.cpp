#include "mordell/heights.hpp"

#include <cmath>

#include "mordell/error.hpp"

namespace mordell {

long double naive_height(const CurvePoint& P) {
  if (P.identity) throw Error(ErrorKind::IdentityPoint, "naive height of O");
  const Int& n = P.x.get_num();
  const Int& d = P.x.get_den();
  if (n == 0) return 0.0L;
  return std::max(log_abs(n), log_abs(d));
}

namespace {

// log max(|t^4 - 8Bt|, |4(t^3 + B)|) - 4 log max(|t|, 1).
long double local_phi(long double t, long double B) {
  if (std::fabs(t) <= 1) {
    long double u = std::fabs(t * t * t * t - 8 * B * t);
    long double v = std::fabs(4 * (t * t * t + B));
    return std::log(std::max(u, v));
  }
  long double s = 1 / t;
  long double s3 = s * s * s;
  long double u = std::fabs(1 - 8 * B * s3);
  long double v = std::fabs(4 * (s + B * s3 * s));
  return std::log(std::max(u, v));
}

// Exponents of p in gcd(num, den) along the doubling orbit, for k < K.
std::vector<long> gcd_valuations(const Int& A, const Int& D, const Int& B, const Int& p,
                                 long K) {
  long Lp = 8 * static_cast<long>(ord(Int(2), p)) + 6 * static_cast<long>(ord(Int(3), p)) +
            4 * static_cast<long>(ord(B, p));
  for (long E = (K + 2) * Lp + 20;; E *= 2) {
    Int mod = ipow(p, E);
    long prec = E;
    Int X = A % mod, Z = D % mod;
    std::vector<long> out;
    bool ok = true;
    for (long k = 0; k < K && ok; ++k) {
      Int X3 = X * X * X, Z3 = Z * Z * Z;
      Int Xn = (X3 * X - 8 * B * X * Z3) % mod;
      Int Zn = (4 * Z * (X3 + B * Z3)) % mod;
      if (Xn < 0) Xn += mod;
      if (Zn < 0) Zn += mod;
      long vx = Xn == 0 ? prec : static_cast<long>(ord(Xn, p));
      long vz = Zn == 0 ? prec : static_cast<long>(ord(Zn, p));
      long v = std::min(std::min(vx, vz), prec);
      if (v >= prec - 1) {
        ok = false;
        break;
      }
      out.push_back(v);
      Int pv = ipow(p, v);
      X = Xn / pv;
      Z = Zn / pv;
      prec -= v;
      mod = ipow(p, prec);
      X %= mod;
      Z %= mod;
    }
    if (ok) return out;
  }
}

}  // namespace

long double canonical_height(const MordellCurve& E, const CurvePoint& P, long double tol) {
  if (P.identity) return 0.0L;
  require_on_curve(E, P);
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  if (is_torsion(E, P)) return 0.0L;

  const long double logB = E.log_abs_B();
  const long double Tmax = 4 * logB + 8 * std::log(2.0L) + 6 * std::log(3.0L) +
                           std::log(12 * std::exp(std::min(logB, 11000.0L)) + 5) + 1;
  // Tail of the series after K terms is at most Tmax 4^-K / 6.
  long K = 1;
  while (Tmax * std::pow(4.0L, -K) / 6 > tol / 4) ++K;

  const Int& A = P.x.get_num();
  const Int& D = P.x.get_den();
  std::vector<long double> logg(K, 0.0L);
  Int sixB = 6 * E.B;
  for (const auto& [p, e] : factor(sixB)) {
    std::vector<long> v = gcd_valuations(A, D, E.B, p, K);
    long double lp = std::log(p.get_d());
    for (long k = 0; k < K; ++k) logg[k] += v[k] * lp;
  }

  long double Bf = static_cast<long double>(E.B.get_d());
  long double t = to_ld(P.x);
  long double sum = 0, w = 0.25L;
  for (long k = 0; k < K; ++k) {
    sum += w * (local_phi(t, Bf) - logg[k]);
    long double t3 = t * t * t;
    long double den = 4 * (t3 + Bf);
    if (std::fabs(t) > 1e6L)
      t = t * (1 - 8 * Bf / t3) / (4 * (1 + Bf / t3));
    else if (den == 0)
      t = INFINITY;
    else
      t = (t3 * t - 8 * Bf * t) / den;
    if (!std::isfinite(t)) t = 1e300L;  // lands on 2-torsion numerically; Phi(big t) ~ 0
    w /= 4;
  }
  return 0.5L * (naive_height(P) + sum);
}

HeightEstimate height_estimate(const MordellCurve& E, const CurvePoint& P, long double tol) {
  return {naive_height(P), canonical_height(E, P, tol), tol};
}

const std::vector<LowerBoundRule>& lower_bound_rules() {
  static const std::vector<LowerBoundRule> rules = {
      {15552, {15120, 3024, 1296}, 0.2262, false},
      {576, {80, 208}, 0.1347, false},
      {15552, {13392, 9936}, 0.1347, false},
      {7776, {6372, 2052, 324}, 0.1107, false},
      {3888, {108, 540}, 0.1107, false},
      {1944, {1809, 297}, 0.1107, false},
      {1728, {144}, 0.1107, false},
      {1, {0}, 0.0431, false},
  };
  return rules;
}

long double congruence_constant(const Int& B) {
  for (const auto& r : lower_bound_rules()) {
    Int m = B % r.modulus;
    if (m < 0) m += r.modulus;
    long res = m.get_si();
    for (long c : r.residues)
      if (c == res) return r.C;
  }
  return lower_bound_rules().back().C;
}

LowerBoundConstant lower_bound_constant(const Int& B) {
  if (B == 0) throw Error(ErrorKind::ZeroB, "B must be nonzero");
  if (!sixth_power_free(B)) throw Error(ErrorKind::NotQuasiMinimal, to_string(B));
  if (is_cube(B)) {
    bool odd = mpz_odd_p(B.get_mpz_t());
    return {1.0L / 24, odd ? 0.002L : -0.2290L};
  }
  return {1.0L / 36, congruence_constant(B)};
}

long double lower_bound_value(const Int& B) {
  LowerBoundConstant c = lower_bound_constant(B);
  long double L = log_abs(B);
  long double v = c.coefficient * L - c.C;
  if (is_cube(B)) v = std::max(v, L / 36 - congruence_constant(B));
  return v;
}

bool check_lower_bound(const MordellCurve& E, const CurvePoint& P) {
  if (P.identity || is_torsion(E, P)) throw Error(ErrorKind::TorsionPoint, P.str());
  return canonical_height(E, P, 1e-6L) > lower_bound_value(E.B) - 1e-6L;
}

long double height_difference_interval(const MordellCurve& E) {
  if (E.B < 0) return -0.28L;
  return -E.log_abs_B() / 6 - 0.299L;
}

HeightBoundKind parse_height_bound_kind(const std::string& s) {
  if (s == "two_div_point") return HeightBoundKind::TwoDivPoint;
  if (s == "four_div_floor") return HeightBoundKind::FourDivFloor;
  if (s == "n_mult_witness") return HeightBoundKind::NMultWitness;
  throw Error(ErrorKind::UnknownKind, s);
}

long double multiple_height_upper_bound(HeightBoundKind kind, const Int& B, long n) {
  long double L = log_abs(B);
  switch (kind) {
    case HeightBoundKind::TwoDivPoint:
      return 7 * L / 18 + 0.68277L;
    case HeightBoundKind::FourDivFloor:
      return 2 * L / 3 - 0.239L;
    case HeightBoundKind::NMultWitness:
      if (n < 1) throw Error(ErrorKind::UnsupportedIndex, "n_mult_witness needs n >= 1");
      if (B < 0) return std::log(static_cast<long double>(n)) + L / 6 - 0.617L;
      return std::log(static_cast<long double>(n)) + L / 3 - 0.597L;
  }
  throw Error(ErrorKind::UnknownKind, "height bound kind");
}

}  // namespace mordell
