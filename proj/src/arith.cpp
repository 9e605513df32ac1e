#include "mordell/arith.hpp"

#include <algorithm>
#include <cmath>

#include "mordell/error.hpp"

namespace mordell {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::ZeroB: return "ZeroB";
    case ErrorKind::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::IdentityPoint: return "IdentityPoint";
    case ErrorKind::MalformedPoint: return "MalformedPoint";
    case ErrorKind::TorsionObstruction: return "TorsionObstruction";
    case ErrorKind::UnsupportedIndex: return "UnsupportedIndex";
    case ErrorKind::RootFindingFailure: return "RootFindingFailure";
    case ErrorKind::CaseNotApplicable: return "CaseNotApplicable";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::TorsionPoint: return "TorsionPoint";
    case ErrorKind::NotQuasiMinimal: return "NotQuasiMinimal";
    case ErrorKind::UnknownKind: return "UnknownKind";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::OffRealComponent: return "OffRealComponent";
    case ErrorKind::TorsionInput: return "TorsionInput";
    case ErrorKind::NotTwoDivisible: return "NotTwoDivisible";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::InadmissibleParameter: return "InadmissibleParameter";
    case ErrorKind::BoundTooLarge: return "BoundTooLarge";
    case ErrorKind::IndefiniteForm: return "IndefiniteForm";
    case ErrorKind::NonPositiveX: return "NonPositiveX";
    case ErrorKind::GeneratorNotOnCurve: return "GeneratorNotOnCurve";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

Int int_from_string(const std::string& s) {
  std::string t = s;
  if (!t.empty() && t[0] == '+') t = t.substr(1);
  Int v;
  if (t.empty() || v.set_str(t, 10) != 0)
    throw Error(ErrorKind::ConfigError, "not an integer: " + s);
  return v;
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(int_from_string(s));
  Int n = int_from_string(s.substr(0, slash));
  Int d = int_from_string(s.substr(slash + 1));
  if (d == 0) throw Error(ErrorKind::ConfigError, "zero denominator: " + s);
  Rat q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Int& v) { return v.get_str(10); }

std::string to_string(const Rat& v) { return v.get_str(10); }

Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int isqrt(const Int& v) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

bool is_square(const Int& v, Int* root) {
  if (v < 0) return false;
  if (!mpz_perfect_square_p(v.get_mpz_t())) return false;
  if (root) *root = isqrt(v);
  return true;
}

bool is_cube(const Int& v, Int* root) {
  Int r;
  int exact = mpz_root(r.get_mpz_t(), v.get_mpz_t(), 3);
  if (!exact) return false;
  if (root) *root = r;
  return true;
}

Int icbrt_floor(const Int& v) {
  Int r;
  mpz_root(r.get_mpz_t(), v.get_mpz_t(), 3);  // truncates toward zero
  if (v < 0 && r * r * r != v) r -= 1;
  return r;
}

bool is_prime(const Int& p) {
  if (p < 2) return false;
  return mpz_probab_prime_p(p.get_mpz_t(), 40) > 0;
}

unsigned long ord(const Int& v, const Int& p) {
  if (v == 0) return ~0UL;
  if (p == 2) return mpz_scan1(v.get_mpz_t(), 0);
  Int t;
  return mpz_remove(t.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
}

std::optional<long> valuation(const Rat& q, const Int& p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, to_string(p));
  if (q == 0) return std::nullopt;
  long a = static_cast<long>(ord(q.get_num(), p));
  long b = static_cast<long>(ord(q.get_den(), p));
  return a - b;
}

long double log_abs(const Int& v) {
  long e = 0;
  double m = mpz_get_d_2exp(&e, v.get_mpz_t());
  return std::log(std::fabs(static_cast<long double>(m))) +
         static_cast<long double>(e) * std::log(2.0L);
}

long double to_ld(const Rat& q) {
  if (q == 0) return 0.0L;
  long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::ldexp(static_cast<long double>(mn) / md, static_cast<int>(en - ed));
}

namespace {

Int pollard_brent(const Int& n, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  Int y = seed % 97 + 2, c = seed % 89 + 1, m = 128, g = 1, r = 1, q = 1;
  Int x, ys, t;
  auto f = [&](const Int& v) {
    Int w = v * v + c;
    mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
    return w;
  };
  while (g == 1) {
    x = y;
    for (Int i = 0; i < r; ++i) y = f(y);
    Int k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (Int i = 0; i < m && i < r - k; ++i) {
        y = f(y);
        t = x - y;
        t = abs(t);
        q = q * t;
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      t = abs(Int(x - ys));
      mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void factor_rec(const Int& n, Factorization& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  Int d = n;
  for (unsigned long seed = 1; d == n; ++seed) d = pollard_brent(n, seed);
  factor_rec(d, out);
  factor_rec(Int(n / d), out);
}

}  // namespace

Factorization factor(const Int& n) {
  Factorization out;
  Int m = abs(n);
  if (m == 0) throw Error(ErrorKind::ZeroB, "cannot factor zero");
  for (unsigned long p : {2UL, 3UL, 5UL}) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      out[Int(p)] += 1;
      m /= p;
    }
  }
  // Wheel trial division up to a small limit; rho handles the rest.
  static const unsigned long inc[8] = {4, 2, 4, 2, 4, 6, 2, 6};
  unsigned long p = 7;
  for (int i = 0; p < 100000; p += inc[i++ & 7]) {
    if (Int(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      out[Int(p)] += 1;
      m /= p;
    }
  }
  if (m > 1) {
    if (Int(p) * p > m) {
      out[m] += 1;
    } else {
      factor_rec(m, out);
    }
  }
  return out;
}

std::vector<Int> divisors(const Factorization& f) {
  std::vector<Int> ds{1};
  for (const auto& [p, e] : f) {
    size_t base = ds.size();
    Int pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

bool sixth_power_free(const Int& n) {
  for (const auto& [p, e] : factor(n))
    if (e >= 6) return false;
  return true;
}

bool fits_i64(const Int& v) { return mpz_fits_slong_p(v.get_mpz_t()) != 0; }

int64_t to_i64(const Int& v) { return static_cast<int64_t>(v.get_si()); }

}  // namespace mordell
