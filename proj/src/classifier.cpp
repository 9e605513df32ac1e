#include "mordell/classifier.hpp"

#include "mordell/error.hpp"

namespace mordell {

std::vector<long> MultipleReport::integral_indices() const {
  std::vector<long> out;
  for (const auto& e : entries)
    if (e.integral) out.push_back(e.n);
  return out;
}

MultipleReport integral_multiples(const MordellCurve& E, const CurvePoint& P, long n_max) {
  require_on_curve(E, P);
  if (is_torsion(E, P)) throw Error(ErrorKind::TorsionInput, P.str() + " is torsion");
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  MultipleReport r;
  r.curve = E;
  r.base = P;
  CurvePoint acc = P;
  for (long n = 1; n <= n_max; ++n) {
    MultipleEntry e;
    e.n = n;
    e.point = acc;
    e.D = denominator_profile(acc).D;
    e.integral = e.D == 1;
    r.entries.push_back(e);
    acc = add(E, acc, P);
  }
  return r;
}

namespace {

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

bool divides(const Int& d, const Int& n) {
  return d != 0 && mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t());
}

void require_integral_nontorsion(const MordellCurve& E, const CurvePoint& P) {
  require_on_curve(E, P);
  if (is_torsion(E, P)) throw Error(ErrorKind::TorsionInput, P.str() + " is torsion");
  if (!P.is_integral()) throw Error(ErrorKind::HypothesisViolated, P.str() + " is not integral");
}

std::vector<Int> positive_divisors(const Int& n) {
  if (n == 0) return {};
  return divisors(factor(n));
}

// Every prime factor of n divides m.
bool primes_divide(Int n, const Int& m) {
  n = abs(n);
  while (n != 1) {
    Int g = gcd(n, m);
    if (g == 1) return false;
    n /= g;
  }
  return true;
}

}  // namespace

bool two_divisible(const CurvePoint& P) {
  if (!P.is_integral() || P.y == 0) return false;
  Int a = P.x.get_num(), b = P.y.get_num();
  return divides(2 * b, 3 * a * a);
}

TwoDivisibilityParams two_div_decompose(const MordellCurve& E, const CurvePoint& P) {
  require_integral_nontorsion(E, P);
  if (!two_divisible(P)) throw Error(ErrorKind::NotTwoDivisible, "2y does not divide 3x^2");
  const Int a = P.x.get_num(), b = P.y.get_num();
  std::vector<TwoDivisibilityParams> found;
  for (int alpha = 0; alpha <= 1; ++alpha) {
    Int s = alpha ? Int(3) : Int(1);
    if (!divides(s, b)) continue;
    Int r = b / s;
    for (const Int& m : positive_divisors(a)) {
      Int m2 = m * m;
      if (!divides(m2, r)) continue;
      // (M, t, K) -> (-M, -t, -K) gives the same point; M > 0 normalizes.
      const Int& M = m;
      Int N = r / m2;
      if (!divides(M * N, a)) continue;
      Int t = a / (M * N);
      Int K = (alpha ? 9 * M : M) - N * t * t * t;
      if (K == 0) continue;
      Int Nt = N * t;
      if (gcd(M, Nt) != 1 || gcd(K, M * Nt) != 1 || mpz_odd_p(Nt.get_mpz_t())) continue;
      found.push_back({M, N, t, K, alpha});
    }
  }
  if (found.size() != 1)
    throw Error(ErrorKind::InvariantViolation,
                std::to_string(found.size()) + " two-divisibility decompositions for " + P.str());
  return found.front();
}

CurveAndPoint two_div_construct(const TwoDivisibilityParams& p) {
  auto fail = [](const std::string& why) { throw Error(ErrorKind::InvariantViolation, why); };
  if (p.M == 0 || p.N == 0 || p.t == 0 || p.K == 0) fail("parameters must be nonzero");
  if (p.alpha != 0 && p.alpha != 1) fail("alpha must be 0 or 1");
  Int Nt = p.N * p.t;
  Int rel = (p.alpha ? 9 * p.M : p.M) - Nt * p.t * p.t;
  if (rel != p.K) fail("defining relation fails");
  if (gcd(p.M, Nt) != 1) fail("(M, Nt) != 1");
  if (gcd(p.K, p.M * Nt) != 1) fail("(K, MNt) != 1");
  if (mpz_odd_p(Nt.get_mpz_t())) fail("Nt must be even");
  Int B = p.M * p.M * p.M * p.N * p.N * p.K;
  if (!sixth_power_free(B)) fail("B not sixth-power-free");
  CurveAndPoint out{make_curve(B), CurvePoint::affine(Rat(p.M * Nt),
                                                      Rat((p.alpha ? 3 : 1) * p.M * p.M * p.N))};
  require_on_curve(out.curve, out.point);
  return out;
}

Int two_div_double_x(const TwoDivisibilityParams& p) {
  Int lam2 = (p.alpha ? Int(1) : Int(3)) * p.N * p.t * p.t;  // 2 * slope
  Int lam = lam2 / 2;
  return -2 * p.t * p.N * p.M + lam * lam;
}

bool four_div_check(const MordellCurve& E, const CurvePoint& P) {
  require_integral_nontorsion(E, P);
  const Int a = P.x.get_num(), b = P.y.get_num(), B = E.B;
  if (!divides(2 * b, 3 * a * a)) return false;
  if (ord(a, Int(2)) == 1 && ord(b, Int(2)) == 1) return false;
  Int a3 = a * a * a;
  Int f = a3 * a3 + 20 * B * a3 - 8 * B * B;
  return primes_divide(f, 2 * b);
}

Int tabef_value(const MordellCurve& E, const CurvePoint& P) {
  if (!four_div_check(E, P))
    throw Error(ErrorKind::HypothesisViolated, "[4]P divisibility conditions fail");
  Int a = P.x.get_num();
  Int a3 = a * a * a;
  Int g = gcd(a3, E.B);
  Int A = a3 / g, Bq = E.B / g;
  return A * A + 20 * A * Bq - 8 * Bq * Bq;
}

const char* three_div_type_name(ThreeDivType t) {
  static const char* names[] = {"I", "II", "III", "IV", "V", "VI", "VII"};
  return names[static_cast<int>(t) - 1];
}

namespace {

struct Row {
  ThreeDivType type;
  long cx, cB;
  long sq_coef, sq_N;  // square condition: sq_coef * M * (sq_N * N + K)
  long cg_N, cg_K;     // congruence: cg_N * N + cg_K * K = +-target
  long target;
};

const Row kRows[] = {
    {ThreeDivType::I, 2, 1, 1, 8, 2, 1, 3},     {ThreeDivType::II, 1, 1, 1, 1, 1, 4, 3},
    {ThreeDivType::III, 4, 4, 1, 16, 4, 1, 3},  {ThreeDivType::IV, 2, 4, 1, 2, 1, 2, 3},
    {ThreeDivType::V, 2, 8, 2, 1, 1, 4, 3},     {ThreeDivType::VI, 4, 16, 1, 4, 1, 1, 6},
    {ThreeDivType::VII, 8, 16, 1, 32, 8, 1, 3},
};

const Row& row_of(ThreeDivType t) { return kRows[static_cast<int>(t) - 1]; }

// Row conditions other than the shape of (x, B). Oddness of M, N, K is not
// imposed: the Type II example family has K = 1 - 3l^2 even.
bool row_conditions(const Row& r, const Int& M, const Int& N, const Int& K) {
  if (M == 0 || N == 0 || K == 0) return false;
  if (gcd(M, N) != 1 || gcd(M, K) != 1 || gcd(N, K) != 1) return false;
  if (divides(Int(3), N) || divides(Int(3), K)) return false;
  Int c = r.cg_N * N + r.cg_K * K;
  if (abs(c) != r.target) return false;
  Int s = r.sq_coef * M * (r.sq_N * N + K);
  return s >= 0 && is_square(s);
}

}  // namespace

std::optional<ThreeDivClass> three_div_classify(const MordellCurve& E, const CurvePoint& P) {
  require_on_curve(E, P);
  if (!P.is_integral() || is_torsion(E, P)) return std::nullopt;
  const Int a = P.x.get_num(), B = E.B;
  for (const Row& r : kRows) {
    if (!divides(Int(r.cx), a)) continue;
    Int q = a / r.cx;
    for (const Int& m : positive_divisors(q)) {
      for (int sign : {1, -1}) {
        Int M = sign * m, N = q / M;
        Int den = r.cB * M * M * M * N * N;
        if (!divides(den, B)) continue;
        Int K = B / den;
        if (row_conditions(r, M, N, K)) return ThreeDivClass{r.type, M, N, K};
      }
    }
  }
  return std::nullopt;
}

CurveAndPoint three_div_construct(ThreeDivType type, const Int& M, const Int& N, const Int& K) {
  const Row& r = row_of(type);
  if (!row_conditions(r, M, N, K))
    throw Error(ErrorKind::InvariantViolation,
                std::string("Type ") + three_div_type_name(type) + " row conditions fail");
  Int B = r.cB * M * M * M * N * N * K;
  if (!sixth_power_free(B)) throw Error(ErrorKind::InvariantViolation, "B not sixth-power-free");
  Int x = r.cx * M * N;
  Int y;
  if (!is_square(x * x * x + B, &y))
    throw Error(ErrorKind::InvariantViolation, "x^3 + B is not a square");
  return {make_curve(B), CurvePoint::affine(Rat(x), Rat(y))};
}

namespace {

Int poly(const Int& v, std::initializer_list<long> coeffs_high_first) {
  Int r = 0;
  for (long c : coeffs_high_first) r = r * v + c;
  return r;
}

Int mod(const Int& v, long m) {
  Int r = v % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

bool family_parameter_admissible(int family, const Int& p) {
  switch (family) {
    case 1: return mod(p, 3) == 2;
    case 2: return true;
    case 3:
    case 5: return mod(p, 6) == 1;
    case 4: return p != 0;
    case 6: return true;
    default: return false;
  }
}

FamilyInstance family_generate(int family, const Int& p) {
  if (family < 1 || family > 6)
    throw Error(ErrorKind::InadmissibleParameter, "family must be 1..6");
  if (!family_parameter_admissible(family, p))
    throw Error(ErrorKind::InadmissibleParameter,
                "parameter " + to_string(p) + " outside family " + std::to_string(family));
  Int x, y, B, x3;
  switch (family) {
    case 1: {
      Int u = 2 * p + 1;
      x = 6 * u * p;
      y = 9 * u * u * p;
      B = 27 * u * u * u * p * p * (3 - 2 * p);
      x3 = poly(p, {16, -16, -12, 2, 1});
      break;
    }
    case 2:
      x = poly(p, {12, 10, 2});
      y = poly(p, {36, 48, 21, 3});
      B = poly(p, {-432, -864, -648, -208, -15, 6, 1});
      x3 = poly(p, {144, 144, 36, -2, -1});
      break;
    case 3:
    case 5: {
      long c = family == 3 ? 6 : 24;
      Int u = c - 3 * p, v = c - 4 * p;
      x = u * v;
      y = u * u * v;
      B = p * u * u * u * v * v;
      x3 = family == 3 ? poly(p, {16, -80, 132, -74, 4}) : poly(p, {1, -20, 132, -296, 64});
      break;
    }
    case 4: {
      Int u = 12 * p - 2;
      x = u * p;
      y = 3 * p * p * u;
      B = p * p * p * u * u * (2 - 3 * p);
      x3 = poly(p, {144, -144, 36, -2, 0});
      break;
    }
    case 6:
      x = poly(p, {48, -32, 4});
      y = poly(p, {-288, 336, -120, 12});
      B = poly(p, {-27648, 27648, 6912, -17920, 7872, -1344, 80});
      x3 = poly(p, {144, 0, -72, 16, 1});
      break;
  }
  if (B == 0 || y == 0)
    throw Error(ErrorKind::InadmissibleParameter, "degenerate family instance");
  FamilyInstance f;
  f.family = family;
  f.parameter = p;
  f.curve = make_curve(B);
  f.point = CurvePoint::affine(Rat(x), Rat(y));
  require_on_curve(f.curve, f.point);
  f.x3P = x3;
  f.quasi_minimal = f.curve.quasi_minimal;
  f.torsion = is_torsion(f.curve, f.point);
  return f;
}

bool theorem1_admissible(long n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  if (n <= 5) return true;
  for (long p : {2L, 3L, 5L, 7L})
    if (n % p == 0) return false;
  return true;
}

const std::vector<ExceptionalEntry>& exceptional_registry() {
  static const std::vector<ExceptionalEntry> reg = {
      {Int(108), CurvePoint::affine(6, 18), {2, 3, 5}},
      {Int(-13500), CurvePoint::affine(60, 450), {2, 3, 4}},
      {Int(80), CurvePoint::affine(4, 12), {2, 3, 4}},
      {Int(-21168), CurvePoint::affine(84, 756), {2, 3, 4}},
  };
  return reg;
}

}  // namespace mordell
