#include "mordell/search.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <thread>

#include "mordell/error.hpp"
#include "mordell/poly.hpp"

namespace mordell {

Int BinaryForm::eval(const Int& x, const Int& y) const {
  // Homogeneous Horner: r = sum c[i] x^i y^(d-i).
  Int r = 0, ypow = 1;
  long d = degree();
  std::vector<Int> yp(d + 1);
  for (long i = 0; i <= d; ++i) {
    yp[i] = ypow;
    ypow *= y;
  }
  for (long i = d; i >= 0; --i) r = r * x + c[i] * yp[d - i];
  return r;
}

BinaryForm from_weighted(const WeightedBinaryForm& w) { return BinaryForm{w.c}; }

bool Solution::operator<(const Solution& o) const {
  if (x != o.x) return x < o.x;
  if (y != o.y) return y < o.y;
  return rhs < o.rhs;
}

namespace {

void check_bound(long bound) {
  if (bound > kMaxSearchBound)
    throw Error(ErrorKind::BoundTooLarge,
                "search bound " + std::to_string(bound) + " exceeds " +
                    std::to_string(kMaxSearchBound));
}

Int igcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Solutions with this fixed y.
void solve_slice(const ThueProblem& pr, long yv, std::vector<Solution>& out) {
  const long d = pr.form.degree();
  const long bound = pr.bound;
  Int y = yv;
  // Slice coefficients s[i] = c[i] y^(d-i).
  std::vector<Int> s(d + 1);
  Int ypow = 1;
  for (long i = d; i >= 0; --i) {
    s[i] = pr.form.c[i] * ypow;
    ypow *= y;
  }
  auto accept = [&](const Int& x) {
    if (abs(x) > bound) return;
    if (pr.primitive_only && igcd(x, y) != 1) return;
    Int v = pr.form.eval(x, y);
    for (const auto& r : pr.rhs_set)
      if (v == r) out.push_back({x, y, r});
  };

  long top = d;
  while (top >= 0 && s[top] == 0) --top;
  if (top <= 0) {
    // Constant in x: either nothing or every x.
    Int c0 = top < 0 ? Int(0) : s[0];
    bool hit = std::find(pr.rhs_set.begin(), pr.rhs_set.end(), c0) != pr.rhs_set.end();
    if (hit)
      for (long x = -bound; x <= bound; ++x) accept(Int(x));
    return;
  }

  std::set<Int> cand;
  for (const auto& r : pr.rhs_set) {
    std::vector<long double> c(top + 1);
    for (long i = 0; i <= top; ++i) {
      Int v = s[i];
      if (i == 0) v -= r;
      c[i] = to_ld(Rat(v));
    }
    std::vector<cplx> roots;
    try {
      roots = poly_roots(c);
    } catch (const Error&) {
      // Fall back to the full slice scan on a failed root solve.
      for (long x = -bound; x <= bound; ++x) cand.insert(Int(x));
      continue;
    }
    for (const auto& z : roots) {
      long double re = z.real();
      if (!(std::fabs(re) <= bound + 2.0L)) continue;
      long base = static_cast<long>(std::floor(re));
      for (long x = base - 1; x <= base + 2; ++x) cand.insert(Int(x));
    }
  }
  for (const auto& x : cand) accept(x);
}

void sort_unique(std::vector<Solution>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

SearchResult thue_solve_bounded(const ThueProblem& problem, unsigned threads) {
  check_bound(problem.bound);
  if (problem.form.degree() < 1)
    throw Error(ErrorKind::HypothesisViolated, "form must have degree >= 1");
  SearchResult res;
  if (problem.bound <= 0) return res;
  const long bound = problem.bound;
  const long span = 2 * bound + 1;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<long>(threads, span));

  std::vector<std::vector<Solution>> parts(threads);
  auto work = [&](unsigned id) {
    for (long y = -bound + id; y <= bound; y += threads) solve_slice(problem, y, parts[id]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work, i);
    for (auto& t : pool) t.join();
  }
  for (auto& p : parts) res.solutions.insert(res.solutions.end(), p.begin(), p.end());
  sort_unique(res.solutions);
  return res;
}

std::vector<ThueProblem> psi5_problems(long bound) {
  BinaryForm f = from_weighted(psi_weighted_form(5));
  std::vector<ThueProblem> out;
  for (int sign : {1, -1})
    for (unsigned a : {0u, 4u, 6u})
      for (unsigned g : {0u, 1u}) {
        ThueProblem p;
        p.form = f;
        p.rhs_set = {Int(sign) * ipow(3, a) * ipow(5, g)};
        p.bound = bound;
        p.primitive_only = true;
        out.push_back(std::move(p));
      }
  return out;
}

BinaryForm psi7_quadratic() { return BinaryForm{{Int(1), Int(-1), Int(7)}}; }

BinaryForm psi7_sextic() {
  WeightedBinaryForm w = psi_weighted_form(7);
  ZPoly q;
  if (!div_exact(ZPoly(w.c), ZPoly(psi7_quadratic().c), &q))
    throw Error(ErrorKind::InvariantViolation, "G7 does not divide Psi_7");
  std::vector<Int> c(q.c);
  c.resize(7);
  return BinaryForm{c};
}

namespace {

const std::vector<std::pair<long, long>> kPsi7Pairs = {{0, 0}, {5, 3}, {6, 2}, {9, 3}, {10, 2}};

// Writes v = sign * 3^a * 7^g (a, g >= 0) if possible.
bool split_37(const Int& v, int* sign, long* a, long* g) {
  if (v == 0) return false;
  Int r = abs(v);
  *sign = v < 0 ? -1 : 1;
  *a = static_cast<long>(ord(r, 3));
  *g = static_cast<long>(ord(r, 7));
  return r == ipow(3, *a) * ipow(7, *g);
}

std::optional<Psi7Solution> psi7_match(const Int& x, const Int& y) {
  if (x == 0 || y == 0 || igcd(x, y) != 1) return std::nullopt;
  Int f = psi7_sextic().eval(x, y), g = psi7_quadratic().eval(x, y);
  int sf, sg;
  long a1, g1, a2, g2;
  if (!split_37(f, &sf, &a1, &g1) || g1 != 0) return std::nullopt;
  if (!split_37(g, &sg, &a2, &g2) || sg < 0 || g2 > 1) return std::nullopt;
  if (std::find(kPsi7Pairs.begin(), kPsi7Pairs.end(), std::make_pair(a1, a2)) ==
      kPsi7Pairs.end())
    return std::nullopt;
  Psi7Solution s;
  s.x = x;
  s.y = y;
  s.f_value = f;
  s.g_value = g;
  s.alpha1 = a1;
  s.alpha2 = a2;
  s.gamma = g2;
  s.sign = sf;
  return s;
}

void sort_psi7(std::vector<Psi7Solution>& v) {
  std::sort(v.begin(), v.end(), [](const Psi7Solution& a, const Psi7Solution& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<Psi7Solution> psi7_system_solve(long bound) {
  check_bound(bound);
  ThueProblem p;
  p.form = psi7_sextic();
  p.bound = bound;
  p.primitive_only = true;
  std::set<long> a1s;
  for (const auto& [a1, a2] : kPsi7Pairs) a1s.insert(a1);
  for (long a1 : a1s)
    for (int s : {1, -1}) p.rhs_set.push_back(Int(s) * ipow(3, a1));
  std::vector<Psi7Solution> out;
  for (const auto& sol : thue_solve_bounded(p).solutions)
    if (auto m = psi7_match(sol.x, sol.y)) out.push_back(*m);
  sort_psi7(out);
  return out;
}

std::vector<Psi7Solution> psi7_system_solve_by_quadratic() {
  std::vector<Psi7Solution> out;
  for (const auto& [a1, a2] : kPsi7Pairs)
    for (unsigned g : {0u, 1u}) {
      Int rhs = ipow(3, a2) * ipow(7, g);
      SearchResult r = quadratic_form_solve(7, -1, 1, rhs, kMaxSearchBound);
      if (!r.complete)
        throw Error(ErrorKind::InvariantViolation, "G7 search not complete");
      for (const auto& s : r.solutions)
        if (auto m = psi7_match(s.x, s.y)) out.push_back(*m);
    }
  sort_psi7(out);
  return out;
}

BinaryForm four_torsion_octic() {
  // x^8 + 8x^7y - 32x^6y^2 - 16x^5y^3 - 56x^4y^4 - 64x^3y^5 + 64x^2y^6
  // - 64xy^7 - 32y^8, stored by ascending power of x.
  return BinaryForm{{Int(-32), Int(-64), Int(64), Int(-64), Int(-56), Int(-16), Int(-32),
                     Int(8), Int(1)}};
}

SearchResult four_torsion_thue(long bound) {
  ThueProblem p;
  p.form = four_torsion_octic();
  p.bound = bound;
  p.primitive_only = true;
  for (int s : {1, -1})
    for (unsigned a : {0u, 5u})
      for (unsigned b : {0u, 4u}) p.rhs_set.push_back(Int(s) * ipow(2, a) * ipow(3, b));
  return thue_solve_bounded(p);
}

std::vector<WeightedPairPoint> points_from_weighted_pair(const Int& X, const Int& Y) {
  std::vector<WeightedPairPoint> out;
  if (X == 0 || Y == 0 || igcd(X, Y) != 1) return out;
  const Int W = 4 * X + Y;  // b^2 = g W / 4 with g = a^3 / X
  Int prod = 2 * X * Y * (W == 0 ? Int(1) : W);
  Factorization fp = factor(prod);

  // Per prime, the admissible exponents e of the free factor k in a = a0 k.
  Int a0 = 1;
  std::vector<std::pair<Int, std::vector<long>>> choices;
  for (const auto& [p, unused] : fp) {
    (void)unused;
    long vx = static_cast<long>(ord(abs(X), p));
    long va0 = (vx + 2) / 3;
    a0 *= ipow(p, va0);
    long two = p == 2 ? 2 : 0;
    long cb = 3 * va0 - vx + static_cast<long>(ord(abs(Y), p)) - two;
    long cw = W == 0 ? 0 : 3 * va0 - vx + static_cast<long>(ord(abs(W), p)) - two;
    std::vector<long> es;
    for (long e = 0; e <= 2; ++e) {
      long vb = 3 * e + cb;
      if (vb < 0 || vb > 5) continue;
      if (W != 0 && ((3 * e + cw) < 0 || (3 * e + cw) % 2 != 0)) continue;
      es.push_back(e);
    }
    if (es.empty()) return out;
    choices.push_back({p, es});
  }
  std::vector<Int> ks = {1};
  for (const auto& [p, es] : choices) {
    std::vector<Int> next;
    for (const auto& k : ks)
      for (long e : es) next.push_back(k * ipow(p, e));
    ks.swap(next);
  }
  for (const auto& k : ks) {
    Int a = (X < 0 ? Int(-1) : Int(1)) * a0 * k;
    Int a3 = a * a * a;
    if (a3 % X != 0) continue;
    Int g = a3 / X;
    Int gy = g * Y;
    if (g <= 0 || gy % 4 != 0) continue;
    Int B = gy / 4;
    Int b;
    if (B == 0 || !sixth_power_free(B) || !is_square(a3 + B, &b)) continue;
    if (igcd(a3, 4 * B) != g) continue;
    MordellCurve E = make_curve(B);
    CurvePoint P = CurvePoint::affine(Rat(a), Rat(b));
    out.push_back({B, P, is_torsion(E, P)});
  }
  return out;
}

std::vector<Solution> integral_multiple_solutions(const std::vector<Solution>& sols, long n) {
  std::vector<Solution> out;
  for (const auto& s : sols) {
    bool hit = false;
    for (int sg : {1, -1}) {
      for (const auto& w : points_from_weighted_pair(sg * s.x, sg * s.y)) {
        if (w.torsion) continue;
        if (multiply(make_curve(w.B), w.P, n).is_integral()) hit = true;
      }
    }
    if (hit) out.push_back(s);
  }
  return out;
}

std::vector<FourDivRow> pell_sweep_four_div(const Int& b_max) {
  if (b_max > Int(10000000000L))
    throw Error(ErrorKind::BoundTooLarge, "b_max above 10^10");
  std::vector<FourDivRow> out;
  if (b_max < 1) return out;
  // |B| >= |M|^3 |K| with |M| >= 0.15 |K| on every branch, so |K|^4 <= |B| / 0.003.
  long kmax = static_cast<long>(std::pow(to_ld(Rat(b_max)) / 0.003L, 0.25L)) + 10;
  struct Branch {
    long variant;
    long r;
  };
  const Branch branches[] = {{0, -2}, {0, 18}, {0, -18}, {1, 54}, {1, -54}};
  std::set<std::pair<Int, Int>> seen;
  for (long Kv = -kmax; Kv <= kmax; ++Kv) {
    if (Kv == 0) continue;
    Int K = Kv;
    for (const auto& br : branches) {
      Int u2 = 27 * K * K + br.r, u;
      if (u2 < 0 || !is_square(u2, &u)) continue;
      for (int s : {1, -1}) {
        if (s < 0 && u == 0) continue;
        Int T = 2 * (s * u - 5 * K);  // N t^3
        if (T == 0) continue;
        Factorization ft = factor(T);
        std::vector<Int> ts = {1};
        for (const auto& [p, e] : ft) {
          std::vector<Int> next;
          for (const auto& t : ts)
            for (unsigned j = 0; 3 * j <= e; ++j) next.push_back(t * ipow(p, j));
          ts.swap(next);
        }
        for (const auto& t : ts) {
          Int N = T / (t * t * t);
          Int M = T + K;
          if (br.variant == 1) {
            if (M % 9 != 0) continue;
            M /= 9;
          }
          if (M == 0) continue;
          Int Nn = N, Kn = K;
          if (M < 0) {
            // (M, N, K) -> (-M, -N, -K) gives the same B and x.
            M = -M;
            Nn = -N;
            Kn = -K;
          }
          Int B = M * M * M * Nn * Nn * Kn;
          if (abs(B) > b_max || !sixth_power_free(B)) continue;
          Int x = M * Nn * t, y = M * M * Nn * (br.variant == 1 ? 3 : 1);
          if (y < 0) y = -y;
          if (!seen.insert({B, x}).second) continue;
          MordellCurve E = make_curve(B);
          CurvePoint P = CurvePoint::affine(Rat(x), Rat(y));
          if (!E.contains(P) || is_torsion(E, P)) continue;
          if (!multiply(E, P, 4).is_integral()) continue;
          out.push_back({B, P, br.variant, M, Nn, t, Kn, Int(br.r)});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const FourDivRow& a, const FourDivRow& b) {
    Int aa = abs(a.B), ab = abs(b.B);
    if (aa != ab) return aa < ab;
    return a.B < b.B;
  });
  return out;
}

SearchResult quadratic_form_solve(const Int& a, const Int& b, const Int& c, const Int& rhs,
                                  long bound) {
  check_bound(bound);
  Int D = 4 * a * c - b * b;
  if (D <= 0 || a <= 0)
    throw Error(ErrorKind::IndefiniteForm, "form is not positive definite");
  SearchResult res;
  res.complete = true;
  if (rhs < 0 || bound < 0) return res;
  // 4a rhs = (2ax + by)^2 + D y^2 and symmetrically for x.
  Int ymax = isqrt(4 * a * rhs / D), xmax = isqrt(4 * c * rhs / D);
  res.complete = ymax <= bound && xmax <= bound;
  long ylim = static_cast<long>(std::min<Int>(ymax, Int(bound)).get_si());
  for (long yv = -ylim; yv <= ylim; ++yv) {
    Int y = yv;
    // a x^2 + (b y) x + (c y^2 - rhs) = 0
    Int disc = b * b * y * y - 4 * a * (c * y * y - rhs), s;
    if (disc < 0 || !is_square(disc, &s)) continue;
    for (int sg : {1, -1}) {
      Int num = -b * y + sg * s;
      if (num % (2 * a) != 0) continue;
      Int x = num / (2 * a);
      if (abs(x) > bound) continue;
      res.solutions.push_back({x, y, rhs});
      if (s == 0) break;
    }
  }
  sort_unique(res.solutions);
  return res;
}

}  // namespace mordell
