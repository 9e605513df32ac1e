#include <gtest/gtest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "mordell/error.hpp"
#include "mordell/search.hpp"

using namespace mordell;
using namespace mordell::testing;

namespace {

using Pair = std::pair<long, long>;

std::set<Pair> pairs(const std::vector<Solution>& v) {
  std::set<Pair> s;
  for (const auto& x : v) s.insert({x.x.get_si(), x.y.get_si()});
  return s;
}

// Exhaustive grid oracle.
std::vector<Solution> grid(const ThueProblem& p) {
  std::vector<Solution> out;
  for (long x = -p.bound; x <= p.bound; ++x)
    for (long y = -p.bound; y <= p.bound; ++y) {
      Int X = x, Y = y, g;
      mpz_gcd(g.get_mpz_t(), X.get_mpz_t(), Y.get_mpz_t());
      if (p.primitive_only && g != 1) continue;
      Int v = p.form.eval(X, Y);
      for (const auto& r : p.rhs_set)
        if (v == r) out.push_back({X, Y, r});
    }
  std::sort(out.begin(), out.end());
  return out;
}

ThueProblem psi5_at(long rhs, long bound) {
  ThueProblem p = psi5_problems(bound).front();
  p.rhs_set = {Int(rhs)};
  return p;
}

}  // namespace

TEST(Search, BinaryFormEval) {
  BinaryForm f = from_weighted(psi_weighted_form(5));
  EXPECT_EQ(f.eval(1, 2), -81);  // 5 + 190 - 60 - 200 - 16
  EXPECT_EQ(four_torsion_octic().eval(0, 1), -32);
  EXPECT_EQ(four_torsion_octic().eval(1, -1), 81);
  EXPECT_EQ(four_torsion_octic().eval(2, 1), -2592);
}

TEST(Search, Psi5Problems) {
  auto ps = psi5_problems();
  ASSERT_EQ(ps.size(), 12u);
  std::set<Int> rhs;
  for (const auto& p : ps) rhs.insert(p.rhs_set.at(0));
  EXPECT_EQ(rhs.size(), 12u);
  EXPECT_TRUE(rhs.count(-81));
  EXPECT_TRUE(rhs.count(3645));
}

TEST(Search, Psi5Minus81) {
  SearchResult r = thue_solve_bounded(psi5_at(-81, 100));
  EXPECT_FALSE(r.complete);
  EXPECT_EQ(pairs(r.solutions), (std::set<Pair>{{-1, -2}, {-1, 1}, {1, -1}, {1, 2}}));
  EXPECT_EQ(pairs(integral_multiple_solutions(r.solutions, 5)),
            (std::set<Pair>{{-1, -2}, {1, 2}}));
}

TEST(Search, Psi5RelevantAcrossAllTwelve) {
  std::vector<Solution> all;
  for (const auto& p : psi5_problems(100)) {
    auto r = thue_solve_bounded(p).solutions;
    all.insert(all.end(), r.begin(), r.end());
  }
  auto rel = integral_multiple_solutions(all, 5);
  EXPECT_EQ(pairs(rel), (std::set<Pair>{{-1, -2}, {1, 2}}));
  for (const auto& s : rel) EXPECT_EQ(s.rhs, -81);
}

TEST(Search, Psi5PlusOneFixture) {
  ThueProblem p = psi5_at(1, 100);
  auto r = thue_solve_bounded(p).solutions;
  EXPECT_TRUE(r.empty());
  EXPECT_EQ(r, grid(psi5_at(1, 40)));
}

TEST(Search, ThueMatchesGridOracle) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> coef(-9, 9), deg(2, 5), rhs(-40, 40);
  for (int trial = 0; trial < 25; ++trial) {
    ThueProblem p;
    long d = deg(rng);
    for (long i = 0; i <= d; ++i) p.form.c.push_back(coef(rng));
    if (p.form.c.back() == 0) p.form.c.back() = 1;
    for (int k = 0; k < 4; ++k) p.rhs_set.push_back(rhs(rng));
    p.bound = 25;
    p.primitive_only = trial % 2 == 0;
    EXPECT_EQ(thue_solve_bounded(p).solutions, grid(p)) << trial;
  }
}

TEST(Search, ThueEdgesAndDeterminism) {
  ThueProblem p = psi5_at(-81, 0);
  EXPECT_TRUE(thue_solve_bounded(p).solutions.empty());
  p.bound = 1000001;
  EXPECT_THROW(thue_solve_bounded(p), Error);
  p = psi5_at(-81, 60);
  EXPECT_EQ(thue_solve_bounded(p, 1).solutions, thue_solve_bounded(p, 4).solutions);
  EXPECT_EQ(thue_solve_bounded(p, 4).solutions, thue_solve_bounded(p, 16).solutions);
}

TEST(Search, Psi7FactorsMatchPrintedForms) {
  // x^6 + 141x^5y - 363x^4y^2 - 1924x^3y^3 - 741x^2y^4 - 48xy^5 + y^6
  EXPECT_EQ(psi7_sextic().c, (std::vector<Int>{1, -48, -741, -1924, -363, 141, 1}));
  // Psi_7 = 7X^8 + 986X^7Y - 2681X^6Y^2 - 12964X^5Y^3 - 3626X^4Y^4 - 1519X^3Y^5
  //         - 686X^2Y^6 - 49XY^7 + Y^8
  EXPECT_EQ(psi_weighted_form(7).c,
            (std::vector<Int>{1, -49, -686, -1519, -3626, -12964, -2681, 986, 7}));
  EXPECT_EQ(psi7_quadratic().eval(1, -1), 9);
}

TEST(Search, Psi7System) {
  auto sols = psi7_system_solve(100);
  std::set<Pair> got;
  for (const auto& s : sols) {
    got.insert({s.x.get_si(), s.y.get_si()});
    bool six = s.alpha1 == 6 && s.alpha2 == 2 && s.gamma == 0 && s.sign == 1;
    bool nine = s.alpha1 == 9 && s.alpha2 == 3 && s.gamma == 0 && s.sign == -1;
    EXPECT_TRUE(six || nine);
    if (six) EXPECT_EQ(std::abs(s.x.get_si()), 1);
  }
  EXPECT_EQ(got, (std::set<Pair>{{1, -1}, {-1, 1}, {2, 1}, {-2, -1}, {1, -4}, {-1, 4}}));

  // Second route through the complete quadratic-form search.
  auto via_g = psi7_system_solve_by_quadratic();
  ASSERT_EQ(via_g.size(), sols.size());
  for (size_t i = 0; i < sols.size(); ++i) {
    EXPECT_EQ(via_g[i].x, sols[i].x);
    EXPECT_EQ(via_g[i].y, sols[i].y);
  }

  std::vector<Solution> plain;
  for (const auto& s : sols) plain.push_back({s.x, s.y, s.f_value});
  EXPECT_TRUE(integral_multiple_solutions(plain, 7).empty());
  EXPECT_THROW(psi7_system_solve(2000000), Error);
}

TEST(Search, FourTorsionThue) {
  SearchResult r = four_torsion_thue(100);
  EXPECT_FALSE(r.complete);
  EXPECT_EQ(pairs(r.solutions), (std::set<Pair>{{0, 1}, {0, -1}, {1, 0}, {-1, 0}, {1, -1},
                                                {-1, 1}, {2, 1}, {-2, -1}}));
  for (const auto& s : r.solutions) EXPECT_EQ(four_torsion_octic().eval(s.x, s.y), s.rhs);
}

TEST(Search, WeightedPairPoints) {
  auto w = points_from_weighted_pair(1, 2);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0].B, 108);
  EXPECT_EQ(w[0].P, pt(6, 18));
  EXPECT_FALSE(w[0].torsion);
  // Round trip from random integral points: (a^3, 4B) / gcd maps back to P.
  std::mt19937_64 rng(77);
  int checked = 0;
  while (checked < 60) {
    PointSample s = random_integral_point(rng, 60, 400);
    if (!s.E.quasi_minimal || s.P.x == 0) continue;
    Int a = s.P.x.get_num(), a3 = a * a * a, g;
    Int fb = 4 * s.E.B;
    mpz_gcd(g.get_mpz_t(), a3.get_mpz_t(), fb.get_mpz_t());
    bool found = false;
    for (const auto& q : points_from_weighted_pair(a3 / g, fb / g))
      if (q.B == s.E.B && q.P.x == s.P.x) found = true;
    EXPECT_TRUE(found) << s.E.B << " " << s.P.str();
    ++checked;
  }
}

namespace {

std::set<std::pair<long, Pair>> table(const std::vector<FourDivRow>& rows) {
  std::set<std::pair<long, Pair>> s;
  for (const auto& r : rows)
    s.insert({r.B.get_si(), {r.P.x.get_num().get_si(), r.P.y.get_num().get_si()}});
  return s;
}

}  // namespace

TEST(Search, PellSweepTable2) {
  auto rows = pell_sweep_four_div(Int(10000000));
  std::set<std::pair<long, Pair>> expect = {
      {-13500, {60, 450}},    {-21168, {84, 756}},     {-2743600, {380, 7220}},
      {80, {4, 12}},          {-1124695, {286, 4719}}, {594000, {60, 900}},
      {513, {6, 27}}};
  EXPECT_EQ(table(rows), expect);
  for (const auto& r : rows) {
    MordellCurve E = make_curve(r.B);
    EXPECT_TRUE(E.quasi_minimal);
    EXPECT_TRUE(multiply(E, r.P, 4).is_integral());
    Int lhs = r.N * r.t * r.t * r.t + 10 * r.K;  // 2 (Nt^3/2 + 5K)
    EXPECT_EQ(lhs * lhs - 108 * r.K * r.K, 4 * r.r) << r.B;
  }
  auto small = pell_sweep_four_div(Int(100000));
  EXPECT_EQ(table(small), (std::set<std::pair<long, Pair>>{
                              {80, {4, 12}}, {513, {6, 27}}, {-13500, {60, 450}},
                              {-21168, {84, 756}}}));
  EXPECT_THROW(pell_sweep_four_div(Int("100000000000")), Error);
}

TEST(Search, PellBranchArithmetic) {
  // B = 80: (M, N, t, K) = (1, 4, 1, 5), 9M = Nt^3 + K.
  EXPECT_EQ((2 + 25) * (2 + 25) - 27 * 25, 54);
  // B = -13500: (15, 2, 2, -1), M = Nt^3 + K.
  EXPECT_EQ((8 - 5) * (8 - 5) - 27, -18);
  auto rows = pell_sweep_four_div(Int(100000));
  for (const auto& r : rows) {
    if (r.B == 80) {
      EXPECT_EQ(r.M, 1);
      EXPECT_EQ(r.N, 4);
      EXPECT_EQ(r.t, 1);
      EXPECT_EQ(r.K, 5);
      EXPECT_EQ(r.variant, 1);
    }
    if (r.B == -13500) {
      EXPECT_EQ(r.M, 15);
      EXPECT_EQ(r.N, 2);
      EXPECT_EQ(r.t, 2);
      EXPECT_EQ(r.K, -1);
    }
  }
}

TEST(Search, QuadraticForms) {
  SearchResult r = quadratic_form_solve(7, -1, 1, 9, 1000);
  EXPECT_TRUE(r.complete);
  auto s = pairs(r.solutions);
  EXPECT_TRUE(s.count({1, -1}) && s.count({-1, 1}));
  s = pairs(quadratic_form_solve(7, -1, 1, 7, 1000).solutions);
  EXPECT_TRUE(s.count({1, 0}) && s.count({-1, 0}));
  EXPECT_TRUE(quadratic_form_solve(7, -1, 1, -5, 1000).solutions.empty());
  EXPECT_THROW(quadratic_form_solve(1, 3, 1, 5, 100), Error);
  EXPECT_THROW(quadratic_form_solve(-1, 0, -1, 5, 100), Error);

  // Derived complete bound versus exhaustive search at ten times that bound.
  for (long rhs : {9L, 63L, 189L, 1701L, 5103L}) {
    Int D = 4 * 7 - 1;
    long lim = std::max(isqrt(Int(28 * rhs) / D), isqrt(Int(4 * rhs) / D)).get_si();
    SearchResult tight = quadratic_form_solve(7, -1, 1, rhs, lim);
    EXPECT_TRUE(tight.complete);
    std::vector<Solution> brute;
    for (long x = -10 * lim; x <= 10 * lim; ++x)
      for (long y = -10 * lim; y <= 10 * lim; ++y)
        if (7 * x * x - x * y + y * y == rhs) brute.push_back({x, y, rhs});
    std::sort(brute.begin(), brute.end());
    EXPECT_EQ(tight.solutions, brute) << rhs;
  }
}
