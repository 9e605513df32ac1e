#include <gtest/gtest.h>

#include <cmath>

#include "helpers.hpp"
#include "mordell/error.hpp"
#include "mordell/heights.hpp"

using namespace mordell;
using namespace mordell::testing;

namespace {

// Independent oracle: exact group-law doubling, h([2^k]P) / (2 4^k).
long double doubling_oracle(const MordellCurve& E, const CurvePoint& P, int k) {
  CurvePoint Q = P;
  for (int i = 0; i < k; ++i) Q = dbl(E, Q);
  return naive_height(Q) / (2 * std::pow(4.0L, k));
}

}  // namespace

TEST(Heights, NaiveHeight) {
  EXPECT_NEAR(naive_height(pt(6, 18)), std::log(6.0L), 1e-15);
  EXPECT_NEAR(naive_height(pt(-3, 9)), std::log(3.0L), 1e-15);
  EXPECT_NEAR(naive_height(ptq("85/4", "-783/8")), std::log(85.0L), 1e-15);
  EXPECT_THROW(naive_height(CurvePoint::at_infinity()), Error);
}

TEST(Heights, TorsionIsZero) {
  EXPECT_EQ(canonical_height(make_curve(Int(16)), pt(0, 4)), 0.0L);
  EXPECT_EQ(canonical_height(make_curve(Int(1)), pt(2, 3)), 0.0L);
}

TEST(Heights, MatchesDoublingOracle) {
  struct F { long B, x, y; };
  for (F f : {F{108, 6, 18}, F{-2160, 24, 108}, F{1188, 12, 54}, F{-2, 3, 5}, F{8, 1, 3}}) {
    MordellCurve E = make_curve(Int(f.B));
    long double h = canonical_height(E, pt(f.x, f.y));
    long double slack = (std::log(std::fabs((long double)f.B)) / 6 + 0.3L) / std::pow(4.0L, 7);
    EXPECT_NEAR(h, doubling_oracle(E, pt(f.x, f.y), 7), slack) << f.B;
  }
}

TEST(Heights, GeneratorMargins) {
  // Margins relative to (1/36) log|B| for rank-one generators.
  struct F { long B, x, y; long double margin; };
  for (F f : {F{-2160, 24, 108, 0.01718L}, F{1188, 12, 54, 0.0476L},
              F{-21168, 84, 756, -0.1277L}, F{108, 6, 18, -0.0551L}}) {
    MordellCurve E = make_curve(Int(f.B));
    long double v = canonical_height(E, pt(f.x, f.y)) - E.log_abs_B() / 36;
    EXPECT_NEAR(v, f.margin, 5e-4L) << f.B;
  }
}

TEST(Heights, LowerBoundConstants) {
  EXPECT_NEAR(lower_bound_constant(Int(108)).C, 0.1107L, 1e-12);
  EXPECT_NEAR(lower_bound_constant(Int(80)).C, 0.1347L, 1e-12);
  LowerBoundConstant c8 = lower_bound_constant(Int(8));
  EXPECT_NEAR(c8.coefficient, 1.0L / 24, 1e-15);
  EXPECT_NEAR(c8.C, -0.2290L, 1e-12);
  EXPECT_NEAR(lower_bound_constant(Int(27)).C, 0.002L, 1e-12);
  EXPECT_NEAR(lower_bound_constant(Int(-2160)).C, 0.1347L, 1e-12);
  EXPECT_NEAR(lower_bound_constant(Int(1188)).C, 0.0431L, 1e-12);
  EXPECT_NEAR(lower_bound_constant(Int(144)).C, 0.1107L, 1e-12);
  EXPECT_THROW(lower_bound_constant(Int(64)), Error);
}

TEST(Heights, DispatchRulesDisjoint) {
  // Apart from the fallback, no residue class mod lcm 15552 hits two rules.
  const auto& rules = lower_bound_rules();
  for (long r = 0; r < 15552; ++r) {
    int hits = 0;
    for (size_t i = 0; i + 1 < rules.size(); ++i)
      for (long c : rules[i].residues)
        if (r % rules[i].modulus == c) ++hits;
    EXPECT_LE(hits, 1) << r;
  }
}

TEST(Heights, CheckLowerBound) {
  EXPECT_TRUE(check_lower_bound(make_curve(Int(108)), pt(6, 18)));
  EXPECT_THROW(check_lower_bound(make_curve(Int(1)), pt(2, 3)), Error);
}

TEST(Heights, DifferenceInterval) {
  EXPECT_NEAR(height_difference_interval(make_curve(Int(-13500))), -0.28L, 1e-15);
  EXPECT_NEAR(height_difference_interval(make_curve(Int(108))), -std::log(108.0L) / 6 - 0.299L, 1e-15);
  EXPECT_NEAR(height_difference_interval(make_curve(Int(1))), -0.299L, 1e-15);
}

TEST(Heights, ClosedFormBounds) {
  EXPECT_NEAR(multiple_height_upper_bound(HeightBoundKind::TwoDivPoint, Int(108)),
              7 * std::log(108.0L) / 18 + 0.68277L, 1e-15);
  EXPECT_NEAR(multiple_height_upper_bound(HeightBoundKind::NMultWitness, Int(1000000), 11),
              std::log(11.0L) + std::log(1e6L) / 3 - 0.597L, 1e-15);
  EXPECT_NEAR(multiple_height_upper_bound(HeightBoundKind::FourDivFloor, Int(80)),
              2 * std::log(80.0L) / 3 - 0.239L, 1e-15);
  EXPECT_THROW(parse_height_bound_kind("nope"), Error);
}

TEST(HeightsProperty, QuadraticityParityDifference) {
  std::mt19937_64 rng(99);
  const long double tol = 1e-7L;
  for (int it = 0; it < 25; ++it) {
    PointSample s = random_integral_point(rng, 40, 300);
    if (is_torsion(s.E, s.P) || !s.E.quasi_minimal) continue;
    long double h = canonical_height(s.E, s.P, tol);
    EXPECT_GT(h, 0);
    EXPECT_NEAR(canonical_height(s.E, negate(s.P), tol), h, 2 * tol);
    for (long n = 2; n <= 10; ++n) {
      long double hn = canonical_height(s.E, multiply(s.E, s.P, n), tol);
      EXPECT_LE(std::fabs(hn - n * n * h), (n * n + 1) * tol) << s.E.B << " n=" << n;
    }
    EXPECT_GT(naive_height(s.P) / 2 - h, height_difference_interval(s.E) - tol) << s.E.B;
  }
}
