#include <gtest/gtest.h>

#include "helpers.hpp"
#include "mordell/error.hpp"

using namespace mordell;
using namespace mordell::testing;

TEST(Arith, FactorAndDivisors) {
  Factorization f = factor(Int(-2160));
  EXPECT_EQ(f.size(), 3u);
  EXPECT_EQ(f[Int(2)], 4u);
  EXPECT_EQ(f[Int(3)], 3u);
  EXPECT_EQ(f[Int(5)], 1u);
  EXPECT_EQ(divisors(factor(Int(12))).size(), 6u);
  Int big = Int("1000000007") * Int("998244353");
  Factorization g = factor(big);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.count(Int("998244353")), 1u);
}

TEST(Arith, ValuationOfRationals) {
  EXPECT_EQ(*valuation(Rat(Int(108)), Int(3)), 3);
  EXPECT_EQ(*valuation(rat_from_string("5/72"), Int(2)), -3);
  EXPECT_FALSE(valuation(Rat(0), Int(7)).has_value());
  EXPECT_THROW(valuation(Rat(3), Int(6)), Error);
}

TEST(Arith, SixthPowerFree) {
  EXPECT_TRUE(sixth_power_free(Int(108)));
  EXPECT_FALSE(sixth_power_free(Int(-64)));
  Reduced r = sixth_power_free_reduce(Int(-81) * 729);
  EXPECT_EQ(r.B, -81);
  EXPECT_EQ(r.u, 3);
}

TEST(Curve, ZeroBRejected) {
  try {
    make_curve(Int(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroB);
  }
}

TEST(Curve, TorsionClassification) {
  EXPECT_EQ(make_curve(Int(1)).torsion.group, TorsionGroup::Z6);
  EXPECT_EQ(make_curve(Int(-432)).torsion.group, TorsionGroup::Z3);
  EXPECT_EQ(make_curve(Int(49)).torsion.group, TorsionGroup::Z3);
  MordellCurve E8 = make_curve(Int(8));
  ASSERT_EQ(E8.torsion.group, TorsionGroup::Z2);
  EXPECT_EQ(E8.torsion.points[0].first, pt(-2, 0));
  EXPECT_EQ(make_curve(Int(108)).torsion.group, TorsionGroup::Trivial);
  // 64 = 2^6 * 1 scales the Z6 torsion of y^2 = x^3 + 1.
  MordellCurve E64 = make_curve(Int(64));
  EXPECT_FALSE(E64.quasi_minimal);
  EXPECT_EQ(E64.torsion.group, TorsionGroup::Z6);
  for (const auto& [P, o] : E64.torsion.points) {
    EXPECT_TRUE(E64.contains(P));
    EXPECT_TRUE(multiply(E64, P, o).identity);
  }
}

TEST(Curve, TorsionPointsHaveStatedOrder) {
  for (long B : {1L, -432L, 4L, 25L, -27L, 8L, -1L}) {
    MordellCurve E = make_curve(Int(B));
    for (const auto& [P, o] : E.torsion.points) {
      EXPECT_TRUE(E.contains(P)) << B;
      EXPECT_TRUE(multiply(E, P, o).identity) << B;
      for (int k = 1; k < o; ++k) EXPECT_FALSE(multiply(E, P, k).identity) << B;
    }
  }
}

TEST(Curve, GroupLawSmall) {
  MordellCurve E = make_curve(Int(8));
  CurvePoint P = pt(1, 3), Q = pt(2, 4);
  CurvePoint S = add(E, P, Q);
  EXPECT_TRUE(E.contains(S));
  EXPECT_EQ(add(E, P, negate(P)).identity, true);
  EXPECT_THROW(add(E, pt(1, 4), P), Error);
}

TEST(Curve, DenominatorProfile) {
  DenominatorProfile d = denominator_profile(ptq("1/4", "3/8"));
  EXPECT_EQ(d.A, 1);
  EXPECT_EQ(d.D, 2);
  EXPECT_THROW(denominator_profile(ptq("1/2", "1/8")), Error);
  EXPECT_THROW(denominator_profile(CurvePoint::at_infinity()), Error);
}

// Associativity and commutativity on random curves with a known point.
TEST(CurveProperty, GroupLawAxioms) {
  std::mt19937_64 rng(20240601);
  for (int it = 0; it < 60; ++it) {
    PointSample s = random_integral_point(rng, 50, 400);
    CurvePoint P = s.P, Q = dbl(s.E, P), R = multiply(s.E, P, 3);
    EXPECT_EQ(add(s.E, P, Q), add(s.E, Q, P));
    EXPECT_EQ(add(s.E, add(s.E, P, Q), R), add(s.E, P, add(s.E, Q, R)));
    EXPECT_EQ(add(s.E, Q, R), multiply(s.E, P, 5));
    EXPECT_EQ(multiply(s.E, P, -2), negate(Q));
  }
}
