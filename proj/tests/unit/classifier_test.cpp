#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "helpers.hpp"
#include "mordell/classifier.hpp"
#include "mordell/error.hpp"

using namespace mordell;
using namespace mordell::testing;

TEST(Classifier, IntegralMultiplesOfExceptionalPoints) {
  auto idx = [](long B, long x, long y) {
    return integral_multiples(make_curve(Int(B)), pt(x, y), 30).integral_indices();
  };
  EXPECT_EQ(idx(108, 6, 18), (std::vector<long>{1, 2, 3, 5}));
  EXPECT_EQ(idx(80, 4, 12), (std::vector<long>{1, 2, 3, 4}));
  EXPECT_EQ(idx(-13500, 60, 450), (std::vector<long>{1, 2, 3, 4}));
  EXPECT_EQ(idx(-21168, 84, 756), (std::vector<long>{1, 2, 3, 4}));
  MultipleReport r = integral_multiples(make_curve(Int(108)), pt(6, 18), 5);
  EXPECT_EQ(r.entries[1].point, pt(-3, 9));
  EXPECT_EQ(r.entries[2].point, pt(-2, -10));
  EXPECT_EQ(r.entries[4].point, pt(366, 7002));
  for (const auto& e : r.entries) EXPECT_EQ(e.integral, e.D == 1);
  EXPECT_THROW(integral_multiples(make_curve(Int(16)), pt(0, 4), 5), Error);
}

TEST(Classifier, TwoDivDecompose) {
  EXPECT_EQ(two_div_decompose(make_curve(Int(108)), pt(6, 18)),
            (TwoDivisibilityParams{3, 2, 1, 1, 0}));
  EXPECT_EQ(two_div_decompose(make_curve(Int(80)), pt(4, 12)),
            (TwoDivisibilityParams{1, 4, 1, 5, 1}));
  EXPECT_EQ(two_div_decompose(make_curve(Int(-13500)), pt(60, 450)),
            (TwoDivisibilityParams{15, 2, 2, -1, 0}));
  try {
    two_div_decompose(make_curve(Int(16)), pt(0, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TorsionInput);
  }
  try {
    two_div_decompose(make_curve(Int(-2)), pt(3, 5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotTwoDivisible);
  }
}

TEST(Classifier, TwoDivConstruct) {
  CurveAndPoint c = two_div_construct({3, 2, 1, 1, 0});
  EXPECT_EQ(c.curve.B, 108);
  EXPECT_EQ(c.point, pt(6, 18));
  EXPECT_EQ(two_div_double_x({3, 2, 1, 1, 0}), -3);
  CurveAndPoint d = two_div_construct({15, 2, 2, -1, 0});
  EXPECT_EQ(d.curve.B, -13500);
  EXPECT_EQ(d.point, pt(60, 450));
  EXPECT_THROW(two_div_construct({2, 1, 1, 1, 0}), Error);  // Nt odd
}

TEST(Classifier, FourDivCheck) {
  EXPECT_TRUE(four_div_check(make_curve(Int(80)), pt(4, 12)));
  EXPECT_FALSE(four_div_check(make_curve(Int(108)), pt(6, 18)));
  EXPECT_TRUE(four_div_check(make_curve(Int(-21168)), pt(84, 756)));
  EXPECT_TRUE(four_div_check(make_curve(Int(-13500)), pt(60, 450)));
}

TEST(Classifier, TabefValue) {
  EXPECT_EQ(tabef_value(make_curve(Int(80)), pt(4, 12)), 216);
  auto admissible = [](const Int& v) {
    for (long g : {1L, 9L, 27L})
      if (abs(v) == 8 * g) return true;
    return false;
  };
  EXPECT_TRUE(admissible(tabef_value(make_curve(Int(-13500)), pt(60, 450))));
  EXPECT_TRUE(admissible(tabef_value(make_curve(Int(-21168)), pt(84, 756))));
  EXPECT_THROW(tabef_value(make_curve(Int(108)), pt(6, 18)), Error);
}

TEST(Classifier, ThreeDivClassify) {
  auto c = three_div_classify(make_curve(Int(108)), pt(6, 18));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->type, ThreeDivType::IV);
  EXPECT_EQ(c->M, 3);
  EXPECT_EQ(c->N, 1);
  EXPECT_EQ(c->K, 1);
  auto d = three_div_classify(make_curve(Int(80)), pt(4, 12));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->type, ThreeDivType::VI);
  EXPECT_FALSE(three_div_classify(make_curve(Int(-2)), pt(3, 5)).has_value());
  // Square B has 3-torsion; no non-torsion point qualifies.
  EXPECT_FALSE(three_div_classify(make_curve(Int(9)), pt(-2, 1)).has_value());
}

TEST(Classifier, ThreeDivConstructTypeII) {
  for (long l : {1L, 2L, 3L}) {
    Int L(l);
    Int N = 12 * L * L - 1, K = 1 - 3 * L * L;
    CurveAndPoint c = three_div_construct(ThreeDivType::II, Int(1), N, K);
    EXPECT_EQ(c.point, CurvePoint::affine(Rat(N), Rat(Int(3 * N * L))));
    CurvePoint P3 = multiply(c.curve, c.point, 3);
    ASSERT_TRUE(P3.is_integral());
    Int l2 = L * L;
    EXPECT_EQ(P3.x, Rat(Int(576 * l2 * l2 * l2 - 288 * l2 * l2 + 36 * l2 - 1)));
  }
  EXPECT_EQ(three_div_construct(ThreeDivType::II, 1, 11, -2).curve.B, -242);
  EXPECT_THROW(three_div_construct(ThreeDivType::I, 3, 1, 4), Error);  // 2N+K = 6
}

TEST(Classifier, FamilyFixtures) {
  FamilyInstance f1 = family_generate(1, Int(2));
  EXPECT_EQ(f1.curve.B, -13500);
  EXPECT_EQ(f1.point, pt(60, 450));
  EXPECT_EQ(f1.x3P, 85);
  FamilyInstance f6 = family_generate(6, Int(0));
  EXPECT_EQ(f6.curve.B, 80);
  EXPECT_EQ(f6.point, pt(4, 12));
  EXPECT_EQ(f6.x3P, 1);
  FamilyInstance g6 = family_generate(6, Int(-1));
  EXPECT_EQ(g6.curve.B, -21168);
  EXPECT_EQ(g6.point, pt(84, 756));
  EXPECT_EQ(g6.x3P, 57);
  FamilyInstance f3 = family_generate(3, Int(1));
  EXPECT_EQ(f3.curve.B, 108);
  EXPECT_EQ(f3.point, pt(6, 18));
  FamilyInstance f5 = family_generate(5, Int(1));
  EXPECT_EQ(f5.curve.B, 3704400);
  FamilyInstance f2 = family_generate(2, Int(0));
  EXPECT_TRUE(f2.torsion);
  EXPECT_EQ(family_generate(2, Int(1)).point, pt(24, 108));
  EXPECT_THROW(family_generate(1, Int(1)), Error);
  EXPECT_THROW(family_generate(3, Int(2)), Error);
  EXPECT_THROW(family_generate(7, Int(0)), Error);
}

// Every family instance has [2]P, [3]P integral and matches the closed-form x([3]P).
TEST(ClassifierProperty, FamiliesHoldFor30Parameters) {
  for (int fam = 1; fam <= 6; ++fam) {
    int made = 0;
    for (long p = -200; p <= 200 && made < 30; ++p) {
      if (!family_parameter_admissible(fam, Int(p))) continue;
      FamilyInstance f;
      try {
        f = family_generate(fam, Int(p));
      } catch (const Error& e) {
        ASSERT_EQ(e.kind(), ErrorKind::InadmissibleParameter);
        continue;
      }
      ++made;
      if (f.torsion) continue;
      CurvePoint P2 = dbl(f.curve, f.point), P3 = add(f.curve, P2, f.point);
      EXPECT_TRUE(P2.is_integral()) << fam << " " << p;
      EXPECT_TRUE(P3.is_integral()) << fam << " " << p;
      EXPECT_EQ(P3.x, Rat(f.x3P)) << fam << " " << p;
    }
    EXPECT_EQ(made, 30) << fam;
  }
}

// Beyond the listed exceptions, x([3]P) > 2|B|^(1/3) and h([3]P) > 0.44 log|B|.
TEST(ClassifierProperty, FamilyThirdMultipleIsLarge) {
  const std::map<int, std::set<long>> exceptions = {{1, {2}}, {3, {1}}, {5, {1, 7}}, {6, {0, -1}}};
  for (int fam = 1; fam <= 6; ++fam) {
    for (long p = -40; p <= 40; ++p) {
      if (!family_parameter_admissible(fam, Int(p))) continue;
      FamilyInstance f;
      try {
        f = family_generate(fam, Int(p));
      } catch (const Error&) {
        continue;
      }
      auto ex = exceptions.find(fam);
      if (f.torsion || (ex != exceptions.end() && ex->second.count(p))) continue;
      long double L = log_abs(f.curve.B);
      long double x3 = f.x3P.get_d();
      EXPECT_GT(x3, 2 * std::exp(L / 3)) << fam << " " << p;
      EXPECT_GT(std::log(std::fabs(x3)), 0.44L * L) << fam << " " << p;
    }
  }
}

TEST(Classifier, Theorem1Filter) {
  EXPECT_FALSE(theorem1_admissible(6));
  EXPECT_TRUE(theorem1_admissible(11));
  EXPECT_TRUE(theorem1_admissible(121));
  EXPECT_TRUE(theorem1_admissible(5));
  EXPECT_FALSE(theorem1_admissible(49));
}

TEST(Classifier, ExceptionalRegistry) {
  const auto& reg = exceptional_registry();
  ASSERT_EQ(reg.size(), 4u);
  for (const auto& e : reg) {
    MordellCurve E = make_curve(e.B);
    for (const CurvePoint& P : {e.P, negate(e.P)}) {
      std::vector<long> idx = integral_multiples(E, P, 30).integral_indices();
      std::set<long> got(idx.begin() + 1, idx.end());
      EXPECT_EQ(got, e.multiples) << e.B;
    }
  }
}

namespace {

template <class F>
void for_each_integral_point(long bmax, long xmax, F f) {
  for (long B = -bmax; B <= bmax; ++B) {
    if (B == 0 || !sixth_power_free(Int(B))) continue;
    MordellCurve E = make_curve(Int(B));
    long x0 = -static_cast<long>(std::cbrt(static_cast<double>(B))) - 1;
    for (long x = x0; x <= xmax; ++x) {
      Int v = Int(x) * x * x + B, y;
      if (v <= 0 || !is_square(v, &y)) continue;
      CurvePoint P = CurvePoint::affine(Rat(x), Rat(y));
      if (!is_torsion(E, P)) f(E, P);
    }
  }
}

}  // namespace

// Small-range version of the classifier equivalence sweep; acceptance runs |B| <= 2000.
TEST(ClassifierProperty, EquivalenceSweepSmall) {
  int n = 0;
  for_each_integral_point(300, 3000, [&](const MordellCurve& E, const CurvePoint& P) {
    ++n;
    CurvePoint P2 = dbl(E, P), P3 = add(E, P2, P), P4 = dbl(E, P2);
    EXPECT_EQ(four_div_check(E, P), P4.is_integral()) << E.B << " " << P.str();
    EXPECT_EQ(three_div_classify(E, P).has_value(), P3.is_integral()) << E.B << " " << P.str();
    EXPECT_FALSE(dbl(E, P4).is_integral()) << E.B << " " << P.str();
    if (E.torsion.group != TorsionGroup::Trivial) {
      EXPECT_FALSE(P3.is_integral()) << E.B;
      EXPECT_FALSE(P4.is_integral()) << E.B;
    }
    if (P2.is_integral()) {
      TwoDivisibilityParams p = two_div_decompose(E, P);
      CurveAndPoint c = two_div_construct(p);
      EXPECT_EQ(c.curve.B, E.B);
      EXPECT_EQ(c.point, P);
      EXPECT_EQ(Rat(two_div_double_x(p)), P2.x);
    }
  });
  EXPECT_GT(n, 200);
}
