#include <gtest/gtest.h>

#include "gen.hpp"
#include "rcb/eholzer.hpp"
#include "rcb/error.hpp"
#include "rcb/samples.hpp"

using namespace rcb;

namespace {

Poly zpow(unsigned e, const Rational& c = Rational(1)) { return Poly::power(Var::z, e, c); }

StarSeries random_series(testgen::Gen& g, unsigned truncation) {
  StarSeries s(truncation);
  for (int i = 0; i < 4; ++i) {
    const auto order = static_cast<unsigned>(g.integer(0, truncation));
    s.add(order, g.positive(6, 3), g.poly(VarSet{Var::z}, 3, 3));
  }
  return s;
}

}  // namespace

TEST(StarSeries, InjectAndExtract) {
  EXPECT_TRUE(inject({Rational(3), Poly(VarSet{Var::z})}, 4).is_zero());
  const WeightedForm f{Rational(7, 3), zpow(2, 5) + zpow(0, -1)};
  const StarSeries s = inject(f, 3);
  EXPECT_EQ(s.component(0, f.weight), f.form);
  EXPECT_TRUE(s.component(1, f.weight).is_zero());
  EXPECT_EQ(s.coeffs()[0].size(), 1U);
  EXPECT_EQ(parse_weighted_form("7/3: 5*z^2 - 1"), f);
  EXPECT_THROW((void)parse_weighted_form("7/3 z"), ParseError);
}

TEST(Star, OrderZeroIsProduct) {
  const WeightedForm f{Rational(1, 2), zpow(2) + zpow(1, 3)};
  const WeightedForm g{Rational(7, 3), zpow(3, Rational(-1, 4))};
  const StarSeries s = star(inject(f, 4), inject(g, 4));
  EXPECT_EQ(s.component(0, f.weight + g.weight), f.form * g.form);
}

TEST(Star, FirstOrderOfEqualWeightsVanishes) {
  const Rational lam(5, 2);
  const StarSeries s = star(inject({lam, zpow(1)}, 3), inject({lam, zpow(1)}, 3));
  EXPECT_TRUE(s.coeffs()[1].empty());
  const StarSeries t = star(inject({Rational(3), zpow(1)}, 3), inject({Rational(1), zpow(1)}, 3));
  EXPECT_EQ(t.component(1, Rational(6)), zpow(1, 2));
}

TEST(Star, ConstantOneIsUnit) {
  testgen::Gen g(5);
  for (unsigned n = 0; n <= 6; ++n) {
    const StarSeries unit = inject({Rational(0), zpow(0)}, n);
    for (int trial = 0; trial < 5; ++trial) {
      const StarSeries a = random_series(g, n);
      EXPECT_EQ(star(unit, a), a);
      EXPECT_EQ(star(a, unit), a);
    }
  }
}

TEST(Star, WeightGrading) {
  testgen::Gen g(9);
  for (int trial = 0; trial < 10; ++trial) {
    const Rational l1 = g.positive(), l2 = g.positive();
    const StarSeries s = star(inject({l1, g.poly(VarSet{Var::z}, 4)}, 5), inject({l2, g.poly(VarSet{Var::z}, 4)}, 5));
    for (unsigned m = 0; m <= 5; ++m) {
      for (const auto& [w, p] : s.coeffs()[m]) EXPECT_EQ(w, l1 + l2 + Rational(2 * m));
    }
  }
}

TEST(Star, Bilinear) {
  testgen::Gen g(13);
  for (int trial = 0; trial < 10; ++trial) {
    const StarSeries a = random_series(g, 4), b = random_series(g, 4), d = random_series(g, 4);
    const Rational c = g.rational();
    EXPECT_EQ(star(a * c + b, d), star(a, d) * c + star(b, d));
    EXPECT_EQ(star(d, a * c + b), star(d, a) * c + star(d, b));
  }
}

TEST(Star, TruncationMismatch) {
  try {
    (void)star(StarSeries(2), StarSeries(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TruncationMismatch);
  }
}

TEST(Associativity, SmallCases) {
  const WeightedForm z1{Rational(1), zpow(1)};
  EXPECT_TRUE(assoc_defect(z1, z1, z1, 2).is_zero());
  EXPECT_TRUE(assoc_defect({Rational(1, 2), zpow(3)}, {Rational(2), zpow(2)}, {Rational(7, 3), zpow(1)}, 0).is_zero());
}

TEST(Associativity, MonomialGrid) {
  for (const auto& t : base_triples()) {
    for (unsigned a = 0; a <= 3; a += 3) {
      for (unsigned b = 1; b <= 2; ++b) {
        const StarSeries d = assoc_defect({t.lam1, zpow(a)}, {t.lam2, zpow(b)}, {t.lam3, zpow(3 - b + a % 2)}, 6);
        EXPECT_TRUE(d.is_zero()) << t.str() << " " << d.str();
      }
    }
  }
}

TEST(Associativity, DeformationIsAssociativeWhereTIsConstant) {
  for (const auto& t : base_triples()) {
    for (CmzReading reading : {CmzReading::Printed, CmzReading::Halved}) {
      EXPECT_TRUE(assoc_defect_kappa({t.lam1, zpow(2)}, {t.lam2, zpow(3)}, {t.lam3, zpow(2)}, 4, Rational(1, 2), reading)
                      .is_zero());
    }
  }
}
