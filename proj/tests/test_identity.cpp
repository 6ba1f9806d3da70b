#include <gtest/gtest.h>

#include "gen.hpp"
#include "rcb/bracket.hpp"
#include "rcb/error.hpp"
#include "rcb/identity.hpp"
#include "rcb/samples.hpp"

using namespace rcb;

namespace {

WeightedForm mono(const Rational& w, unsigned m) { return {w, Poly::power(Var::z, m)}; }

std::vector<ParamTriple> few_samples() {
  std::vector<ParamTriple> out{{1, 1, 1}, {Rational(1, 2), 1, Rational(7, 3)}, {Rational(7, 3), Rational(1, 2), Rational(1, 2)}};
  for (const auto& t : random_triples(7, 3)) out.push_back(t);
  return out;
}

}  // namespace

TEST(Samples, BaseAndSeeded) {
  EXPECT_EQ(base_triples().size(), 27u);
  const auto a = default_triples(42, 20), b = default_triples(42, 20);
  EXPECT_EQ(a.size(), 47u);
  EXPECT_EQ(a, b);
  EXPECT_NE(random_triples(42, 5), random_triples(43, 5));
  for (const auto& t : a) EXPECT_TRUE(t.admissible());
  for (const auto& t : random_triples(5, 50)) {
    for (const Rational& r : {t.lam1, t.lam2, t.lam3}) {
      EXPECT_GT(r, Rational(0));
      EXPECT_LE(r.numerator(), 20);
      EXPECT_LE(r.denominator(), 20);
    }
  }
  const auto tuples = weight_tuples(4, 42, 3);
  EXPECT_EQ(tuples.size(), 30u);
  for (const auto& w : tuples) EXPECT_EQ(w.size(), 4u);
}

TEST(MainIdentity, OrderZeroIsTripleProduct) {
  const auto report = verify_main_identity({Rational(1, 2), 1, Rational(7, 3)}, 0, 0, 3);
  EXPECT_EQ(report.status(), Status::Pass);
  EXPECT_EQ(report.instances_checked, 64u);
}

TEST(MainIdentity, FirstOrderAtOnesByHand) {
  const Rational one(1);
  for (unsigned a = 0; a <= 3; ++a) {
    for (unsigned b = 0; b <= 3; ++b) {
      for (unsigned c = 0; c <= 3; ++c) {
        const auto f1 = mono(one, a), f2 = mono(one, b), f3 = mono(one, c);
        const Poly lhs = rc_bracket(rc_bracket(f1, f2, 1), f3, 0).form;
        const Poly rhs = rc_bracket(f1, rc_bracket(f2, f3, 0), 1).form * Rational(1, 2) -
                         rc_bracket(f1, rc_bracket(f2, f3, 1), 0).form * Rational(1, 2);
        EXPECT_EQ(lhs, rhs);
      }
    }
  }
}

TEST(MainIdentity, PassesOnSamples) {
  for (const auto& t : few_samples()) {
    for (unsigned n = 0; n <= 4; ++n) {
      for (unsigned k = 0; k <= n; ++k) EXPECT_EQ(verify_main_identity(t, n, k, 3).status(), Status::Pass);
    }
  }
}

TEST(MainIdentity, RejectsInadmissible) {
  EXPECT_THROW((void)verify_main_identity({1, -1, 3}, 1, 0, 2), Error);
}

TEST(ReverseIdentity, PassesOnSamples) {
  for (const auto& t : few_samples()) {
    EXPECT_EQ(verify_reverse_identity(t, 0, 0, 2).status(), Status::Pass);
    for (unsigned n = 1; n <= 4; ++n) {
      for (unsigned p = 0; p <= n; ++p) EXPECT_EQ(verify_reverse_identity(t, n, p, 3).status(), Status::Pass);
    }
  }
}

// Rewriting with U and then with the reverse coefficients is the identity.
TEST(ReverseIdentity, ComposesWithMain) {
  for (const auto& t : few_samples()) {
    for (unsigned n = 0; n <= 3; ++n) {
      const auto u = u_matrix(t, n);
      const auto r = u_reverse_matrix(t, n);
      for (unsigned p = 0; p <= n; ++p) {
        std::vector<Rational> via(n + 1);
        for (unsigned k = 0; k <= n; ++k) {
          for (unsigned q = 0; q <= n; ++q) via[q] += r[p][k] * u[k][q];
        }
        for (unsigned q = 0; q <= n; ++q) EXPECT_EQ(via[q], p == q ? Rational(1) : Rational(0));
      }
    }
  }
}

TEST(Classical, Examples) {
  const Rational one(1);
  const auto f1 = mono(one, 1), f2 = mono(one, 2), f3 = mono(one, 3);
  const auto br = [](auto a, auto b, auto c, unsigned i, unsigned j) { return rc_bracket(rc_bracket(a, b, i), c, j).form; };
  EXPECT_TRUE((br(f1, f2, f3, 1, 1) + br(f2, f3, f1, 1, 1) + br(f3, f1, f2, 1, 1)).is_zero());
  EXPECT_EQ(verify_classical({Rational(1, 2), 1, Rational(7, 3)}, 3).status(), Status::Pass);
  for (const auto& t : few_samples()) EXPECT_EQ(verify_classical(t).status(), Status::Pass);
}

TEST(Classical, FourForm) {
  for (const auto& w : weight_tuples(4, 42, 2)) EXPECT_EQ(verify_four_form(w, 2).status(), Status::Pass);
}

TEST(Convolution, Cases) {
  EXPECT_EQ(verify_convolution({2, 3, 5}, 0, 0).status(), Status::Pass);
  EXPECT_EQ(verify_convolution({1, 1, 1}, 1, 0).status(), Status::Pass);
  for (const auto& t : few_samples()) {
    for (unsigned n = 0; n <= 4; ++n) {
      for (unsigned k = 0; k <= n; ++k) EXPECT_EQ(verify_convolution(t, n, k).status(), Status::Pass);
    }
  }
}

TEST(OperatorConvolution, Cases) {
  for (const auto& t : few_samples()) {
    for (unsigned n = 0; n <= 3; ++n) {
      for (unsigned k = 0; k <= n; ++k) EXPECT_EQ(verify_operator_convolution(t, n, k, 3).status(), Status::Pass);
    }
  }
}

// Taking Fischer adjoints slot by slot turns the operator identity into the
// bracket identity.
TEST(OperatorConvolution, AdjointGivesBracketIdentity) {
  const VarSet xyz{Var::z, Var::x, Var::y};
  for (const auto& t : few_samples()) {
    for (unsigned n = 0; n <= 2; ++n) {
      for (unsigned k = 0; k <= n; ++k) {
        for (unsigned a = 0; a <= 3; ++a) {
          for (unsigned b = 0; b <= 3; ++b) {
            for (unsigned c = 0; c <= 3; ++c) {
              const Poly p = Poly::monomial(xyz, {c, a, b});  // x^a y^b z^c
              const Poly inner = adjoint_in_slots(k, t.lam1, t.lam2, p, Var::x, Var::y, Var::x);
              const Poly outer = adjoint_in_slots(n - k, t.lam1 + t.lam2 + Rational(2 * k), t.lam3, inner, Var::x,
                                                  Var::z, Var::z)
                                     .restrict_to(VarSet{Var::z});
              const Poly direct =
                  rc_bracket(rc_bracket(mono(t.lam1, a), mono(t.lam2, b), k), mono(t.lam3, c), n - k).form;
              EXPECT_EQ(outer, direct);
            }
          }
        }
      }
    }
  }
}

TEST(Zagier, OrderZeroInvariant) {
  for (const auto reading : {ZagierReading::PrintedIndex, ZagierReading::CorrectedIndex}) {
    const auto report = verify_zagier_invariance({Rational(1, 2), 1, Rational(7, 3)}, 0, reading);
    EXPECT_EQ(report.status(), Status::ReportOnly);
    EXPECT_EQ(report.failure_count, 0u);
  }
}

TEST(Zagier, FirstOrderCorrectedReadingAtOnes) {
  const ParamTriple ones{1, 1, 1};
  const auto base = zagier_expression(ones, 1, {1, 2, 0}, ZagierReading::CorrectedIndex);
  EXPECT_FALSE(base.is_zero());
  const auto report = verify_zagier_invariance(ones, 1, ZagierReading::CorrectedIndex);
  EXPECT_EQ(report.identity_id, "zagier-corrected");
  EXPECT_EQ(report.status(), Status::ReportOnly);
  EXPECT_EQ(report.instances_checked, 54u);
  EXPECT_EQ(report.failure_count, 0u);
}

TEST(Oracle, RecoversFormulaValues) {
  for (const auto& t : few_samples()) {
    for (unsigned n = 0; n <= 3; ++n) EXPECT_EQ(verify_u_recovery(t, n).status(), Status::Pass) << t.str();
  }
}

TEST(Oracle, FrozenValuesAtOnes) {
  const auto u0 = recover_u_by_solve({1, 1, 1}, 1, 0);
  const auto u1 = recover_u_by_solve({1, 1, 1}, 1, 1);
  ASSERT_TRUE(u0 && u1);
  EXPECT_EQ(*u0, (std::vector<Rational>{Rational(1, 2), Rational(3, 2)}));
  EXPECT_EQ(*u1, (std::vector<Rational>{Rational(1, 2), Rational(-1, 2)}));
  const auto second = recover_u_by_solve({Rational(1, 2), 1, Rational(7, 3)}, 2, 1);
  ASSERT_TRUE(second);
  EXPECT_EQ(*second, (std::vector<Rational>{Rational(21, 65), Rational(21, 80), Rational(-105, 416)}));
}

TEST(Cmz, EholzerKappasSatisfyRacahIdentity) {
  for (const auto& t : few_samples()) {
    for (const auto& r : verify_cmz(t, {Rational(1, 2), Rational(3, 2)}, 4)) {
      EXPECT_EQ(r.failure_count, 0u) << r.identity_id;
      EXPECT_EQ(r.status(), Status::ReportOnly);
    }
  }
}

TEST(Cmz, HalvedWeightsAtGenericKappa) {
  for (const auto& t : few_samples()) {
    for (const auto& r : verify_cmz(t, {Rational(5, 7)}, 3)) {
      if (r.identity_id.rfind("cmz-racah-halved", 0) == 0) {
        EXPECT_EQ(r.failure_count, 0u) << t.str();
      }
    }
  }
}

TEST(ParallelMap, KeepsOrderAndRethrows) {
  const auto out = parallel_map<int>(50, 4, [](std::size_t i) { return static_cast<int>(i * i); });
  for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], static_cast<int>(i * i));
  EXPECT_THROW((void)parallel_map<int>(5, 2, [](std::size_t i) -> int {
                 if (i == 3) throw Error(ErrorKind::InvalidArgument, "boom");
                 return 0;
               }),
               Error);
}
