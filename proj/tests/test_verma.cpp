#include <gtest/gtest.h>

#include "gen.hpp"
#include "rcb/bracket.hpp"
#include "rcb/error.hpp"
#include "rcb/specfun.hpp"
#include "rcb/verma.hpp"

using namespace rcb;

namespace {

const VarSet kX{Var::x};
const VarSet kXY{Var::x, Var::y};
const VarSet kTV{Var::t, Var::v};
constexpr Generator kFirstOrder[] = {Generator::H, Generator::E, Generator::F};

std::vector<std::pair<Rational, Rational>> weight_pairs(std::uint64_t seed, int count) {
  testgen::Gen g(seed);
  std::vector<std::pair<Rational, Rational>> out{{1, 1}, {Rational(1, 2), Rational(7, 3)}};
  while (static_cast<int>(out.size()) < count) out.emplace_back(g.positive(), g.positive());
  return out;
}

std::vector<ModuleModel> models(const Rational& a, const Rational& b) {
  return {ModuleModel::highest(a), ModuleModel::lowest(a), ModuleModel::tensor_lowest(a, b)};
}

Poly monomial_xy(unsigned a, unsigned b) { return Poly::monomial(kXY, {a, b}); }

}  // namespace

TEST(Act, Examples) {
  EXPECT_TRUE(act(ModuleModel::highest(Rational(3, 2)), Generator::E, Poly::constant(kX, 5)).is_zero());
  for (unsigned k = 0; k <= 5; ++k) {
    const Rational lam(2, 7);
    EXPECT_EQ(act(ModuleModel::lowest(lam), Generator::H, Poly::power(Var::x, k)),
              Poly::power(Var::x, k, lam + Rational(2 * k)));
  }
}

TEST(Act, CommutationRelations) {
  testgen::Gen g(200);
  for (const auto& [a, b] : weight_pairs(201, 5)) {
    for (const ModuleModel& m : models(a, b)) {
      for (int i = 0; i < 5; ++i) {
        const Poly p = g.poly(m.vars(), 5);
        const auto A = [&](Generator x, const Poly& q) { return act(m, x, q); };
        EXPECT_EQ(A(Generator::H, A(Generator::E, p)) - A(Generator::E, A(Generator::H, p)), A(Generator::E, p) * Rational(2));
        EXPECT_EQ(A(Generator::H, A(Generator::F, p)) - A(Generator::F, A(Generator::H, p)), A(Generator::F, p) * Rational(-2));
        EXPECT_EQ(A(Generator::E, A(Generator::F, p)) - A(Generator::F, A(Generator::E, p)), A(Generator::H, p));
        for (Generator x : kFirstOrder) {
          EXPECT_EQ(A(Generator::C, A(x, p)), A(x, A(Generator::C, p))) << m.str();
        }
      }
    }
  }
}

TEST(Act, TvModelIsPsiTransport) {
  testgen::Gen g(202);
  for (const auto& [a, b] : weight_pairs(203, 5)) {
    const ModuleModel xy = ModuleModel::tensor_lowest(a, b);
    const ModuleModel tv = ModuleModel::tensor_lowest_tv(a, b);
    for (int i = 0; i < 6; ++i) {
      const Poly p = g.poly(kXY, 5);
      for (Generator x : {Generator::H, Generator::E, Generator::F, Generator::C}) {
        EXPECT_EQ(act(tv, x, psi_map(p)), psi_map(act(xy, x, p))) << generator_name(x);
      }
    }
  }
}

TEST(Act, TvModelRejectsNonImage) {
  // v alone is not in the image of Psi.
  try {
    (void)act(ModuleModel::tensor_lowest_tv(1, 2), Generator::F, Poly::variable(kTV, Var::v));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonPolynomialResult);
  }
}

TEST(Fischer, Examples) {
  for (unsigned n = 0; n <= 5; ++n) {
    for (unsigned m = 0; m <= 5; ++m) {
      EXPECT_EQ(fischer(Poly::power(Var::x, n), Poly::power(Var::x, m)), n == m ? factorial(n) : Rational(0));
    }
  }
  EXPECT_EQ(fischer(Poly::constant(kX, 1), Poly::constant(kX, 1)), Rational(1));
  EXPECT_EQ(fischer(monomial_xy(2, 1), monomial_xy(2, 1)), Rational(2));
  EXPECT_THROW((void)fischer(Poly::power(Var::x, 1), monomial_xy(1, 0)), Error);
}

TEST(Fischer, ContragredientDuality) {
  for (const auto& [a, b] : weight_pairs(204, 6)) {
    const ModuleModel hi = ModuleModel::highest(a), lo = ModuleModel::lowest(a);
    for (Generator x : kFirstOrder) {
      EXPECT_EQ(generator_op(lo, x), -generator_op(hi, x).adjoint()) << generator_name(x);
      for (unsigned i = 0; i <= 5; ++i) {
        for (unsigned j = 0; j <= 5; ++j) {
          const Poly p = Poly::power(Var::x, i), q = Poly::power(Var::x, j);
          EXPECT_EQ(fischer(act(lo, x, p), q) + fischer(p, act(hi, x, q)), Rational(0));
          EXPECT_EQ(fischer(generator_op(hi, x).apply(p, Var::x), q),
                    fischer(p, generator_op(hi, x).adjoint().apply(q, Var::x)));
        }
      }
    }
  }
}

TEST(Psi, Examples) {
  EXPECT_EQ(psi_map(parse_poly("x+y")), Poly::variable(kTV, Var::t));
  const Poly t = Poly::variable(kTV, Var::t), v = Poly::variable(kTV, Var::v), one = Poly::constant(kTV, 1);
  for (unsigned n = 0; n <= 3; ++n) {
    for (unsigned m = 0; m <= 3; ++m) {
      EXPECT_EQ(psi_map(monomial_xy(n, m)),
                pow(t * Rational(1, 2), n + m) * pow(one - v, n) * pow(one + v, m));
    }
  }
}

TEST(Psi, ImageDecomposition) {
  for (const auto& [a, b] : weight_pairs(205, 4)) {
    for (unsigned n = 0; n <= 6; ++n) {
      for (unsigned m = 0; n + m <= 6; ++m) {
        const auto coeffs = jacobi_expansion_tv(psi_map(monomial_xy(n, m)), a, b);
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
          EXPECT_TRUE(coeffs[j].divide_by_power(Var::t, static_cast<unsigned>(j)).has_value());
        }
      }
    }
  }
}

TEST(Intertwiner, Basics) {
  EXPECT_EQ(intertwiner_phi_tilde(0, 2, 3, Poly::power(Var::t, 0)), Poly::constant(kXY, 1));
  for (unsigned ell = 0; ell <= 3; ++ell) {
    for (unsigned m = 0; m <= 3; ++m) {
      EXPECT_TRUE(intertwiner_phi_tilde(ell, Rational(1, 2), 3, Poly::power(Var::t, m)).is_homogeneous(ell + m));
    }
  }
}

TEST(Intertwiner, CommutesWithGenerators) {
  testgen::Gen g(206);
  for (const auto& [a, b] : weight_pairs(207, 4)) {
    const ModuleModel tensor = ModuleModel::tensor_lowest(a, b);
    for (unsigned ell = 0; ell <= 3; ++ell) {
      const ModuleModel target = ModuleModel::lowest(a + b + Rational(2 * ell));
      for (unsigned m = 0; m <= 4; ++m) {
        const Poly q = Poly::power(Var::x, m);
        for (Generator x : kFirstOrder) {
          EXPECT_EQ(act(tensor, x, intertwiner_phi_tilde(ell, a, b, q)),
                    intertwiner_phi_tilde(ell, a, b, act(target, x, q)));
        }
      }
    }
  }
}

TEST(Intertwiner, TvFormMatchesPsi) {
  for (const auto& [a, b] : weight_pairs(208, 4)) {
    for (unsigned ell = 0; ell <= 3; ++ell) {
      for (unsigned m = 0; m <= 3; ++m) {
        const Poly q = Poly::power(Var::t, m);
        EXPECT_EQ(intertwiner_phi(ell, a, b, q), psi_map(intertwiner_phi_tilde(ell, a, b, q)));
      }
    }
  }
}

TEST(Adjoint, OrderZeroIsDiagonal) {
  testgen::Gen g(209);
  const Poly p = g.poly(kXY, 4);
  const Poly z = Poly::variable(VarSet{Var::z}, Var::z);
  EXPECT_EQ(adjoint_phi_tilde(0, 3, 5, p), p.subst({{Var::x, z}, {Var::y, z}}));
}

TEST(Adjoint, FischerAdjointRelation) {
  for (const auto& [a, b] : weight_pairs(210, 4)) {
    for (unsigned ell = 0; ell <= 4; ++ell) {
      for (unsigned m = 0; m <= 5; ++m) {
        const Poly q = Poly::power(Var::z, m);
        const Poly image = intertwiner_phi_tilde(ell, a, b, q);
        for (unsigned i = 0; i <= 5; ++i) {
          for (unsigned j = 0; i + j <= 5; ++j) {
            const Poly p = monomial_xy(i, j);
            EXPECT_EQ(fischer(image, p), fischer(q, adjoint_phi_tilde(ell, a, b, p)));
          }
        }
      }
    }
  }
}

TEST(Adjoint, IsTheRcBracket) {
  for (const auto& [a, b] : weight_pairs(211, 4)) {
    for (unsigned ell = 0; ell <= 4; ++ell) {
      for (unsigned i = 0; i <= 6; ++i) {
        for (unsigned j = 0; i + j <= 6; ++j) {
          const WeightedForm f{a, Poly::power(Var::z, i)}, h{b, Poly::power(Var::z, j)};
          EXPECT_EQ(adjoint_phi_tilde(ell, a, b, monomial_xy(i, j)), rc_bracket(f, h, ell).form);
        }
      }
    }
  }
}

TEST(Casimir, EigenvalueOnSummands) {
  for (const auto& [a, b] : weight_pairs(212, 5)) {
    const ModuleModel tv = ModuleModel::tensor_lowest_tv(a, b);
    for (unsigned ell = 0; ell <= 4; ++ell) {
      const Rational mu = casimir_eigenvalue(ell, a, b);
      const Rational lam = a + b + Rational(2 * ell);
      EXPECT_EQ(mu, lam * (lam - 2) / 4);
      for (unsigned m = 0; m <= 3; ++m) {
        const Poly p = intertwiner_phi(ell, a, b, Poly::power(Var::t, m) + Poly::power(Var::t, 0).embed(VarSet{Var::t}));
        EXPECT_EQ(act(tv, Generator::C, p), p * mu);
      }
    }
  }
}

TEST(Casimir, DistinctEigenvalues) {
  for (const auto& [a, b] : weight_pairs(213, 10)) {
    std::set<Rational> seen;
    for (unsigned ell = 0; ell <= 8; ++ell) seen.insert(casimir_eigenvalue(ell, a, b));
    EXPECT_EQ(seen.size(), 9u);
  }
}

TEST(ModelParse, RoundTrip) {
  for (const char* text : {"highest:1/2", "lowest:3", "tensor:1,7/3", "tv:1/2,1"}) {
    EXPECT_EQ(ModuleModel::parse(text).str(), text);
  }
  EXPECT_THROW((void)ModuleModel::parse("weird:1"), Error);
}
