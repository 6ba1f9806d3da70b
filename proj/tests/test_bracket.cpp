#include <gtest/gtest.h>

#include "gen.hpp"
#include "rcb/bracket.hpp"
#include "rcb/error.hpp"

using namespace rcb;

namespace {

const VarSet kZ{Var::z};

WeightedForm random_form(testgen::Gen& g, const Rational& weight, unsigned deg = 4) {
  return {weight, g.poly(kZ, deg, 4)};
}

BracketExpr random_tree(testgen::Gen& g, unsigned first, unsigned count) {
  if (count == 1) return BracketExpr::leaf(first);
  const auto split = static_cast<unsigned>(g.integer(1, count - 1));
  const auto order = static_cast<unsigned>(g.integer(0, 2));
  BracketExpr left = random_tree(g, first, split);
  BracketExpr right = random_tree(g, first + split, count - split);
  if (g.integer(0, 1)) std::swap(left, right);
  return BracketExpr::node(left, right, order);
}

}  // namespace

TEST(RcBracket, OrderZeroIsProduct) {
  testgen::Gen g(80);
  for (int i = 0; i < 20; ++i) {
    const WeightedForm f = random_form(g, g.rational()), h = random_form(g, g.rational());
    const WeightedForm out = rc_bracket(f, h, 0);
    EXPECT_EQ(out.form, f.form * h.form);
    EXPECT_EQ(out.weight, f.weight + h.weight);
  }
}

TEST(RcBracket, FirstOrderOnZ) {
  const WeightedForm f{Rational(2, 3), Poly::power(Var::z, 1)};
  const WeightedForm h{Rational(5, 2), Poly::power(Var::z, 1)};
  EXPECT_EQ(rc_bracket(f, h, 1).form, Poly::power(Var::z, 1, Rational(2, 3) - Rational(5, 2)));
  EXPECT_TRUE(rc_bracket(f, f, 1).form.is_zero());
  EXPECT_EQ(rc_bracket(f, h, 1).weight, Rational(2, 3) + Rational(5, 2) + 2);
}

TEST(RcBracket, Antisymmetry) {
  testgen::Gen g(81);
  for (int i = 0; i < 30; ++i) {
    const WeightedForm f = random_form(g, g.rational()), h = random_form(g, g.rational());
    for (unsigned n = 0; n <= 6; ++n) {
      const Poly sign = n % 2 ? -rc_bracket(h, f, n).form : rc_bracket(h, f, n).form;
      EXPECT_EQ(rc_bracket(f, h, n).form, sign);
    }
  }
}

TEST(RcBracket, Bilinear) {
  testgen::Gen g(82);
  for (int i = 0; i < 30; ++i) {
    const Rational l1 = g.rational(), l2 = g.rational(), a = g.rational(), b = g.rational();
    const WeightedForm f = random_form(g, l1), f2 = random_form(g, l1), h = random_form(g, l2);
    const auto n = static_cast<unsigned>(g.integer(0, 5));
    const WeightedForm mix{l1, f.form * a + f2.form * b};
    EXPECT_EQ(rc_bracket(mix, h, n).form, rc_bracket(f, h, n).form * a + rc_bracket(f2, h, n).form * b);
  }
}

TEST(RcBracket, MonomialExponent) {
  testgen::Gen g(83);
  for (int i = 0; i < 50; ++i) {
    const auto n = static_cast<unsigned>(g.integer(0, 4));
    const auto a = static_cast<unsigned>(g.integer(n, 6)), b = static_cast<unsigned>(g.integer(n, 6));
    const WeightedForm out = rc_bracket({g.rational(), Poly::power(Var::z, a)}, {g.rational(), Poly::power(Var::z, b)}, n);
    for (const auto& [exps, c] : out.form.terms()) EXPECT_EQ(exps[0], a + b - n);
  }
}

TEST(RcBracket, RejectsOtherVariables) {
  EXPECT_THROW((void)rc_bracket({1, parse_poly("x")}, {1, parse_poly("z")}, 1), Error);
}

TEST(BracketExpr, TextAndSlots) {
  const BracketExpr e =
      BracketExpr::node(BracketExpr::node(BracketExpr::leaf(1), BracketExpr::leaf(2), 1), BracketExpr::leaf(3), 1);
  EXPECT_EQ(e.str(), "[[f1,f2]_1,f3]_1");
  EXPECT_EQ(e.slots(), (std::set<unsigned>{1, 2, 3}));
  EXPECT_EQ(e.total_order(), 2u);
  const BracketExpr dup = BracketExpr::node(BracketExpr::leaf(1), BracketExpr::leaf(1), 0);
  EXPECT_THROW((void)dup.slots(), Error);
}

TEST(EvalTree, LeafNodeAndComb) {
  const WeightedForm f1{Rational(1, 2), Poly::power(Var::z, 3)};
  const WeightedForm f2{Rational(1), Poly::power(Var::z, 2, 2)};
  const WeightedForm f3{Rational(7, 3), Poly::power(Var::z, 1)};
  const std::map<unsigned, WeightedForm> leaves{{1, f1}, {2, f2}, {3, f3}};
  EXPECT_EQ(eval_bracket_tree(BracketExpr::leaf(2), leaves), f2);
  const auto prod = eval_bracket_tree(BracketExpr::node(BracketExpr::leaf(1), BracketExpr::leaf(2), 0), leaves);
  EXPECT_EQ(prod.form, f1.form * f2.form);
  const BracketExpr comb =
      BracketExpr::node(BracketExpr::leaf(1), BracketExpr::node(BracketExpr::leaf(2), BracketExpr::leaf(3), 1), 2);
  EXPECT_EQ(eval_bracket_tree(comb, leaves), rc_bracket(f1, rc_bracket(f2, f3, 1), 2));
  EXPECT_THROW((void)eval_bracket_tree(comb, {{1, f1}, {2, f2}}), Error);
}

TEST(EvalTree, WeightAdditivity) {
  testgen::Gen g(84);
  for (int i = 0; i < 40; ++i) {
    const auto leaves_n = static_cast<unsigned>(g.integer(1, 5));
    const BracketExpr tree = random_tree(g, 1, leaves_n);
    std::map<unsigned, WeightedForm> leaves;
    std::map<unsigned, Rational> weights;
    Rational sum;
    for (unsigned s = 1; s <= leaves_n; ++s) {
      leaves[s] = random_form(g, g.rational(), 3);
      weights[s] = leaves[s].weight;
      sum += leaves[s].weight;
    }
    const WeightedForm out = eval_bracket_tree(tree, leaves);
    EXPECT_EQ(out.weight, sum + Rational(2 * tree.total_order()));
    EXPECT_EQ(out.weight, tree.weight(weights));
  }
}
