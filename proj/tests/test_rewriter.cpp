#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "gen.hpp"
#include "rcb/error.hpp"
#include "rcb/identity.hpp"
#include "rcb/racah.hpp"
#include "rcb/rewriter.hpp"
#include "rcb/samples.hpp"

using namespace rcb;

namespace {

WeightAssignment assign(const std::vector<Rational>& w) {
  WeightAssignment out;
  for (std::size_t i = 0; i < w.size(); ++i) out[static_cast<unsigned>(i + 1)] = w[i];
  return out;
}

/// Random bracket tree over a shuffled set of `leaves` slots, orders summing to <= max_total.
BracketExpr random_tree(testgen::Gen& g, unsigned leaves, unsigned max_total) {
  std::vector<unsigned> slots(leaves);
  std::iota(slots.begin(), slots.end(), 1U);
  for (std::size_t i = slots.size(); i > 1; --i) std::swap(slots[i - 1], slots[g.integer(0, static_cast<long>(i - 1))]);
  unsigned budget = max_total;
  const auto build = [&](auto&& self, std::size_t lo, std::size_t hi) -> BracketExpr {
    if (hi - lo == 1) return BracketExpr::leaf(slots[lo]);
    const auto mid = static_cast<std::size_t>(g.integer(static_cast<long>(lo + 1), static_cast<long>(hi - 1)));
    BracketExpr l = self(self, lo, mid);
    BracketExpr r = self(self, mid, hi);
    const auto k = static_cast<unsigned>(g.integer(0, budget));
    budget -= k;
    return BracketExpr::node(std::move(l), std::move(r), k);
  };
  return build(build, 0, slots.size());
}

/// Compares expr against its normal form on all monomial leaf assignments with degree <= max_deg.
bool preserves_semantics(const BracketExpr& expr, const LinearCombo& normal, const WeightAssignment& w,
                         unsigned max_deg) {
  const auto slots = expr.slots();
  std::vector<unsigned> order(slots.begin(), slots.end());
  std::sort(order.begin(), order.end());
  std::vector<unsigned> deg(order.size(), 0);
  while (true) {
    std::map<unsigned, WeightedForm> leaves;
    for (std::size_t i = 0; i < order.size(); ++i) leaves[order[i]] = {w.at(order[i]), Poly::power(Var::z, deg[i])};
    const Poly lhs = eval_bracket_tree(expr, leaves).form;
    Poly rhs(VarSet{Var::z});
    for (const auto& [term, c] : normal.terms()) rhs += eval_bracket_tree(term.to_expr(), leaves).form * c;
    if (lhs != rhs) return false;
    std::size_t i = 0;
    while (i < deg.size() && deg[i] == max_deg) deg[i++] = 0;
    if (i == deg.size()) return true;
    ++deg[i];
  }
}

const std::vector<std::pair<std::string, std::string>> kJacobiLike = {
    {"1", "[[f1,f2]_1,f3]_1"}, {"1", "[[f2,f3]_1,f1]_1"}, {"1", "[[f3,f1]_1,f2]_1"}};
const std::vector<std::pair<std::string, std::string>> kWeighted = {
    {"l3", "[[f1,f2]_1,f3]_0"}, {"l1", "[[f2,f3]_1,f1]_0"}, {"l2", "[[f3,f1]_1,f2]_0"}};
const std::vector<std::pair<std::string, std::string>> kFourForm = {{"1", "[[[f1,f2]_0,f3]_0,f4]_1"},
                                                                    {"1", "[[[f2,f3]_0,f4]_0,f1]_1"},
                                                                    {"1", "[[[f4,f3]_0,f1]_0,f2]_1"},
                                                                    {"1", "[[[f4,f1]_0,f2]_0,f3]_1"}};

}  // namespace

TEST(ParseBracket, Examples) {
  EXPECT_EQ(parse_bracket("[[f1,f2]_1,f3]_1"),
            BracketExpr::node(BracketExpr::node(BracketExpr::leaf(1), BracketExpr::leaf(2), 1), BracketExpr::leaf(3), 1));
  EXPECT_EQ(parse_bracket(" f2 "), BracketExpr::leaf(2));
  const BracketExpr comb = parse_bracket("[f1,[f2,[f3,f4]_0]_0]_1");
  EXPECT_EQ(to_standard(comb, assign({1, 1, 1, 1})).terms().begin()->first, (StandardTerm{{1, 2, 3, 4}, {0, 0, 1}}));
  EXPECT_EQ(parse_bracket("[ f1 , f2 ]_ 3").str(), "[f1,f2]_3");
}

TEST(ParseBracket, ErrorsCarryPosition) {
  const auto pos = [](const char* text) {
    try {
      (void)parse_bracket(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  EXPECT_EQ(pos("[f1,f2]_"), 8);
  EXPECT_EQ(pos("[f1 f2]_1"), 4);
  EXPECT_EQ(pos("[f1,f2]_1 x"), 10);
  EXPECT_EQ(pos("g1"), 0);
  EXPECT_EQ(pos("f0"), 2);
  EXPECT_GE(pos("[f1,f1]_0"), 0);
}

TEST(ToStandard, StandardTermIsFixed) {
  testgen::Gen g(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto d = static_cast<unsigned>(g.integer(0, 4));
    StandardTerm term;
    for (unsigned i = 1; i <= d + 1; ++i) term.leaves.push_back(i);
    for (unsigned i = 0; i < d; ++i) term.orders.push_back(static_cast<unsigned>(g.integer(0, 3)));
    WeightAssignment w;
    for (unsigned i = 1; i <= d + 1; ++i) w[i] = g.positive();
    LinearCombo expected;
    expected.add(term, 1);
    EXPECT_EQ(to_standard(term.to_expr(), w), expected) << term.to_expr().str();
  }
}

TEST(ToStandard, LeftNestAtOnesUsesMainCoefficients) {
  const LinearCombo got = to_standard(parse_bracket("[[f1,f2]_1,f3]_1"), assign({1, 1, 1}));
  LinearCombo expected;
  for (unsigned p = 0; p <= 2; ++p) expected.add({{1, 2, 3}, {p, 2 - p}}, u_coefficient({1, 1, 1}, {2, 1, p}));
  EXPECT_EQ(got, expected);
  const auto solved = recover_u_by_solve({1, 1, 1}, 2, 1);
  ASSERT_TRUE(solved);
  for (unsigned p = 0; p <= 2; ++p) EXPECT_EQ(got.coefficient({{1, 2, 3}, {p, 2 - p}}), (*solved)[p]);
  EXPECT_EQ(got.str(), "1/3  (0,2)\n1/2  (1,1)\n-5/6  (2,0)\n");
}

TEST(ToStandard, AntisymmetrySign) {
  LinearCombo expected;
  expected.add({{1, 2}, {3}}, -1);
  EXPECT_EQ(to_standard(parse_bracket("[f2,f1]_3"), assign({Rational(1, 2), Rational(7, 3)})), expected);
}

TEST(ToStandard, CyclicTermPicksUpSign) {
  for (const auto& t : base_triples()) {
    LinearCombo expected;
    expected.add({{1, 2, 3}, {1, 1}}, -1);
    EXPECT_EQ(to_standard(parse_bracket("[[f2,f3]_1,f1]_1"), assign({t.lam1, t.lam2, t.lam3})), expected)
        << t.str();
  }
}

TEST(ToStandard, SemanticPreservation) {
  testgen::Gen g(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const auto leaves = static_cast<unsigned>(g.integer(1, 4));
    const BracketExpr expr = random_tree(g, leaves, 3);
    WeightAssignment w;
    for (unsigned i = 1; i <= leaves; ++i) w[i] = g.positive();
    const LinearCombo normal = to_standard(expr, w);
    EXPECT_TRUE(preserves_semantics(expr, normal, w, leaves == 4 ? 2 : 3)) << expr.str();
  }
}

TEST(ToStandard, StrategiesAgree) {
  testgen::Gen g(77);
  for (int trial = 0; trial < 40; ++trial) {
    const auto leaves = static_cast<unsigned>(g.integer(2, 5));
    const BracketExpr expr = random_tree(g, leaves, 3);
    WeightAssignment w;
    for (unsigned i = 1; i <= leaves; ++i) w[i] = g.positive();
    const LinearCombo reference = to_standard(expr, w, RewriteStrategy::LeftmostInnermost);
    EXPECT_EQ(to_standard(expr, w, RewriteStrategy::RightmostInnermost), reference) << expr.str();
    EXPECT_EQ(to_standard(expr, w, RewriteStrategy::Memoized), reference) << expr.str();
    EXPECT_EQ(to_standard(expr, w, RewriteStrategy::FlipAndReassociate), reference) << expr.str();
  }
}

TEST(ToStandard, Errors) {
  const auto kind = [](const auto& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Parse;
  };
  EXPECT_EQ(kind([] { (void)to_standard(parse_bracket("[[f1,f2]_1,f3]_1"), assign({1, 1, 0})); }),
            ErrorKind::InadmissibleLocalWeights);
  EXPECT_EQ(kind([] { (void)to_standard(parse_bracket("[f1,f3]_1"), assign({1, 1})); }), ErrorKind::UnboundSlot);
}

TEST(Coefficients, Grammar) {
  const WeightAssignment w = assign({Rational(1, 2), 1, Rational(7, 3)});
  EXPECT_EQ(eval_coefficient("l1*(2-l3)+1/2", w), Rational(1, 3));
  EXPECT_EQ(eval_coefficient("-l2", w), Rational(-1));
  EXPECT_EQ(eval_coefficient("1/2*l3", w), Rational(7, 6));
  EXPECT_EQ(eval_coefficient("2-3-4", w), Rational(-5));
  EXPECT_EQ(eval_coefficient("--l1", w), Rational(1, 2));
  EXPECT_THROW((void)eval_coefficient("l9", w), ParseError);
  EXPECT_THROW((void)eval_coefficient("(1", w), ParseError);
  EXPECT_THROW((void)eval_coefficient("1/0", w), Error);
}

TEST(IdentityLines, SkipsCommentsAndBlanks) {
  const auto lines = parse_identity_lines("# cyclic\n\n 1 | [f1,f2]_0 \n-l2|f1\n");
  ASSERT_EQ(lines.size(), 2U);
  EXPECT_EQ(lines[0], (std::pair<std::string, std::string>{"1", "[f1,f2]_0"}));
  EXPECT_EQ(lines[1], (std::pair<std::string, std::string>{"-l2", "f1"}));
  EXPECT_THROW((void)parse_identity_lines("1 [f1,f2]_0"), ParseError);
}

TEST(CheckIdentity, ClassicalAndFourForm) {
  for (const auto& w : weight_tuples(3, 42, 10)) {
    EXPECT_EQ(check_identity(kJacobiLike, assign(w)).status(), Status::Pass);
    EXPECT_EQ(check_identity(kWeighted, assign(w)).status(), Status::Pass);
    EXPECT_EQ(check_identity_direct(kJacobiLike, assign(w)).status(), Status::Pass);
    EXPECT_EQ(check_identity_direct(kWeighted, assign(w)).status(), Status::Pass);
  }
  for (const auto& w : weight_tuples(4, 42, 5)) {
    EXPECT_EQ(check_identity(kFourForm, assign(w)).status(), Status::Pass);
    EXPECT_EQ(check_identity_direct(kFourForm, assign(w), 2).status(), Status::Pass);
  }
}

TEST(CheckIdentity, FalseIdentityFails) {
  const auto w = assign({Rational(1, 2), 1, Rational(7, 3)});
  const std::vector<std::pair<std::string, std::string>> wrong = {{"1", "[[f1,f2]_1,f3]_1"},
                                                                  {"1", "[[f2,f3]_1,f1]_1"}};
  const VerificationReport r = check_identity(wrong, w);
  EXPECT_EQ(r.status(), Status::Fail);
  EXPECT_GT(r.failure_count, 0U);
  EXPECT_EQ(check_identity_direct(wrong, w).status(), Status::Fail);
  const std::vector<std::pair<std::string, std::string>> swapped = {{"l1", "[[f1,f2]_1,f3]_0"},
                                                                    {"l3", "[[f2,f3]_1,f1]_0"},
                                                                    {"l2", "[[f3,f1]_1,f2]_0"}};
  EXPECT_EQ(check_identity(swapped, w).status(), Status::Fail);
}
