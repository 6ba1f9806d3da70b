#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>

#include "rcb/poly.hpp"
#include "rcb/rational.hpp"

namespace rcb {

/// A polynomial in z together with the weight lambda of the space it lives in.
struct WeightedForm {
  Rational weight;
  Poly form;

  friend bool operator==(const WeightedForm&, const WeightedForm&) = default;
};

/// f of weight `weight`, re-expressed over {z}; throws if f uses another variable.
WeightedForm make_form(const Rational& weight, const Poly& form);

/// Rankin-Cohen bracket [f, g]_n:
///   sum_s (-1)^s C(l1+n-1, n-s) C(l2+n-1, s) f^(s) g^(n-s),
/// carrying weight l1 + l2 + 2n. Both forms must be polynomials in z.
WeightedForm rc_bracket(const WeightedForm& f, const WeightedForm& g, unsigned n);

/// Binary tree of brackets over numbered leaf slots. Immutable; subtrees are
/// shared between copies.
class BracketExpr {
 public:
  static BracketExpr leaf(unsigned slot);
  static BracketExpr node(BracketExpr left, BracketExpr right, unsigned order);

  bool is_leaf() const;
  unsigned slot() const;
  const BracketExpr& left() const;
  const BracketExpr& right() const;
  unsigned order() const;

  /// All leaf slots, ascending. Throws InvalidArgument if a slot repeats.
  std::set<unsigned> slots() const;
  unsigned total_order() const;
  std::size_t leaf_count() const;

  /// Weight of the whole expression: sum of leaf weights + 2 * sum of orders.
  Rational weight(const std::map<unsigned, Rational>& leaf_weights) const;

  /// "[[f1,f2]_1,f3]_1" style text, re-parsable by parse_bracket.
  std::string str() const;

  friend bool operator==(const BracketExpr& a, const BracketExpr& b);

 private:
  struct Node;
  explicit BracketExpr(std::shared_ptr<const Node> node);

  std::shared_ptr<const Node> node_;
};

/// Bottom-up evaluation with rc_bracket; throws UnboundSlot if a leaf has no form.
WeightedForm eval_bracket_tree(const BracketExpr& expr, const std::map<unsigned, WeightedForm>& leaves);

}  // namespace rcb
