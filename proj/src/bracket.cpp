#include "rcb/bracket.hpp"

#include <optional>

#include "rcb/error.hpp"

namespace rcb {

namespace {

const VarSet& z_vars() {
  static const VarSet vs{Var::z};
  return vs;
}

Poly as_z_poly(const Poly& p) {
  for (Var var : p.vars().vars()) {
    if (var != Var::z) {
      throw Error(ErrorKind::VarsetMismatch, "bracket operands must be polynomials in z, got " + p.vars().str());
    }
  }
  return p.embed(z_vars());
}

}  // namespace

WeightedForm make_form(const Rational& weight, const Poly& form) { return {weight, as_z_poly(form)}; }

WeightedForm rc_bracket(const WeightedForm& f, const WeightedForm& g, unsigned n) {
  const Poly pf = as_z_poly(f.form);
  const Poly pg = as_z_poly(g.form);
  const Rational top1 = f.weight + Rational(n) - 1;
  const Rational top2 = g.weight + Rational(n) - 1;
  Poly sum(z_vars());
  for (unsigned s = 0; s <= n; ++s) {
    Rational c = binom_general(top1, n - s) * binom_general(top2, s);
    if (c.is_zero()) continue;
    if (s % 2 == 1) c = -c;
    const Poly df = pf.diff(Var::z, s);
    if (df.is_zero()) continue;
    const Poly dg = pg.diff(Var::z, n - s);
    if (dg.is_zero()) continue;
    sum += df * dg * c;
  }
  return {f.weight + g.weight + Rational(2 * n), std::move(sum)};
}

// ----------------------------------------------------------- BracketExpr

struct BracketExpr::Node {
  unsigned slot = 0;
  unsigned order = 0;
  std::optional<BracketExpr> left;
  std::optional<BracketExpr> right;
};

BracketExpr::BracketExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

BracketExpr BracketExpr::leaf(unsigned slot) {
  if (slot == 0) throw Error(ErrorKind::InvalidArgument, "leaf slots start at 1");
  auto node = std::make_shared<Node>();
  node->slot = slot;
  return BracketExpr(std::move(node));
}

BracketExpr BracketExpr::node(BracketExpr left, BracketExpr right, unsigned order) {
  auto node = std::make_shared<Node>();
  node->order = order;
  node->left = std::move(left);
  node->right = std::move(right);
  return BracketExpr(std::move(node));
}

bool BracketExpr::is_leaf() const { return !node_->left.has_value(); }

unsigned BracketExpr::slot() const {
  if (!is_leaf()) throw Error(ErrorKind::InvalidArgument, "slot() on a bracket node");
  return node_->slot;
}

const BracketExpr& BracketExpr::left() const {
  if (is_leaf()) throw Error(ErrorKind::InvalidArgument, "left() on a leaf");
  return *node_->left;
}

const BracketExpr& BracketExpr::right() const {
  if (is_leaf()) throw Error(ErrorKind::InvalidArgument, "right() on a leaf");
  return *node_->right;
}

unsigned BracketExpr::order() const {
  if (is_leaf()) throw Error(ErrorKind::InvalidArgument, "order() on a leaf");
  return node_->order;
}

std::set<unsigned> BracketExpr::slots() const {
  std::set<unsigned> out;
  std::size_t count = 0;
  const auto walk = [&](const auto& self, const BracketExpr& e) -> void {
    if (e.is_leaf()) {
      out.insert(e.slot());
      ++count;
      return;
    }
    self(self, e.left());
    self(self, e.right());
  };
  walk(walk, *this);
  if (out.size() != count) {
    throw Error(ErrorKind::InvalidArgument, "slot repeated in " + str());
  }
  return out;
}

unsigned BracketExpr::total_order() const {
  if (is_leaf()) return 0;
  return order() + left().total_order() + right().total_order();
}

std::size_t BracketExpr::leaf_count() const {
  if (is_leaf()) return 1;
  return left().leaf_count() + right().leaf_count();
}

Rational BracketExpr::weight(const std::map<unsigned, Rational>& leaf_weights) const {
  if (is_leaf()) {
    const auto it = leaf_weights.find(slot());
    if (it == leaf_weights.end()) {
      throw Error(ErrorKind::UnboundSlot, "no weight for f" + std::to_string(slot()));
    }
    return it->second;
  }
  return left().weight(leaf_weights) + right().weight(leaf_weights) + Rational(2 * order());
}

std::string BracketExpr::str() const {
  if (is_leaf()) return "f" + std::to_string(slot());
  return "[" + left().str() + "," + right().str() + "]_" + std::to_string(order());
}

bool operator==(const BracketExpr& a, const BracketExpr& b) {
  if (a.is_leaf() || b.is_leaf()) return a.is_leaf() && b.is_leaf() && a.slot() == b.slot();
  return a.order() == b.order() && a.left() == b.left() && a.right() == b.right();
}

WeightedForm eval_bracket_tree(const BracketExpr& expr, const std::map<unsigned, WeightedForm>& leaves) {
  if (expr.is_leaf()) {
    const auto it = leaves.find(expr.slot());
    if (it == leaves.end()) {
      throw Error(ErrorKind::UnboundSlot, "no form bound to f" + std::to_string(expr.slot()));
    }
    return make_form(it->second.weight, it->second.form);
  }
  return rc_bracket(eval_bracket_tree(expr.left(), leaves), eval_bracket_tree(expr.right(), leaves),
                    expr.order());
}

}  // namespace rcb
