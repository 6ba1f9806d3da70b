#include "rcb/rewriter.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <tuple>

#include "rcb/error.hpp"
#include "rcb/racah.hpp"

namespace rcb {

// ------------------------------------------------------------------ parsing

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_blanks() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_blanks();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_blanks();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  unsigned integer() {
    skip_blanks();
    const std::size_t start = pos_;
    unsigned long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (value > 1000000) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return static_cast<unsigned>(value);
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(pos_, what + " in '" + std::string(text_) + "'");
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

BracketExpr parse_expr(Cursor& in) {
  if (in.accept('f')) {
    const unsigned slot = in.integer();
    if (slot == 0) in.fail("leaf slots start at 1");
    return BracketExpr::leaf(slot);
  }
  in.expect('[');
  BracketExpr left = parse_expr(in);
  in.expect(',');
  BracketExpr right = parse_expr(in);
  in.expect(']');
  in.expect('_');
  const unsigned order = in.integer();
  return BracketExpr::node(std::move(left), std::move(right), order);
}

}  // namespace

BracketExpr parse_bracket(std::string_view text) {
  Cursor in(text);
  BracketExpr expr = parse_expr(in);
  if (!in.at_end()) in.fail("trailing input");
  try {
    (void)expr.slots();
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
  return expr;
}

WeightAssignment parse_weights(std::string_view text) {
  WeightAssignment out;
  unsigned slot = 1;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    try {
      out[slot++] = Rational::parse(item);
    } catch (const ParseError& e) {
      throw ParseError(start + e.position(), e.what());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// ---------------------------------------------------------- standard terms

unsigned StandardTerm::total_order() const {
  unsigned total = 0;
  for (unsigned k : orders) total += k;
  return total;
}

BracketExpr StandardTerm::to_expr() const {
  BracketExpr expr = BracketExpr::leaf(leaves.back());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    expr = BracketExpr::node(BracketExpr::leaf(leaves[leaves.size() - 2 - i]), expr, orders[i]);
  }
  return expr;
}

std::string StandardTerm::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < orders.size(); ++i) out += (i ? "," : "") + std::to_string(orders[i]);
  return out + ")";
}

void LinearCombo::add(const StandardTerm& term, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(term, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void LinearCombo::add(const LinearCombo& other, const Rational& scale) {
  if (scale.is_zero()) return;
  for (const auto& [term, c] : other.terms_) add(term, c * scale);
}

Rational LinearCombo::coefficient(const StandardTerm& term) const {
  const auto it = terms_.find(term);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string LinearCombo::str() const {
  std::string out;
  for (const auto& [term, c] : terms_) out += c.str() + "  " + term.str() + "\n";
  return out;
}

// ---------------------------------------------------------------- rewriting

namespace {

StandardTerm single(unsigned slot) { return {{slot}, {}}; }

/// [a, C]_n for a below every leaf of C.
StandardTerm prepend(unsigned a, const StandardTerm& c, unsigned n) {
  StandardTerm out;
  out.leaves.push_back(a);
  out.leaves.insert(out.leaves.end(), c.leaves.begin(), c.leaves.end());
  out.orders = c.orders;
  out.orders.push_back(n);
  return out;
}

/// C without its first leaf and outermost order.
StandardTerm tail(const StandardTerm& c) {
  return {{c.leaves.begin() + 1, c.leaves.end()}, {c.orders.begin(), c.orders.end() - 1}};
}

Rational sign(unsigned n) { return n % 2 ? Rational(-1) : Rational(1); }

const Rational& leaf_weight(const WeightAssignment& weights, unsigned slot) {
  const auto it = weights.find(slot);
  if (it == weights.end()) throw Error(ErrorKind::UnboundSlot, "no weight for f" + std::to_string(slot));
  return it->second;
}

[[noreturn]] void repeated(unsigned slot) {
  throw Error(ErrorKind::InvalidArgument, "slot f" + std::to_string(slot) + " repeated");
}

/// Transition coefficient at a rewriting site; pole failures become
/// InadmissibleLocalWeights.
Rational local(Rational (*fn)(const ParamTriple&, const RacahQuery&), const ParamTriple& t, const RacahQuery& q) {
  try {
    return fn(t, q);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) throw;
    throw Error(ErrorKind::InadmissibleLocalWeights, "local weights " + t.str() + ": " + e.what());
  }
}

/// Coefficients c(k,p) of the adjacent transposition
///   [a, [b, R]_m]_n = sum_{k,p} c(k,p) [b, [a, R]_p]_{n+m-p}
/// obtained by the reverse identity, antisymmetry on [a,b]_k and the main identity.
std::map<unsigned, Rational> transpose_coefficients(const Rational& la, const Rational& lb, const Rational& lr,
                                                    unsigned n, unsigned m) {
  const unsigned total = n + m;
  const ParamTriple forward{la, lb, lr};
  const ParamTriple flipped{lb, la, lr};
  std::map<unsigned, Rational> out;
  for (unsigned k = 0; k <= total; ++k) {
    const Rational v = local(u_reverse, forward, {total, k, m});
    if (v.is_zero()) continue;
    for (unsigned p = 0; p <= total; ++p) {
      const Rational u = local(u_coefficient, flipped, {total, k, p});
      if (!u.is_zero()) out[p] += sign(k) * v * u;
    }
  }
  return out;
}

class MergeRewriter {
 public:
  MergeRewriter(const WeightAssignment& weights, bool flip) : weights_(weights), flip_(flip) {}

  LinearCombo normalize(const BracketExpr& e) {
    if (e.is_leaf()) {
      (void)leaf_weight(weights_, e.slot());
      LinearCombo out;
      out.add(single(e.slot()), 1);
      return out;
    }
    const LinearCombo left = normalize(e.left());
    const LinearCombo right = normalize(e.right());
    LinearCombo out;
    for (const auto& [x, cx] : left.terms()) {
      for (const auto& [y, cy] : right.terms()) out.add(merge(x, y, e.order()), cx * cy);
    }
    return out;
  }

 private:
  using Key = std::tuple<StandardTerm, StandardTerm, unsigned>;

  Rational weight(const StandardTerm& c) const {
    Rational w(2 * c.total_order());
    for (unsigned slot : c.leaves) w += leaf_weight(weights_, slot);
    return w;
  }

  /// [X, Y]_n in the standard basis.
  const LinearCombo& merge(const StandardTerm& x, const StandardTerm& y, unsigned n) {
    Key key{x, y, n};
    if (const auto it = cache_.find(key); it != cache_.end()) return it->second;
    LinearCombo out = compute(x, y, n);
    return cache_.emplace(std::move(key), std::move(out)).first->second;
  }

  LinearCombo compute(const StandardTerm& x, const StandardTerm& y, unsigned n) {
    LinearCombo out;
    if (x.leaves.size() > 1) {
      // [[a, X']_m, Y]_n = sum_p U [a, [X', Y]_p]_{n+m-p}
      const unsigned a = x.leaves.front();
      const unsigned m = x.orders.back();
      const StandardTerm rest = tail(x);
      const ParamTriple t{leaf_weight(weights_, a), weight(rest), weight(y)};
      const unsigned total = n + m;
      for (unsigned p = 0; p <= total; ++p) {
        const Rational u = local(u_coefficient, t, {total, m, p});
        if (u.is_zero()) continue;
        const LinearCombo inner = merge(rest, y, p);
        for (const auto& [c, cc] : inner.terms()) out.add(merge(single(a), c, total - p), u * cc);
      }
      return out;
    }
    const unsigned a = x.leaves.front();
    const unsigned b = y.leaves.front();
    if (a == b) repeated(a);
    if (y.leaves.size() == 1) {
      out.add(a < b ? StandardTerm{{a, b}, {n}} : StandardTerm{{b, a}, {n}}, a < b ? Rational(1) : sign(n));
      return out;
    }
    if (a < b) {
      out.add(prepend(a, y, n), 1);
      return out;
    }
    if (flip_) {
      out.add(merge(y, x, n), sign(n));
      return out;
    }
    const unsigned m = y.orders.back();
    const StandardTerm rest = tail(y);
    const auto coeffs = transpose_coefficients(leaf_weight(weights_, a), leaf_weight(weights_, b), weight(rest), n, m);
    for (const auto& [p, c] : coeffs) {
      const LinearCombo inner = merge(x, rest, p);
      for (const auto& [t, ct] : inner.terms()) out.add(merge(single(b), t, n + m - p), c * ct);
    }
    return out;
  }

  const WeightAssignment& weights_;
  bool flip_;
  std::map<Key, LinearCombo> cache_;
};

using Terms = std::vector<std::pair<Rational, BracketExpr>>;

/// Term-by-term rewriting with innermost redex selection.
class RedexRewriter {
 public:
  RedexRewriter(const WeightAssignment& weights, bool leftmost) : weights_(weights), leftmost_(leftmost) {}

  LinearCombo normalize(const BracketExpr& expr) {
    std::map<std::string, std::pair<BracketExpr, Rational>> pending;
    LinearCombo done;
    const auto push = [&](const BracketExpr& e, const Rational& c) {
      if (const auto term = as_standard(e)) {
        done.add(*term, c);
        return;
      }
      auto [it, inserted] = pending.try_emplace(e.str(), e, c);
      if (!inserted) {
        it->second.second += c;
        if (it->second.second.is_zero()) pending.erase(it);
      }
    };
    for (unsigned slot : expr.slots()) (void)leaf_weight(weights_, slot);
    push(expr, 1);
    while (!pending.empty()) {
      const auto [e, c] = pending.begin()->second;
      pending.erase(pending.begin());
      const auto next = step(e);
      if (!next) throw Error(ErrorKind::InvalidArgument, "no redex in non-standard " + e.str());
      for (const auto& [ci, ei] : *next) push(ei, c * ci);
    }
    return done;
  }

 private:
  static std::optional<StandardTerm> as_standard(const BracketExpr& e) {
    if (e.is_leaf()) return single(e.slot());
    if (!e.left().is_leaf()) return std::nullopt;
    const auto rest = as_standard(e.right());
    if (!rest || e.left().slot() >= rest->leaves.front()) return std::nullopt;
    return prepend(e.left().slot(), *rest, e.order());
  }

  Rational weight(const BracketExpr& e) const {
    if (e.is_leaf()) return leaf_weight(weights_, e.slot());
    return weight(e.left()) + weight(e.right()) + Rational(2 * e.order());
  }

  std::optional<Terms> step(const BracketExpr& e) const {
    if (e.is_leaf()) return std::nullopt;
    const auto rebuild = [&](Terms inner, bool in_left) {
      for (auto& [c, t] : inner) {
        t = in_left ? BracketExpr::node(t, e.right(), e.order()) : BracketExpr::node(e.left(), t, e.order());
      }
      return inner;
    };
    if (auto r = step(leftmost_ ? e.left() : e.right())) return rebuild(std::move(*r), leftmost_);
    if (auto r = step(leftmost_ ? e.right() : e.left())) return rebuild(std::move(*r), !leftmost_);
    return apply_at(e);
  }

  /// The move at the root of `e`, whose children are already redex-free.
  std::optional<Terms> apply_at(const BracketExpr& e) const {
    const BracketExpr& left = e.left();
    const BracketExpr& right = e.right();
    const unsigned n = e.order();
    Terms out;
    if (!left.is_leaf()) {
      const unsigned m = left.order();
      const unsigned total = n + m;
      const ParamTriple t{weight(left.left()), weight(left.right()), weight(right)};
      for (unsigned p = 0; p <= total; ++p) {
        const Rational u = local(u_coefficient, t, {total, m, p});
        if (u.is_zero()) continue;
        out.emplace_back(u, BracketExpr::node(left.left(), BracketExpr::node(left.right(), right, p), total - p));
      }
      return out;
    }
    const unsigned a = left.slot();
    if (right.is_leaf()) {
      if (a == right.slot()) repeated(a);
      if (a < right.slot()) return std::nullopt;
      out.emplace_back(sign(n), BracketExpr::node(right, left, n));
      return out;
    }
    if (!right.left().is_leaf()) return std::nullopt;
    const unsigned b = right.left().slot();
    if (a == b) repeated(a);
    if (a < b) return std::nullopt;
    const unsigned m = right.order();
    const auto coeffs = transpose_coefficients(weight(left), weight(right.left()), weight(right.right()), n, m);
    for (const auto& [p, c] : coeffs) {
      out.emplace_back(c, BracketExpr::node(right.left(), BracketExpr::node(left, right.right(), p), n + m - p));
    }
    return out;
  }

  const WeightAssignment& weights_;
  bool leftmost_;
};

}  // namespace

LinearCombo to_standard(const BracketExpr& expr, const WeightAssignment& weights, RewriteStrategy strategy) {
  (void)expr.slots();
  switch (strategy) {
    case RewriteStrategy::Memoized:
      return MergeRewriter(weights, false).normalize(expr);
    case RewriteStrategy::FlipAndReassociate:
      return MergeRewriter(weights, true).normalize(expr);
    case RewriteStrategy::LeftmostInnermost:
      return RedexRewriter(weights, true).normalize(expr);
    case RewriteStrategy::RightmostInnermost:
      return RedexRewriter(weights, false).normalize(expr);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown rewrite strategy");
}

// ------------------------------------------------------ coefficient language

namespace {

class CoeffParser {
 public:
  CoeffParser(std::string_view text, const WeightAssignment& weights) : in_(text), weights_(weights) {}

  Rational run() {
    Rational v = sum();
    if (!in_.at_end()) in_.fail("trailing input");
    return v;
  }

 private:
  Rational sum() {
    Rational v = product();
    while (true) {
      if (in_.accept('+')) {
        v += product();
      } else if (in_.accept('-')) {
        v -= product();
      } else {
        return v;
      }
    }
  }

  Rational product() {
    Rational v = unary();
    while (in_.accept('*')) v *= unary();
    return v;
  }

  Rational unary() {
    if (in_.accept('-')) return -unary();
    if (in_.accept('+')) return unary();
    return atom();
  }

  Rational atom() {
    if (in_.accept('(')) {
      Rational v = sum();
      in_.expect(')');
      return v;
    }
    if (in_.accept('l')) {
      const unsigned slot = in_.integer();
      const auto it = weights_.find(slot);
      if (it == weights_.end()) in_.fail("no weight for l" + std::to_string(slot));
      return it->second;
    }
    const Rational num(static_cast<long>(in_.integer()));
    if (in_.accept('/')) {
      const unsigned den = in_.integer();
      if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in coefficient");
      return num / Rational(static_cast<long>(den));
    }
    return num;
  }

  Cursor in_;
  const WeightAssignment& weights_;
};

std::string sample_text(const WeightAssignment& weights) {
  std::string out = "(";
  bool first = true;
  for (const auto& [slot, w] : weights) {
    out += (first ? "" : ",") + w.str();
    first = false;
  }
  return out + ")";
}

}  // namespace

Rational eval_coefficient(std::string_view text, const WeightAssignment& weights) {
  return CoeffParser(text, weights).run();
}

std::vector<std::pair<std::string, std::string>> parse_identity_lines(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') {
      const auto bar = line.find('|');
      if (bar == std::string_view::npos) throw ParseError(start, "expected 'coeff | expr'");
      const auto trim = [](std::string_view s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string_view::npos ? std::string() : std::string(s.substr(b, e - b + 1));
      };
      out.emplace_back(trim(line.substr(0, bar)), trim(line.substr(bar + 1)));
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

VerificationReport check_identity(const std::vector<std::pair<std::string, std::string>>& terms,
                                  const WeightAssignment& weights, RewriteStrategy strategy) {
  VerificationReport report;
  report.identity_id = "rc-identity";
  report.parameter_samples.push_back(sample_text(weights));
  LinearCombo total;
  std::set<StandardTerm> touched;
  for (const auto& [coeff, expr] : terms) {
    const LinearCombo normal = to_standard(parse_bracket(expr), weights, strategy);
    for (const auto& [term, c] : normal.terms()) touched.insert(term);
    total.add(normal, eval_coefficient(coeff, weights));
  }
  if (touched.empty()) report.instances_checked = 1;
  for (const StandardTerm& term : touched) {
    const Rational c = total.coefficient(term);
    report.check(c.is_zero(), report.parameter_samples.front(), term.str(), c.str(), "0");
  }
  return report;
}

VerificationReport check_identity_direct(const std::vector<std::pair<std::string, std::string>>& terms,
                                         const WeightAssignment& weights, unsigned max_deg) {
  VerificationReport report;
  report.identity_id = "rc-identity-direct";
  report.parameter_samples.push_back(sample_text(weights));
  std::vector<std::pair<Rational, BracketExpr>> parsed;
  std::set<unsigned> slots;
  for (const auto& [coeff, expr] : terms) {
    parsed.emplace_back(eval_coefficient(coeff, weights), parse_bracket(expr));
    for (unsigned s : parsed.back().second.slots()) slots.insert(s);
  }
  const std::vector<unsigned> order(slots.begin(), slots.end());
  std::vector<unsigned> deg(order.size(), 0);
  while (true) {
    std::map<unsigned, WeightedForm> leaves;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const auto it = weights.find(order[i]);
      if (it == weights.end()) throw Error(ErrorKind::UnboundSlot, "no weight for f" + std::to_string(order[i]));
      leaves[order[i]] = {it->second, Poly::power(Var::z, deg[i])};
    }
    Poly sum(VarSet{Var::z});
    for (const auto& [c, expr] : parsed) sum += eval_bracket_tree(expr, leaves).form * c;
    std::string indices = "m=(";
    for (std::size_t i = 0; i < deg.size(); ++i) indices += (i ? "," : "") + std::to_string(deg[i]);
    report.check(sum.is_zero(), report.parameter_samples.front(), indices + ")", sum.str(), "0");
    std::size_t i = 0;
    while (i < deg.size() && deg[i] == max_deg) deg[i++] = 0;
    if (i == deg.size()) break;
    ++deg[i];
  }
  return report;
}

}  // namespace rcb
