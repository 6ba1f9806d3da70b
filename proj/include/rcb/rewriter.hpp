#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rcb/bracket.hpp"
#include "rcb/rational.hpp"
#include "rcb/report.hpp"

namespace rcb {

/// Parses  expr := "f" INT | "[" expr "," expr "]_" INT  (blanks allowed).
BracketExpr parse_bracket(std::string_view text);

/// Right-nested bracketing [l_1,[l_2,...,[l_D,l_{D+1}]_{k_1}...]_{k_D} over
/// ascending leaves. orders[0] is the innermost k_1.
struct StandardTerm {
  std::vector<unsigned> leaves;
  std::vector<unsigned> orders;

  unsigned total_order() const;
  BracketExpr to_expr() const;
  /// "(k_1,...,k_D)".
  std::string str() const;

  friend auto operator<=>(const StandardTerm&, const StandardTerm&) = default;
  friend bool operator==(const StandardTerm&, const StandardTerm&) = default;
};

/// Sparse combination of standard terms; zero coefficients are dropped.
class LinearCombo {
 public:
  void add(const StandardTerm& term, const Rational& c);
  void add(const LinearCombo& other, const Rational& scale = Rational(1));

  const std::map<StandardTerm, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  Rational coefficient(const StandardTerm& term) const;
  /// One "coeff  (k_1,...,k_D)" line per term.
  std::string str() const;

  friend bool operator==(const LinearCombo&, const LinearCombo&) = default;

 private:
  std::map<StandardTerm, Rational> terms_;
};

using WeightAssignment = std::map<unsigned, Rational>;

/// "1/2,1,7/3" -> {1: 1/2, 2: 1, 3: 7/3}.
WeightAssignment parse_weights(std::string_view text);

/// Memoized: bottom-up bilinear merge of normalized children; a leaf a entering
/// a comb [b,B]_m with b < a goes through the reverse identity, antisymmetry on
/// [a,b] and the main identity.
/// FlipAndReassociate: as Memoized, but that insertion instead applies
/// antisymmetry to the outer bracket and then the main identity.
/// LeftmostInnermost / RightmostInnermost: term-by-term rewriting of the first
/// innermost redex found scanning left-to-right or right-to-left.
enum class RewriteStrategy { Memoized, FlipAndReassociate, LeftmostInnermost, RightmostInnermost };

/// Rewrites `expr` in the standard basis over its own leaf set. Throws
/// InadmissibleLocalWeights when a local weight triple fails admissibility
/// and UnboundSlot when a leaf has no weight.
LinearCombo to_standard(const BracketExpr& expr, const WeightAssignment& weights,
                        RewriteStrategy strategy = RewriteStrategy::Memoized);

/// Evaluates a coefficient expression: rationals, l1, l2, ... (the weights),
/// binary + - *, parentheses and unary minus.
Rational eval_coefficient(std::string_view text, const WeightAssignment& weights);

/// "coeff | expr" per line; blank lines and lines starting with '#' are skipped.
std::vector<std::pair<std::string, std::string>> parse_identity_lines(std::string_view text);

/// Sum of coeff * to_standard(expr); pass iff every standard coefficient cancels.
VerificationReport check_identity(const std::vector<std::pair<std::string, std::string>>& terms,
                                  const WeightAssignment& weights, RewriteStrategy strategy = RewriteStrategy::Memoized);

/// The same identity evaluated on every monomial assignment z^{m_i}, m_i <= max_deg.
VerificationReport check_identity_direct(const std::vector<std::pair<std::string, std::string>>& terms,
                                         const WeightAssignment& weights, unsigned max_deg = 3);

}  // namespace rcb
