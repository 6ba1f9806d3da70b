#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rcb/rational.hpp"

namespace rcb {

/// Variable names available to polynomials. Declaration order is the
/// canonical order used for printing and for graded-lex comparison.
enum class Var : std::uint8_t { z, x, y, t, v };

char var_name(Var var);
std::optional<Var> var_from_name(char name);

/// Ordered, duplicate-free subset of {z, x, y, t, v}.
class VarSet {
 public:
  VarSet() = default;
  VarSet(std::initializer_list<Var> vars);
  explicit VarSet(std::vector<Var> vars);

  const std::vector<Var>& vars() const { return vars_; }
  std::size_t size() const { return vars_.size(); }
  bool empty() const { return vars_.empty(); }
  bool contains(Var var) const;
  /// Position of `var` in this set; throws UnknownVariable if absent.
  std::size_t index_of(Var var) const;

  VarSet united(const VarSet& other) const;
  VarSet without(Var var) const;
  VarSet with(Var var) const;

  std::string str() const;

  friend bool operator==(const VarSet&, const VarSet&) = default;

 private:
  std::vector<Var> vars_;
};

using Exponents = std::vector<unsigned>;

/// Graded-lex "greater first": higher total degree first, ties broken
/// lexicographically with the earliest variable most significant.
struct GradedLexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Zero coefficients are never stored.
class Poly {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexDescending>;

  Poly() = default;
  explicit Poly(VarSet vars);

  static Poly constant(VarSet vars, const Rational& c);
  static Poly variable(VarSet vars, Var var);
  static Poly monomial(VarSet vars, Exponents exps, const Rational& c = Rational(1));
  /// Single-variable shorthand: c * var^e over {var}.
  static Poly power(Var var, unsigned e, const Rational& c = Rational(1));

  const VarSet& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Rational coefficient(const Exponents& exps) const;
  /// Coefficient of var^e in a single-variable (or constant) polynomial.
  Rational coefficient_of_power(unsigned e) const;
  /// Largest total degree; -1 for the zero polynomial.
  int total_degree() const;
  /// Largest exponent of `var` over all terms; -1 for the zero polynomial.
  int degree_in(Var var) const;
  bool is_homogeneous(unsigned degree) const;

  /// Same polynomial viewed over a superset of its variables.
  Poly embed(const VarSet& target) const;
  /// Drops variables that do not occur; throws VarsetMismatch otherwise
  /// when a dropped variable is still in use.
  Poly restrict_to(const VarSet& target) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b);

  /// Iterated partial derivative d^order/d var^order.
  Poly diff(Var var, unsigned order = 1) const;

  /// Simultaneous substitution. Every binding must live over one common
  /// variable set, which becomes the result's; variables of *this without a
  /// binding pass through when the result's variable set contains them and
  /// raise UnboundVariable otherwise.
  Poly subst(const std::map<Var, Poly>& bindings) const;

  /// Full evaluation; throws MissingValue for an unassigned variable in use.
  Rational eval(const std::map<Var, Rational>& point) const;

  /// Divide by var^e exactly; nullopt if some term has a smaller exponent.
  std::optional<Poly> divide_by_power(Var var, unsigned e) const;

  /// Canonical text, e.g. "3/2*x^2*y + 1"; "0" for the zero polynomial.
  std::string str() const;

 private:
  void add_term(const Exponents& exps, const Rational& c);
  void require_same_vars(const Poly& other, const char* op) const;

  VarSet vars_;
  TermMap terms_;
};

Poly pow(const Poly& base, unsigned exponent);

/// Parses sums/products/powers of rationals and single-letter variables,
/// e.g. "3/2*x^2*y - (x+1)^3". The variable set is `vars` when given and
/// otherwise the set of variables that occur.
Poly parse_poly(std::string_view text, const std::optional<VarSet>& vars = std::nullopt);

}  // namespace rcb
