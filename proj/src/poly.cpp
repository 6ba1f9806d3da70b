#include "rcb/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "rcb/error.hpp"

namespace rcb {

namespace {

constexpr Var kAllVars[] = {Var::z, Var::x, Var::y, Var::t, Var::v};

unsigned total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0U); }

}  // namespace

char var_name(Var var) {
  switch (var) {
    case Var::z: return 'z';
    case Var::x: return 'x';
    case Var::y: return 'y';
    case Var::t: return 't';
    case Var::v: return 'v';
  }
  return '?';
}

std::optional<Var> var_from_name(char name) {
  for (Var var : kAllVars) {
    if (var_name(var) == name) return var;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- VarSet

VarSet::VarSet(std::initializer_list<Var> vars) : VarSet(std::vector<Var>(vars)) {}

VarSet::VarSet(std::vector<Var> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

bool VarSet::contains(Var var) const {
  return std::binary_search(vars_.begin(), vars_.end(), var);
}

std::size_t VarSet::index_of(Var var) const {
  const auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) {
    throw Error(ErrorKind::UnknownVariable,
                std::string("variable ") + var_name(var) + " not in " + str());
  }
  return static_cast<std::size_t>(it - vars_.begin());
}

VarSet VarSet::united(const VarSet& other) const {
  std::vector<Var> all = vars_;
  all.insert(all.end(), other.vars_.begin(), other.vars_.end());
  return VarSet(std::move(all));
}

VarSet VarSet::without(Var var) const {
  std::vector<Var> rest;
  std::copy_if(vars_.begin(), vars_.end(), std::back_inserter(rest),
               [var](Var v) { return v != var; });
  return VarSet(std::move(rest));
}

VarSet VarSet::with(Var var) const { return united(VarSet{var}); }

std::string VarSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i != 0) out += ",";
    out += var_name(vars_[i]);
  }
  return out + "}";
}

bool GradedLexDescending::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = total(a);
  const unsigned db = total(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

// ------------------------------------------------------------------ Poly

Poly::Poly(VarSet vars) : vars_(std::move(vars)) {}

Poly Poly::constant(VarSet vars, const Rational& c) {
  Poly p(std::move(vars));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

Poly Poly::variable(VarSet vars, Var var) {
  Poly p(std::move(vars));
  Exponents e(p.vars_.size(), 0);
  e[p.vars_.index_of(var)] = 1;
  p.add_term(e, Rational(1));
  return p;
}

Poly Poly::monomial(VarSet vars, Exponents exps, const Rational& c) {
  Poly p(std::move(vars));
  if (exps.size() != p.vars_.size()) {
    throw Error(ErrorKind::InvalidArgument, "exponent vector length does not match " + p.vars_.str());
  }
  p.add_term(exps, c);
  return p;
}

Poly Poly::power(Var var, unsigned e, const Rational& c) {
  return monomial(VarSet{var}, Exponents{e}, c);
}

void Poly::add_term(const Exponents& exps, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Poly::require_same_vars(const Poly& other, const char* op) const {
  if (!(vars_ == other.vars_)) {
    throw Error(ErrorKind::VarsetMismatch,
                std::string(op) + " of polynomials over " + vars_.str() + " and " + other.vars_.str());
  }
}

Rational Poly::coefficient(const Exponents& exps) const {
  const auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::coefficient_of_power(unsigned e) const {
  if (vars_.size() > 1) {
    throw Error(ErrorKind::VarsetMismatch, "coefficient_of_power needs at most one variable, got " + vars_.str());
  }
  if (vars_.empty()) return e == 0 ? coefficient({}) : Rational(0);
  return coefficient(Exponents{e});
}

int Poly::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, static_cast<int>(total(e)));
  return best;
}

int Poly::degree_in(Var var) const {
  const std::size_t i = vars_.index_of(var);
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, static_cast<int>(e[i]));
  return best;
}

bool Poly::is_homogeneous(unsigned degree) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [degree](const auto& term) { return total(term.first) == degree; });
}

Poly Poly::embed(const VarSet& target) const {
  if (target == vars_) return *this;
  std::vector<std::size_t> slot;
  for (Var var : vars_.vars()) slot.push_back(target.index_of(var));
  Poly out(target);
  for (const auto& [e, c] : terms_) {
    Exponents f(target.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[slot[i]] = e[i];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

Poly Poly::restrict_to(const VarSet& target) const {
  if (target == vars_) return *this;
  Poly out(target);
  for (const auto& [e, c] : terms_) {
    Exponents f(target.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      const Var var = vars_.vars()[i];
      if (target.contains(var)) {
        f[target.index_of(var)] = e[i];
      } else if (e[i] != 0) {
        throw Error(ErrorKind::VarsetMismatch, std::string("variable ") + var_name(var) +
                                                   " still in use, cannot restrict to " + target.str());
      }
    }
    out.add_term(f, c);
  }
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  require_same_vars(rhs, "sum");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  require_same_vars(rhs, "difference");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_vars(b, "product");
  Poly out(a.vars_);
  Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Poly Poly::operator-() const { return *this * Rational(-1); }

bool operator==(const Poly& a, const Poly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  // Compare over the union so that e.g. a constant over {} equals one over {x}.
  const VarSet all = a.vars_.united(b.vars_);
  return a.embed(all).terms_ == b.embed(all).terms_;
}

Poly Poly::diff(Var var, unsigned order) const {
  const std::size_t i = vars_.index_of(var);
  Poly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] < order) continue;
    Rational factor = c;
    for (unsigned j = 0; j < order; ++j) factor *= Rational(e[i] - j);
    Exponents f = e;
    f[i] -= order;
    out.add_term(f, factor);
  }
  return out;
}

Poly Poly::subst(const std::map<Var, Poly>& bindings) const {
  if (bindings.empty()) return *this;
  VarSet target;
  for (const auto& [var, image] : bindings) target = target.united(image.vars());
  std::map<Var, Poly> images;
  for (const auto& [var, image] : bindings) images.emplace(var, image.embed(target));

  // Powers of each image, built lazily.
  std::vector<std::vector<Poly>> powers(vars_.size());
  std::vector<bool> passthrough(vars_.size(), false);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const Var var = vars_.vars()[i];
    const auto it = images.find(var);
    if (it != images.end()) {
      powers[i].push_back(Poly::constant(target, Rational(1)));
      powers[i].push_back(it->second);
    } else if (target.contains(var)) {
      passthrough[i] = true;
      powers[i].push_back(Poly::constant(target, Rational(1)));
      powers[i].push_back(Poly::variable(target, var));
    } else {
      bool used = std::any_of(terms_.begin(), terms_.end(), [i](const auto& t) { return t.first[i] != 0; });
      if (used) {
        throw Error(ErrorKind::UnboundVariable,
                    std::string("variable ") + var_name(var) + " has no binding in substitution into " + target.str());
      }
      powers[i].push_back(Poly::constant(target, Rational(1)));
    }
  }
  const auto power_of = [&](std::size_t i, unsigned e) -> const Poly& {
    while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * powers[i][1]);
    return powers[i][e];
  };

  Poly out(target);
  for (const auto& [e, c] : terms_) {
    Poly term = Poly::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term = term * power_of(i, e[i]);
    }
    out += term;
  }
  return out;
}

Rational Poly::eval(const std::map<Var, Rational>& point) const {
  std::vector<Rational> values(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const Var var = vars_.vars()[i];
    const auto it = point.find(var);
    if (it != point.end()) {
      values[i] = it->second;
      continue;
    }
    bool used = std::any_of(terms_.begin(), terms_.end(), [i](const auto& t) { return t.first[i] != 0; });
    if (used) throw Error(ErrorKind::MissingValue, std::string("no value for variable ") + var_name(var));
  }
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term *= pow(values[i], static_cast<long>(e[i]));
    }
    sum += term;
  }
  return sum;
}

std::optional<Poly> Poly::divide_by_power(Var var, unsigned e) const {
  const std::size_t i = vars_.index_of(var);
  Poly out(vars_);
  for (const auto& [exps, c] : terms_) {
    if (exps[i] < e) return std::nullopt;
    Exponents f = exps;
    f[i] -= e;
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c.sign() < 0;
    const Rational magnitude = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string monomial;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += var_name(vars_.vars()[i]);
      if (e[i] > 1) monomial += "^" + std::to_string(e[i]);
    }
    if (monomial.empty()) {
      out += magnitude.str();
    } else if (magnitude == Rational(1)) {
      out += monomial;
    } else {
      out += magnitude.str() + "*" + monomial;
    }
  }
  return out;
}

Poly pow(const Poly& base, unsigned exponent) {
  Poly result = Poly::constant(base.vars(), Rational(1));
  Poly factor = base;
  while (exponent != 0) {
    if (exponent & 1U) result = result * factor;
    exponent >>= 1U;
    if (exponent != 0) factor = factor * factor;
  }
  return result;
}

// ---------------------------------------------------------------- parser

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Poly parse() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  static VarSet all() { return VarSet{Var::z, Var::x, Var::y, Var::t, Var::v}; }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        const Rational den = Rational::parse(digits());
        if (den.is_zero()) throw ParseError(at, "division by zero");
        acc *= Rational(1) / den;
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (accept('^')) {
      const std::string e = digits();
      if (e.size() > 4) fail("exponent too large");
      return pow(base, static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  Poly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Poly::constant(all(), Rational::parse(digits()));
    }
    if (const auto var = var_from_name(c)) {
      ++pos_;
      return Poly::variable(all(), *var);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const std::optional<VarSet>& vars) {
  const Poly full = PolyParser(text).parse();
  std::vector<Var> used;
  for (std::size_t i = 0; i < full.vars().size(); ++i) {
    const bool occurs = std::any_of(full.terms().begin(), full.terms().end(),
                                    [i](const auto& t) { return t.first[i] != 0; });
    if (occurs) used.push_back(full.vars().vars()[i]);
  }
  const Poly trimmed = full.restrict_to(VarSet(used));
  if (!vars) return trimmed;
  for (Var var : used) {
    if (!vars->contains(var)) {
      throw Error(ErrorKind::UnknownVariable,
                  std::string("variable ") + var_name(var) + " not allowed in " + vars->str());
    }
  }
  return trimmed.embed(*vars);
}

}  // namespace rcb
