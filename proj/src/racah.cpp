#include "rcb/racah.hpp"

#include "rcb/error.hpp"
#include "rcb/specfun.hpp"

namespace rcb {

namespace {

Rational divide_named(const Rational& num, const Rational& den, const std::string& factor) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "vanishing denominator factor " + factor);
  return num / den;
}

std::string poch_name(const std::string& arg, const Rational& x, unsigned m) {
  return "(" + arg + ")_" + std::to_string(m) + " at " + arg + "=" + x.str();
}

std::string binom_name(const std::string& top, const Rational& x, unsigned k) {
  return "binom(" + top + "," + std::to_string(k) + ") at " + top + "=" + x.str();
}

}  // namespace

bool ParamTriple::admissible() const {
  for (const Rational& c : {lam1, lam2, lam3, lam1 + lam2, lam2 + lam3, lam1 + lam2 + lam3}) {
    if (c.is_nonpositive_integer()) return false;
  }
  return true;
}

void ParamTriple::require_admissible() const {
  const std::pair<const char*, Rational> combos[] = {
      {"l1", lam1},           {"l2", lam2},           {"l3", lam3},
      {"l1+l2", lam1 + lam2}, {"l2+l3", lam2 + lam3}, {"l1+l2+l3", lam1 + lam2 + lam3},
  };
  for (const auto& [name, value] : combos) {
    if (value.is_nonpositive_integer()) {
      throw Error(ErrorKind::Inadmissible, std::string(name) + " = " + value.str() + " at " + str());
    }
  }
}

std::string ParamTriple::str() const { return "(" + lam1.str() + "," + lam2.str() + "," + lam3.str() + ")"; }

void RacahQuery::validate() const {
  if (k > n || p > n) {
    throw Error(ErrorKind::InvalidArgument, "indices k=" + std::to_string(k) + ", p=" + std::to_string(p) +
                                                " outside [0," + std::to_string(n) + "]");
  }
}

Rational u_coefficient(const ParamTriple& params, const RacahQuery& q) {
  params.require_admissible();
  q.validate();
  const auto& [l1, l2, l3] = params;
  const unsigned n = q.n, k = q.k, p = q.p;
  const Rational s = l1 + l2 + l3 + Rational(n) - 1;
  Rational num = binom_general(n, k) * pochhammer(l2, k) * pochhammer(l3, n - k) * pochhammer(s, p);
  num = divide_named(num, pochhammer(l3, p), poch_name("l3", l3, p));
  num = divide_named(num, pochhammer(l2 + l3 + Rational(p) - 1, p), poch_name("l2+l3+p-1", l2 + l3 + Rational(p) - 1, p));
  num = divide_named(num, pochhammer(l2 + l3 + Rational(2 * p), n - p),
                     poch_name("l2+l3+2p", l2 + l3 + Rational(2 * p), n - p));
  if (num.is_zero()) return num;
  return num * racah_value(p, k, n, l1, l2, l3);
}

Rational u_reverse(const ParamTriple& params, const RacahQuery& q) {
  return u_coefficient(params.swapped13(), {q.n, q.p, q.k});
}

Rational u_reverse_closed(const ParamTriple& params, const RacahQuery& q) {
  params.require_admissible();
  q.validate();
  const auto& [l1, l2, l3] = params;
  const unsigned n = q.n, k = q.k, p = q.p;
  const Rational s = l1 + l2 + l3 + Rational(n) - 1;
  Rational num = binom_general(n, p) * pochhammer(l2, p) * pochhammer(l1, n - p) * pochhammer(s, k);
  num = divide_named(num, pochhammer(l1, k), poch_name("l1", l1, k));
  num = divide_named(num, pochhammer(l1 + l2 + Rational(k) - 1, k), poch_name("l1+l2+k-1", l1 + l2 + Rational(k) - 1, k));
  num = divide_named(num, pochhammer(l1 + l2 + Rational(2 * k), n - k),
                     poch_name("l1+l2+2k", l1 + l2 + Rational(2 * k), n - k));
  if (num.is_zero()) return num;
  return num * racah_value(k, p, n, l3, l2, l1);
}

Poly u_generating_poly(const ParamTriple& params, unsigned n, unsigned p) {
  params.require_admissible();
  RacahQuery{n, 0, p}.validate();
  const auto& [l1, l2, l3] = params;
  const Rational s = l1 + l2 + l3 + Rational(n) - 1;
  Rational pref = pochhammer(l3, n) * pochhammer(s, p);
  pref = divide_named(pref, pochhammer(l3, p), poch_name("l3", l3, p));
  pref = divide_named(pref, pochhammer(l2 + l3 + Rational(p) - 1, p), poch_name("l2+l3+p-1", l2 + l3 + Rational(p) - 1, p));
  pref = divide_named(pref, pochhammer(l2 + l3 + Rational(2 * p), n - p),
                      poch_name("l2+l3+2p", l2 + l3 + Rational(2 * p), n - p));
  const Poly first = hyp_terminating_poly({{-Rational(p), l1 + Rational(n - p)}, {s}}, Var::t);
  const Poly second =
      hyp_terminating_poly({{Rational(p) - Rational(n), Rational(p) + l2}, {-l3 - Rational(n) + 1}}, Var::t);
  return first * second * pref;
}

std::vector<std::vector<Rational>> u_matrix(const ParamTriple& params, unsigned n) {
  std::vector<std::vector<Rational>> m(n + 1, std::vector<Rational>(n + 1));
  for (unsigned k = 0; k <= n; ++k) {
    for (unsigned p = 0; p <= n; ++p) m[k][p] = u_coefficient(params, {n, k, p});
  }
  return m;
}

std::vector<std::vector<Rational>> u_reverse_matrix(const ParamTriple& params, unsigned n) {
  std::vector<std::vector<Rational>> m(n + 1, std::vector<Rational>(n + 1));
  for (unsigned p = 0; p <= n; ++p) {
    for (unsigned k = 0; k <= n; ++k) m[p][k] = u_reverse(params, {n, k, p});
  }
  return m;
}

Rational cmz_t_sum(const Rational& kappa, const Rational& lam1, const Rational& lam2, unsigned n) {
  const Rational nn(n);
  Rational total;
  for (unsigned r = 0; r <= n; ++r) {
    const unsigned s = n - r;
    const Rational num = binom_general(-lam1, r) * binom_general(-lam1 + kappa - 1, r) *
                         binom_general(nn + lam1 + lam2 - kappa, s) * binom_general(nn + lam1 + lam2 - 1, s);
    Rational term = divide_named(num, binom_general(-Rational(2) * lam1, r), binom_name("-2l1", -Rational(2) * lam1, r));
    const Rational top = Rational(2 * n) + Rational(2) * lam1 + Rational(2) * lam2 - 2;
    term = divide_named(term, binom_general(top, s), binom_name("2n+2l1+2l2-2", top, s));
    total += term;
  }
  return divide_named(total, binom_general(-Rational(2) * lam2, n), binom_name("-2l2", -Rational(2) * lam2, n));
}

Rational cmz_t_closed(const Rational& kappa, const Rational& lam1, const Rational& lam2, unsigned n) {
  const Rational half(1, 2);
  Rational total;
  for (unsigned j = 0; 2 * j <= n; ++j) {
    const Rational num = binom_general(n, 2 * j) * binom_general(-half, j) *
                         binom_general(kappa - Rational(3, 2), j) * binom_general(half - kappa, j);
    Rational term = divide_named(num, binom_general(-lam1 - half, j), binom_name("-l1-1/2", -lam1 - half, j));
    term = divide_named(term, binom_general(-lam2 - half, j), binom_name("-l2-1/2", -lam2 - half, j));
    const Rational top = Rational(n) + lam1 + lam2 - Rational(3, 2);
    term = divide_named(term, binom_general(top, j), binom_name("n+l1+l2-3/2", top, j));
    total += term;
  }
  return pow(Rational(-1, 4), static_cast<long>(n)) * total;
}

}  // namespace rcb
