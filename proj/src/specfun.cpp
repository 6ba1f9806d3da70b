#include "rcb/specfun.hpp"

#include <limits>
#include <optional>

#include "rcb/error.hpp"

namespace rcb {

unsigned termination_index(const HypSpec& spec) {
  std::optional<unsigned long> terminating;
  for (const Rational& a : spec.top) {
    if (!a.is_nonpositive_integer()) continue;
    const auto value = a.to_long();
    if (!value) continue;
    const auto steps = static_cast<unsigned long>(-*value);
    if (!terminating || steps < *terminating) terminating = steps;
  }
  if (!terminating) {
    throw Error(ErrorKind::NonTerminating, "no nonpositive-integer top parameter");
  }
  if (*terminating > std::numeric_limits<unsigned>::max() / 2) {
    throw Error(ErrorKind::InvalidArgument, "termination index too large");
  }
  const auto T = static_cast<unsigned>(*terminating);
  // (b)_j for j <= T reads the factors b, b+1, ..., b+T-1.
  for (const Rational& b : spec.bottom) {
    if (!b.is_nonpositive_integer()) continue;
    const auto value = b.to_long();
    if (value && static_cast<unsigned long>(-*value) < T) {
      throw Error(ErrorKind::BottomPole,
                  "bottom parameter " + b.str() + " vanishes before termination at " + std::to_string(T));
    }
  }
  return T;
}

namespace {

// Term ratios of the series: coefficient of var^j.
std::vector<Rational> series_coefficients(const HypSpec& spec) {
  const unsigned T = termination_index(spec);
  std::vector<Rational> coeffs;
  coeffs.reserve(T + 1);
  Rational term(1);
  coeffs.push_back(term);
  for (unsigned j = 0; j < T; ++j) {
    for (const Rational& a : spec.top) term *= a + Rational(j);
    for (const Rational& b : spec.bottom) term /= b + Rational(j);
    term /= Rational(j + 1);
    coeffs.push_back(term);
  }
  return coeffs;
}

}  // namespace

Poly hyp_terminating_poly(const HypSpec& spec, Var var) {
  const std::vector<Rational> coeffs = series_coefficients(spec);
  Poly out{VarSet{var}};
  for (unsigned j = 0; j < coeffs.size(); ++j) out += Poly::power(var, j, coeffs[j]);
  return out;
}

Rational hyp_terminating_at_one(const HypSpec& spec) {
  Rational sum(0);
  for (const Rational& c : series_coefficients(spec)) sum += c;
  return sum;
}

bool JacobiParams::basis_admissible() const {
  const auto negative_integer = [](const Rational& r) { return r.is_integer() && r.sign() < 0; };
  return !negative_integer(alpha) && !negative_integer(beta) &&
         !negative_integer(alpha + beta + Rational(1));
}

Poly jacobi_poly(const JacobiParams& params) {
  const VarSet vs{Var::v};
  const Poly one_minus = Poly::constant(vs, 1) - Poly::variable(vs, Var::v);
  const Poly one_plus = Poly::constant(vs, 1) + Poly::variable(vs, Var::v);
  const unsigned ell = params.ell;
  Poly sum(vs);
  for (unsigned s = 0; s <= ell; ++s) {
    Rational c = binom_general(Rational(ell) + params.alpha, ell - s) *
                 binom_general(Rational(ell) + params.beta, s);
    if (s % 2 == 1) c = -c;
    sum += pow(one_minus, s) * pow(one_plus, ell - s) * c;
  }
  return sum * pow(Rational(2), -static_cast<long>(ell));
}

Poly jacobi_poly_hypergeometric(const JacobiParams& params) {
  const unsigned ell = params.ell;
  const HypSpec spec{{Rational(-static_cast<long>(ell)), Rational(ell) + params.alpha + params.beta + 1},
                     {params.alpha + 1}};
  const Poly series = hyp_terminating_poly(spec, Var::t);
  const VarSet vs{Var::v};
  const Poly argument = (Poly::constant(vs, 1) - Poly::variable(vs, Var::v)) * Rational(1, 2);
  const Rational prefactor = pochhammer(params.alpha + 1, ell) / factorial(ell);
  return series.subst({{Var::t, argument}}) * prefactor;
}

Poly jacobi_two_var(unsigned ell, const Rational& lam1, const Rational& lam2) {
  const VarSet vs{Var::x, Var::y};
  Poly out(vs);
  for (unsigned s = 0; s <= ell; ++s) {
    Rational c = binom_general(Rational(ell) + lam1 - 1, ell - s) * binom_general(Rational(ell) + lam2 - 1, s);
    if (s % 2 == 1) c = -c;
    out += Poly::monomial(vs, {s, ell - s}, c);
  }
  return out;
}

Poly jacobi_operator(const Rational& alpha, const Rational& beta, const Poly& p) {
  const VarSet vs{Var::v};
  const Poly q = p.restrict_to(vs);
  const Poly v = Poly::variable(vs, Var::v);
  const Poly one = Poly::constant(vs, 1);
  const Poly first_order = one * (beta - alpha) - v * (alpha + beta + 2);
  return (one - v * v) * q.diff(Var::v, 2) + first_order * q.diff(Var::v, 1);
}

Rational racah_value(unsigned p, unsigned k, unsigned n, const Rational& lam1, const Rational& lam2,
                     const Rational& lam3) {
  const Rational rp(p);
  const Rational rk(k);
  const HypSpec spec{{-rp, rp + lam2 + lam3 - 1, -rk, rk + lam1 + lam2 - 1},
                     {lam2, lam1 + lam2 + lam3 + Rational(n) - 1, -Rational(n)}};
  return hyp_terminating_at_one(spec);
}

}  // namespace rcb
