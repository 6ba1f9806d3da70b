#pragma once

#include <vector>

#include "rcb/poly.hpp"
#include "rcb/rational.hpp"

namespace rcb {

/// Parameters of a terminating generalized hypergeometric series pFq.
struct HypSpec {
  std::vector<Rational> top;
  std::vector<Rational> bottom;
};

/// T = min{-a : a in top, a a nonpositive integer}, the index after which every
/// term vanishes. Throws NonTerminating when no top entry qualifies and
/// BottomPole when (b)_j vanishes for some bottom b and j <= T.
unsigned termination_index(const HypSpec& spec);

/// sum_{j=0}^{T} prod (top)_j / prod (bottom)_j * var^j / j!, as a polynomial
/// in `var`.
Poly hyp_terminating_poly(const HypSpec& spec, Var var = Var::t);

/// The same series evaluated at argument 1, summed directly.
Rational hyp_terminating_at_one(const HypSpec& spec);

struct JacobiParams {
  Rational alpha;
  Rational beta;
  unsigned ell = 0;

  /// alpha, beta not negative integers and alpha + beta + 1 not a negative
  /// integer: then P_ell has exact degree ell and {P_ell} is a basis.
  bool basis_admissible() const;
};

/// P_ell^{(alpha,beta)}(v) from the explicit (1-v)^s (1+v)^{ell-s} sum.
Poly jacobi_poly(const JacobiParams& params);

/// P_ell^{(alpha,beta)}(v) from its 2F1 representation
/// (alpha+1)_ell/ell! * 2F1(-ell, ell+alpha+beta+1; alpha+1; (1-v)/2).
Poly jacobi_poly_hypergeometric(const JacobiParams& params);

/// Homogeneous two-variable Jacobi form in (x, y):
/// sum_s (-1)^s C(ell+lam1-1, ell-s) C(ell+lam2-1, s) x^s y^(ell-s).
Poly jacobi_two_var(unsigned ell, const Rational& lam1, const Rational& lam2);

/// Jacobi differential operator (1-v^2) p'' + (beta - alpha - (alpha+beta+2) v) p'
/// acting on a polynomial in v; P_ell^{(alpha,beta)} has eigenvalue
/// -ell(ell+alpha+beta+1).
Poly jacobi_operator(const Rational& alpha, const Rational& beta, const Poly& p);

/// Racah value R_{p,k}: the terminating 4F3 at argument 1 with top
/// (-p, p+lam2+lam3-1, -k, k+lam1+lam2-1) and bottom
/// (lam2, lam1+lam2+lam3+n-1, -n).
Rational racah_value(unsigned p, unsigned k, unsigned n, const Rational& lam1,
                     const Rational& lam2, const Rational& lam3);

}  // namespace rcb
