#pragma once

#include <string>
#include <vector>

#include "rcb/poly.hpp"
#include "rcb/rational.hpp"

namespace rcb {

/// Weights (lam1, lam2, lam3) of three forms.
struct ParamTriple {
  Rational lam1;
  Rational lam2;
  Rational lam3;

  /// lam_i, lam1+lam2, lam2+lam3 and lam1+lam2+lam3 all outside {0, -1, -2, ...}.
  bool admissible() const;
  /// Throws Inadmissible naming the first offending combination.
  void require_admissible() const;
  ParamTriple swapped13() const { return {lam3, lam2, lam1}; }
  std::string str() const;

  friend bool operator==(const ParamTriple&, const ParamTriple&) = default;
};

struct RacahQuery {
  unsigned n = 0;
  unsigned k = 0;
  unsigned p = 0;

  /// Throws InvalidArgument unless k, p <= n.
  void validate() const;
};

/// Transition coefficient U^{l1,l2;k}_{l3;n,p}:
///   C(n,k) (l2)_k (l3)_{n-k} (S+n-1)_p / [(l3)_p (l2+l3+p-1)_p (l2+l3+2p)_{n-p}] * R_{p,k}
/// with S = l1+l2+l3.
Rational u_coefficient(const ParamTriple& params, const RacahQuery& q);

/// Reverse family: U with (l1, k) and (l3, p) exchanged.
Rational u_reverse(const ParamTriple& params, const RacahQuery& q);

/// Reverse family from its own closed form
///   C(n,p) (l2)_p (l1)_{n-p} (S+n-1)_k / [(l1)_k (l1+l2+k-1)_k (l1+l2+2k)_{n-k}] * R
/// where R is the Racah value of the swapped triple at (k, p).
Rational u_reverse_closed(const ParamTriple& params, const RacahQuery& q);

/// sum_k U^{l1,l2;k}_{l3;n,p} t^k as prefactor * 2F1 * 2F1 in t.
Poly u_generating_poly(const ParamTriple& params, unsigned n, unsigned p);

/// m[k][p] = U^{l1,l2;k}_{l3;n,p}.
std::vector<std::vector<Rational>> u_matrix(const ParamTriple& params, unsigned n);
/// m[p][k] = reverse coefficient at (n, k, p).
std::vector<std::vector<Rational>> u_reverse_matrix(const ParamTriple& params, unsigned n);

/// The double-binomial sum for t_n^kappa(l1, l2).
Rational cmz_t_sum(const Rational& kappa, const Rational& lam1, const Rational& lam2, unsigned n);
/// (-1/4)^n sum_j C(n,2j) * binomial ratio, the conjectured closed form.
Rational cmz_t_closed(const Rational& kappa, const Rational& lam1, const Rational& lam2, unsigned n);

}  // namespace rcb
