#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rcb/racah.hpp"
#include "rcb/rational.hpp"
#include "rcb/report.hpp"

namespace rcb {

struct SuiteConfig {
  std::uint64_t seed = 42;
  std::size_t sample_count = 20;
  unsigned max_n = 5;
  unsigned max_degree = 3;
  unsigned hbar_order = 6;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Sum over k of U at every p <= n <= max_n.
VerificationReport verify_sum_to_one(const ParamTriple& params, unsigned max_n);
/// Coefficients of u_generating_poly against u_coefficient, and its value at t = 1.
VerificationReport verify_generating(const ParamTriple& params, unsigned max_n);
/// [U][U-reverse] and [U-reverse][U] against the identity matrix.
VerificationReport verify_inverse(const ParamTriple& params, unsigned max_n);

/// Phi-tilde_ell commutes with H, E, F between the tensor product and the
/// lowest-weight module of weight l1+l2+2 ell (ell <= max_ell, Q = x^m, m <= max_deg).
VerificationReport verify_intertwiner(const Rational& lam1, const Rational& lam2, unsigned max_ell = 3,
                                      unsigned max_deg = 4);
/// The Fischer adjoint of Phi-tilde_ell on x^a y^b (a+b <= max_total) is the
/// RC bracket [z^a, z^b]_ell, and <Phi-tilde Q, P> = <Q, Phi-tilde^dagger P>.
VerificationReport verify_adjoint(const Rational& lam1, const Rational& lam2, unsigned max_ell = 4,
                                  unsigned max_total = 6);
/// C acts on t^ell Q(t) P_ell(v) by mu_ell (ell <= max_ell, deg Q <= max_deg);
/// mu_0..mu_8 pairwise distinct.
VerificationReport verify_casimir(const Rational& lam1, const Rational& lam2, unsigned max_ell = 4,
                                  unsigned max_deg = 3);

/// Associativity defect of the star product on z^a, z^b, z^c (degrees <= max_deg)
/// and the unit property of the constant 1.
VerificationReport verify_star(const ParamTriple& params, unsigned truncation, unsigned max_deg);

/// Report-only, one report per p: the displayed closed forms of
/// U^{l1,l2;1}_{l3;2,p} against the solved and the formula values.
std::vector<VerificationReport> verify_worked_example(const ParamTriple& params);

/// Suite names: main, reverse, classical, convolution, operator, verma,
/// zagier, oracle, sum-to-one, generating, inverse, cmz, star, rewriter, all.
std::vector<std::string> suite_names();

/// Runs one suite over the default samples; "all" runs every suite. One
/// merged report per identity, in a fixed order. Throws InvalidArgument for
/// an unknown name.
std::vector<VerificationReport> run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace rcb
