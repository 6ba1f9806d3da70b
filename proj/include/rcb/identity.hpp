#pragma once

#include <cstdint>
#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "rcb/racah.hpp"
#include "rcb/rational.hpp"
#include "rcb/report.hpp"

namespace rcb {

/// [[f1,f2]_k,f3]_{n-k} = sum_p U [f1,[f2,f3]_p]_{n-p} on every monomial
/// triple z^{m_i}, m_i <= max_deg.
VerificationReport verify_main_identity(const ParamTriple& params, unsigned n, unsigned k, unsigned max_deg);

/// [f1,[f2,f3]_p]_{n-p} = sum_k U-reverse [[f1,f2]_k,f3]_{n-k}.
VerificationReport verify_reverse_identity(const ParamTriple& params, unsigned n, unsigned p, unsigned max_deg);

/// The two three-term identities at orders (1,1) and (1,0), on monomials of
/// degree <= max_deg.
VerificationReport verify_classical(const ParamTriple& params, unsigned max_deg = 4);

/// Direct monomial evaluation of the four-form identity
/// [[[f1,f2]_0,f3]_0,f4]_1 + [[[f2,f3]_0,f4]_0,f1]_1 + [[[f4,f3]_0,f1]_0,f2]_1 + [[[f4,f1]_0,f2]_0,f3]_1 = 0.
VerificationReport verify_four_form(const std::vector<Rational>& weights, unsigned max_deg = 3);

/// Trivariate Jacobi convolution with homogenized two-variable Jacobi forms.
VerificationReport verify_convolution(const ParamTriple& params, unsigned n, unsigned k);

/// Intertwiner-level convolution applied to Q = t^m, m <= max_deg.
VerificationReport verify_operator_convolution(const ParamTriple& params, unsigned n, unsigned k, unsigned max_deg);

/// Both sides of the operator convolution as polynomials in (x, y, z) for a
/// polynomial Q in one variable.
Poly operator_convolution_lhs(const ParamTriple& params, unsigned n, unsigned k, const Poly& q);
Poly operator_convolution_rhs(const ParamTriple& params, unsigned n, unsigned k, const Poly& q);

/// Adjoint of an intertwiner acting on the tensor slots (a, b) of `poly`:
/// the Jacobi form at (d_a, d_b), then a = b = target.
Poly adjoint_in_slots(unsigned ell, const Rational& lam1, const Rational& lam2, const Poly& poly, Var a, Var b,
                      Var target);

enum class ZagierReading { PrintedIndex, CorrectedIndex };

/// The double-bracket sum weighted by c_k(l1,l2;x,y) c_{n-k}(l1+l2+2k,l3;x+y,t),
/// forms f_i = z^{m_i}, dual variables (x, y, t) for the three slots.
/// Factorials are read as Gamma functions; the constant
/// Gamma(S)/(Gamma(l1)Gamma(l2)Gamma(l3)), S = l1+l2+l3, is symmetric and is
/// divided out, which leaves Pochhammer ratios only. The k = 0 factor
/// (l1+l2-1) Gamma(l1+l2-1) is taken as Gamma(l1+l2).
Poly zagier_expression(const ParamTriple& params, unsigned n, const std::vector<unsigned>& degrees,
                       ZagierReading reading);

/// Report-only: invariance under a three-cycle and a transposition of the
/// (weight, form, dual variable) triplets.
VerificationReport verify_zagier_invariance(const ParamTriple& params, unsigned n, ZagierReading reading,
                                            unsigned max_deg = 2);

/// Recovers U^{l1,l2;k}_{l3;n,p}, p = 0..n, by solving the overdetermined
/// linear system relating both bracketings on monomial triples. Returns
/// nullopt when the system stays singular or is inconsistent.
std::optional<std::vector<Rational>> recover_u_by_solve(const ParamTriple& params, unsigned n, unsigned k);

/// Compares recover_u_by_solve with u_coefficient for all k, p.
VerificationReport verify_u_recovery(const ParamTriple& params, unsigned n);

/// Report-only CMZ checks for one weight triple, one report per kappa and
/// check: "cmz-forms" (sum vs closed form, n <= 6) and the kappa-family Racah
/// identity with t evaluated at the weights as given ("cmz-racah-printed") or
/// at halved weights ("cmz-racah-halved").
std::vector<VerificationReport> verify_cmz(const ParamTriple& params, const std::vector<Rational>& kappas,
                                           unsigned max_n);

/// Evaluates fn(i) for i in [0, count) on worker threads; results keep index order.
template <class T>
std::vector<T> parallel_map(std::size_t count, unsigned threads, const std::function<T(std::size_t)>& fn) {
  std::vector<std::optional<T>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  std::vector<T> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

}  // namespace rcb
