#include "rcb/identity.hpp"

#include <array>

#include "rcb/bracket.hpp"
#include "rcb/error.hpp"
#include "rcb/specfun.hpp"
#include "rcb/verma.hpp"

namespace rcb {

namespace {

const VarSet kZ{Var::z};
const VarSet kXYZ{Var::z, Var::x, Var::y};

WeightedForm mono(const Rational& weight, unsigned m) { return {weight, Poly::power(Var::z, m)}; }

std::string idx(std::initializer_list<std::pair<const char*, unsigned>> items, const std::vector<unsigned>& m) {
  std::string out;
  for (const auto& [name, value] : items) out += std::string(name) + "=" + std::to_string(value) + ",";
  out += "m=(";
  for (std::size_t i = 0; i < m.size(); ++i) out += (i ? "," : "") + std::to_string(m[i]);
  return out + ")";
}

template <class Fn>
void for_each_triple(unsigned max_deg, Fn&& fn) {
  for (unsigned a = 0; a <= max_deg; ++a) {
    for (unsigned b = 0; b <= max_deg; ++b) {
      for (unsigned c = 0; c <= max_deg; ++c) fn(std::vector<unsigned>{a, b, c});
    }
  }
}

VerificationReport fresh(const std::string& id, const std::string& sample) {
  VerificationReport r;
  r.identity_id = id;
  r.parameter_samples.push_back(sample);
  return r;
}

Poly left_nested(const ParamTriple& t, const std::vector<unsigned>& m, unsigned n, unsigned k) {
  return rc_bracket(rc_bracket(mono(t.lam1, m[0]), mono(t.lam2, m[1]), k), mono(t.lam3, m[2]), n - k).form;
}

Poly right_nested(const ParamTriple& t, const std::vector<unsigned>& m, unsigned n, unsigned p) {
  return rc_bracket(mono(t.lam1, m[0]), rc_bracket(mono(t.lam2, m[1]), mono(t.lam3, m[2]), p), n - p).form;
}

/// jacobi_two_var(ell, l1, l2) evaluated at (a, b).
Poly jacobi_at(unsigned ell, const Rational& l1, const Rational& l2, const Poly& a, const Poly& b) {
  return jacobi_two_var(ell, l1, l2).subst({{Var::x, a}, {Var::y, b}});
}

}  // namespace

// ------------------------------------------------------------ main / reverse

VerificationReport verify_main_identity(const ParamTriple& params, unsigned n, unsigned k, unsigned max_deg) {
  params.require_admissible();
  RacahQuery{n, k, 0}.validate();
  VerificationReport report = fresh("main", params.str());
  std::vector<Rational> u(n + 1);
  for (unsigned p = 0; p <= n; ++p) u[p] = u_coefficient(params, {n, k, p});
  for_each_triple(max_deg, [&](const std::vector<unsigned>& m) {
    const Poly lhs = left_nested(params, m, n, k);
    Poly rhs(kZ);
    for (unsigned p = 0; p <= n; ++p) {
      if (!u[p].is_zero()) rhs += right_nested(params, m, n, p) * u[p];
    }
    report.check(lhs == rhs, params.str(), idx({{"n", n}, {"k", k}}, m), lhs.str(), rhs.str());
  });
  return report;
}

VerificationReport verify_reverse_identity(const ParamTriple& params, unsigned n, unsigned p, unsigned max_deg) {
  params.require_admissible();
  RacahQuery{n, 0, p}.validate();
  VerificationReport report = fresh("reverse", params.str());
  std::vector<Rational> w(n + 1);
  for (unsigned k = 0; k <= n; ++k) w[k] = u_reverse(params, {n, k, p});
  for_each_triple(max_deg, [&](const std::vector<unsigned>& m) {
    const Poly lhs = right_nested(params, m, n, p);
    Poly rhs(kZ);
    for (unsigned k = 0; k <= n; ++k) {
      if (!w[k].is_zero()) rhs += left_nested(params, m, n, k) * w[k];
    }
    report.check(lhs == rhs, params.str(), idx({{"n", n}, {"p", p}}, m), lhs.str(), rhs.str());
  });
  return report;
}

// ----------------------------------------------------------------- classical

VerificationReport verify_classical(const ParamTriple& params, unsigned max_deg) {
  params.require_admissible();
  VerificationReport report = fresh("classical", params.str());
  const auto& [l1, l2, l3] = params;
  for_each_triple(max_deg, [&](const std::vector<unsigned>& m) {
    const WeightedForm f1 = mono(l1, m[0]), f2 = mono(l2, m[1]), f3 = mono(l3, m[2]);
    const auto br = [](const WeightedForm& a, const WeightedForm& b, const WeightedForm& c, unsigned i, unsigned j) {
      return rc_bracket(rc_bracket(a, b, i), c, j).form;
    };
    const Poly first = br(f1, f2, f3, 1, 1) + br(f2, f3, f1, 1, 1) + br(f3, f1, f2, 1, 1);
    report.check(first.is_zero(), params.str(), idx({{"orders", 11}}, m), first.str(), "0");
    const Poly second = br(f1, f2, f3, 1, 0) * l3 + br(f2, f3, f1, 1, 0) * l1 + br(f3, f1, f2, 1, 0) * l2;
    report.check(second.is_zero(), params.str(), idx({{"orders", 10}}, m), second.str(), "0");
  });
  return report;
}

VerificationReport verify_four_form(const std::vector<Rational>& w, unsigned max_deg) {
  if (w.size() != 4) throw Error(ErrorKind::InvalidArgument, "four weights expected");
  std::string sample = "(";
  for (std::size_t i = 0; i < 4; ++i) sample += (i ? "," : "") + w[i].str();
  sample += ")";
  VerificationReport report = fresh("four-form", sample);
  for (unsigned a = 0; a <= max_deg; ++a) {
    for (unsigned b = 0; b <= max_deg; ++b) {
      for (unsigned c = 0; c <= max_deg; ++c) {
        for (unsigned d = 0; d <= max_deg; ++d) {
          const WeightedForm f[] = {mono(w[0], a), mono(w[1], b), mono(w[2], c), mono(w[3], d)};
          const auto t = [&](int i, int j, int k, int l) {
            return rc_bracket(rc_bracket(rc_bracket(f[i], f[j], 0), f[k], 0), f[l], 1).form;
          };
          const Poly sum = t(0, 1, 2, 3) + t(1, 2, 3, 0) + t(3, 2, 0, 1) + t(3, 0, 1, 2);
          report.check(sum.is_zero(), sample, idx({}, {a, b, c, d}), sum.str(), "0");
        }
      }
    }
  }
  return report;
}

// --------------------------------------------------------------- convolution

VerificationReport verify_convolution(const ParamTriple& params, unsigned n, unsigned k) {
  params.require_admissible();
  RacahQuery{n, k, 0}.validate();
  VerificationReport report = fresh("convolution", params.str());
  const auto& [l1, l2, l3] = params;
  const Poly x = Poly::variable(kXYZ, Var::x), y = Poly::variable(kXYZ, Var::y), z = Poly::variable(kXYZ, Var::z);
  const Poly lhs = jacobi_at(n - k, l1 + l2 + Rational(2 * k), l3, x + y, z) * jacobi_at(k, l1, l2, x, y);
  Poly rhs(kXYZ);
  for (unsigned p = 0; p <= n; ++p) {
    const Rational u = u_coefficient(params, {n, k, p});
    if (u.is_zero()) continue;
    rhs += jacobi_at(n - p, l1, l2 + l3 + Rational(2 * p), x, y + z) * jacobi_at(p, l2, l3, y, z) * u;
  }
  report.check(lhs == rhs, params.str(), idx({{"n", n}, {"k", k}}, {}), lhs.str(), rhs.str());
  return report;
}

namespace {

Poly as_x_poly(const Poly& q) {
  Var u = Var::x;
  for (Var var : q.vars().vars()) {
    if (q.degree_in(var) > 0) u = var;
  }
  const Poly one_var = q.restrict_to(VarSet{u});
  return one_var.subst({{u, Poly::variable(VarSet{Var::x}, Var::x)}});
}

}  // namespace

Poly operator_convolution_lhs(const ParamTriple& params, unsigned n, unsigned k, const Poly& q) {
  const auto& [l1, l2, l3] = params;
  const Poly first = phi_tilde_in_slot(n - k, l1 + l2 + Rational(2 * k), l3, as_x_poly(q), Var::x, Var::x, Var::z);
  return phi_tilde_in_slot(k, l1, l2, first, Var::x, Var::x, Var::y).restrict_to(kXYZ);
}

Poly operator_convolution_rhs(const ParamTriple& params, unsigned n, unsigned k, const Poly& q) {
  const auto& [l1, l2, l3] = params;
  Poly out(kXYZ);
  for (unsigned p = 0; p <= n; ++p) {
    const Rational u = u_coefficient(params, {n, k, p});
    if (u.is_zero()) continue;
    const Poly first = phi_tilde_in_slot(n - p, l1, l2 + l3 + Rational(2 * p), as_x_poly(q), Var::x, Var::x, Var::y);
    out += phi_tilde_in_slot(p, l2, l3, first, Var::y, Var::y, Var::z).restrict_to(kXYZ) * u;
  }
  return out;
}

VerificationReport verify_operator_convolution(const ParamTriple& params, unsigned n, unsigned k, unsigned max_deg) {
  params.require_admissible();
  RacahQuery{n, k, 0}.validate();
  VerificationReport report = fresh("operator", params.str());
  for (unsigned m = 0; m <= max_deg; ++m) {
    const Poly q = Poly::power(Var::t, m);
    const Poly lhs = operator_convolution_lhs(params, n, k, q);
    const Poly rhs = operator_convolution_rhs(params, n, k, q);
    report.check(lhs == rhs, params.str(), idx({{"n", n}, {"k", k}, {"deg", m}}, {}), lhs.str(), rhs.str());
  }
  return report;
}

Poly adjoint_in_slots(unsigned ell, const Rational& lam1, const Rational& lam2, const Poly& poly, Var a, Var b,
                      Var target) {
  const Poly q = poly.embed(poly.vars().with(a).with(b));
  Poly applied(q.vars());
  const Poly jac = jacobi_two_var(ell, lam1, lam2);
  for (const auto& [exps, c] : jac.terms()) {
    applied += q.diff(a, exps[0]).diff(b, exps[1]) * c;
  }
  const VarSet out = q.vars().without(a).without(b).with(target);
  const Poly tv = Poly::variable(out, target);
  return applied.subst({{a, tv}, {b, tv}});
}

// -------------------------------------------------------------------- Zagier

namespace {

/// c_k / [Gamma(a+b) / (Gamma(a) Gamma(b))] without its polynomial part.
Rational zagier_scalar(unsigned k, const Rational& a, const Rational& b) {
  if (k == 0) return 1;
  return (Rational(2 * k) + a + b - 1) * factorial(k) * pochhammer(a + b, k - 1) /
         (pochhammer(a, k) * pochhammer(b, k));
}

const VarSet kZXYT{Var::z, Var::x, Var::y, Var::t};

Poly zagier_sum(const std::array<Rational, 3>& lam, const std::array<unsigned, 3>& deg,
                const std::array<Var, 3>& dual, unsigned n, ZagierReading reading) {
  const Poly X = Poly::variable(kZXYT, dual[0]), Y = Poly::variable(kZXYT, dual[1]), T = Poly::variable(kZXYT, dual[2]);
  const Rational s = lam[0] + lam[1] + lam[2];
  Poly total(kZXYT);
  for (unsigned k = 0; k <= n; ++k) {
    const Rational outer = lam[0] + lam[1] + Rational(2 * k);
    const unsigned inner_deg = reading == ZagierReading::PrintedIndex ? n : k;
    const unsigned outer_deg = reading == ZagierReading::PrintedIndex ? n : n - k;
    const Rational scalar = zagier_scalar(k, lam[0], lam[1]) * zagier_scalar(n - k, outer, lam[2]) *
                            pochhammer(s, 2 * k) / pochhammer(lam[0] + lam[1], 2 * k);
    const Poly weights =
        jacobi_at(inner_deg, lam[0], lam[1], X, Y) * jacobi_at(outer_deg, outer, lam[2], X + Y, T);
    const Poly bracket = rc_bracket(rc_bracket(mono(lam[0], deg[0]), mono(lam[1], deg[1]), k),
                                    mono(lam[2], deg[2]), n - k)
                             .form.embed(kZXYT);
    total += weights * bracket * scalar;
  }
  return total;
}

}  // namespace

Poly zagier_expression(const ParamTriple& params, unsigned n, const std::vector<unsigned>& degrees,
                       ZagierReading reading) {
  if (degrees.size() != 3) throw Error(ErrorKind::InvalidArgument, "three degrees expected");
  return zagier_sum({params.lam1, params.lam2, params.lam3}, {degrees[0], degrees[1], degrees[2]},
                    {Var::x, Var::y, Var::t}, n, reading);
}

VerificationReport verify_zagier_invariance(const ParamTriple& params, unsigned n, ZagierReading reading,
                                            unsigned max_deg) {
  params.require_admissible();
  const char* name = reading == ZagierReading::PrintedIndex ? "zagier-printed" : "zagier-corrected";
  VerificationReport report = fresh(name, params.str());
  report.report_only = true;
  const std::array<Rational, 3> lam{params.lam1, params.lam2, params.lam3};
  const std::array<Var, 3> dual{Var::x, Var::y, Var::t};
  // slot i of the permuted expression holds triplet perm[i]
  const std::array<std::pair<const char*, std::array<int, 3>>, 2> perms{{{"cycle", {1, 2, 0}}, {"swap12", {1, 0, 2}}}};
  for_each_triple(max_deg, [&](const std::vector<unsigned>& m) {
    const std::array<unsigned, 3> deg{m[0], m[1], m[2]};
    const Poly base = zagier_sum(lam, deg, dual, n, reading);
    for (const auto& [pname, perm] : perms) {
      const Poly moved = zagier_sum({lam[perm[0]], lam[perm[1]], lam[perm[2]]},
                                    {deg[perm[0]], deg[perm[1]], deg[perm[2]]},
                                    {dual[perm[0]], dual[perm[1]], dual[perm[2]]}, n, reading);
      report.check(base == moved, params.str(), std::string(pname) + "," + idx({{"n", n}}, m), base.str(),
                   moved.str());
    }
  });
  return report;
}

// ---------------------------------------------------------- oracle by solve

namespace {

/// Solves rows * u = rhs exactly; returns nullopt unless the solution is
/// unique and satisfies every row.
std::optional<std::vector<Rational>> solve_overdetermined(std::vector<std::vector<Rational>> rows, std::size_t unknowns) {
  const std::vector<std::vector<Rational>> original = rows;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < unknowns && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const Rational inv = Rational(1) / rows[rank][col];
    for (auto& v : rows[rank]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const Rational f = rows[r][col];
      for (std::size_t c = col; c <= unknowns; ++c) rows[r][c] -= f * rows[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (rank < unknowns) return std::nullopt;
  std::vector<Rational> u(unknowns);
  for (std::size_t r = 0; r < rank; ++r) u[pivot_col[r]] = rows[r][unknowns];
  for (const auto& row : original) {
    Rational acc;
    for (std::size_t c = 0; c < unknowns; ++c) acc += row[c] * u[c];
    if (acc != row[unknowns]) return std::nullopt;
  }
  return u;
}

}  // namespace

std::optional<std::vector<Rational>> recover_u_by_solve(const ParamTriple& params, unsigned n, unsigned k) {
  params.require_admissible();
  RacahQuery{n, k, 0}.validate();
  for (unsigned m = n, attempt = 0; attempt <= 3; ++m, ++attempt) {
    std::vector<std::vector<Rational>> rows;
    for_each_triple(m, [&](const std::vector<unsigned>& deg) {
      const unsigned total = deg[0] + deg[1] + deg[2];
      if (total < n) return;
      const unsigned e = total - n;
      std::vector<Rational> row;
      for (unsigned p = 0; p <= n; ++p) row.push_back(right_nested(params, deg, n, p).coefficient_of_power(e));
      row.push_back(left_nested(params, deg, n, k).coefficient_of_power(e));
      rows.push_back(std::move(row));
    });
    if (auto u = solve_overdetermined(std::move(rows), n + 1)) return u;
  }
  return std::nullopt;
}

VerificationReport verify_u_recovery(const ParamTriple& params, unsigned n) {
  VerificationReport report = fresh("oracle", params.str());
  for (unsigned k = 0; k <= n; ++k) {
    const auto solved = recover_u_by_solve(params, n, k);
    for (unsigned p = 0; p <= n; ++p) {
      const Rational formula = u_coefficient(params, {n, k, p});
      const std::string got = solved ? (*solved)[p].str() : "unsolvable";
      report.check(solved && (*solved)[p] == formula, params.str(),
                   "n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",p=" + std::to_string(p), got,
                   formula.str());
    }
  }
  return report;
}

// ----------------------------------------------------------------------- CMZ

std::vector<VerificationReport> verify_cmz(const ParamTriple& params, const std::vector<Rational>& kappas,
                                           unsigned max_n) {
  const auto& [l1, l2, l3] = params;
  std::vector<VerificationReport> out;
  for (const Rational& kappa : kappas) {
    const std::string tag = "kappa=" + kappa.str();
    VerificationReport forms = fresh("cmz-forms " + tag, params.str());
    forms.report_only = true;
    for (unsigned n = 0; n <= 6; ++n) {
      try {
        const Rational a = cmz_t_sum(kappa, l1, l2, n), b = cmz_t_closed(kappa, l1, l2, n);
        forms.check(a == b, params.str(), "n=" + std::to_string(n), a.str(), b.str());
      } catch (const Error& e) {
        forms.findings.push_back(tag + " n=" + std::to_string(n) + " at " + params.str() + ": " + e.what());
      }
    }
    out.push_back(std::move(forms));

    for (const bool halved : {false, true}) {
      VerificationReport racah =
          fresh(std::string(halved ? "cmz-racah-halved " : "cmz-racah-printed ") + tag, params.str());
      racah.report_only = true;
      const Rational scale = halved ? Rational(1, 2) : Rational(1);
      const auto t = [&](const Rational& a, const Rational& b, unsigned n) {
        return cmz_t_closed(kappa, a * scale, b * scale, n);
      };
      for (unsigned n = 0; n <= max_n; ++n) {
        for (unsigned p = 0; p <= n; ++p) {
          try {
            Rational lhs;
            for (unsigned k = 0; k <= n; ++k) {
              lhs += u_coefficient(params, {n, k, p}) * t(l1, l2, k) * t(l1 + l2 + Rational(2 * k), l3, n - k);
            }
            const Rational rhs = t(l2, l3, p) * t(l1, l2 + l3 + Rational(2 * p), n - p);
            racah.check(lhs == rhs, params.str(), "n=" + std::to_string(n) + ",p=" + std::to_string(p), lhs.str(),
                        rhs.str());
          } catch (const Error& e) {
            racah.findings.push_back(tag + " n=" + std::to_string(n) + " at " + params.str() + ": " + e.what());
          }
        }
      }
      out.push_back(std::move(racah));
    }
  }
  return out;
}

}  // namespace rcb
