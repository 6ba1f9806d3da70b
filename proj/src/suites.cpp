#include "rcb/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "rcb/bracket.hpp"
#include "rcb/eholzer.hpp"
#include "rcb/error.hpp"
#include "rcb/identity.hpp"
#include "rcb/rewriter.hpp"
#include "rcb/samples.hpp"
#include "rcb/verma.hpp"

namespace rcb {

namespace {

using Reports = std::vector<VerificationReport>;

VerificationReport fresh(const std::string& id, const std::string& sample, bool report_only = false) {
  VerificationReport r;
  r.identity_id = id;
  r.parameter_samples.push_back(sample);
  r.report_only = report_only;
  return r;
}

std::string pair_str(const Rational& a, const Rational& b) { return "(" + a.str() + "," + b.str() + ")"; }

std::string tuple_str(const std::vector<Rational>& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + w[i].str();
  return out + ")";
}

std::string num(unsigned v) { return std::to_string(v); }

Poly zpow(unsigned e) { return Poly::power(Var::z, e); }

/// Merges reports by identity id, keeping first-appearance order.
Reports merge(const std::vector<Reports>& parts) {
  Reports out;
  std::map<std::string, std::size_t> index;
  for (const Reports& part : parts) {
    for (const VerificationReport& r : part) {
      const auto [it, inserted] = index.try_emplace(r.identity_id, out.size());
      if (inserted) {
        out.push_back(r);
      } else {
        out[it->second].absorb(r);
      }
    }
  }
  return out;
}

/// Runs fn for every sample on worker threads; a library error becomes a
/// failure of `id` instead of aborting the suite.
template <class Sample>
Reports per_sample(const std::string& id, const std::vector<Sample>& samples, const SuiteConfig& config,
                   const std::function<std::string(const Sample&)>& label,
                   const std::function<Reports(const Sample&)>& fn) {
  const auto parts = parallel_map<Reports>(samples.size(), config.threads, [&](std::size_t i) {
    try {
      return fn(samples[i]);
    } catch (const Error& e) {
      VerificationReport r = fresh(id, label(samples[i]));
      r.check(false, label(samples[i]), "error", std::string(to_string(e.kind())) + ": " + e.what(), "no error");
      return Reports{r};
    }
  });
  return merge(parts);
}

Reports per_triple(const std::string& id, const SuiteConfig& config, const std::function<Reports(const ParamTriple&)>& fn) {
  return per_sample<ParamTriple>(id, default_triples(config.seed, config.sample_count), config,
                                 [](const ParamTriple& t) { return t.str(); }, fn);
}

Reports per_tuple(const std::string& id, std::size_t arity, const SuiteConfig& config,
                  const std::function<Reports(const std::vector<Rational>&)>& fn) {
  return per_sample<std::vector<Rational>>(id, weight_tuples(arity, config.seed, config.sample_count), config,
                                           tuple_str, fn);
}

void add_summary(Reports& reports) {
  for (VerificationReport& r : reports) {
    if (!r.report_only) continue;
    r.findings.push_back("summary: " + std::to_string(r.instances_checked - r.failure_count) + "/" +
                         std::to_string(r.instances_checked) + " instances hold over " +
                         std::to_string(r.parameter_samples.size()) + " samples");
  }
}

// ---------------------------------------------------------------- suites

Reports suite_main(const SuiteConfig& c) {
  return per_triple("main", c, [&](const ParamTriple& t) {
    VerificationReport r = fresh("main", t.str());
    for (unsigned n = 0; n <= c.max_n; ++n) {
      for (unsigned k = 0; k <= n; ++k) r.absorb(verify_main_identity(t, n, k, c.max_degree));
    }
    return Reports{r};
  });
}

Reports suite_reverse(const SuiteConfig& c) {
  return per_triple("reverse", c, [&](const ParamTriple& t) {
    VerificationReport r = fresh("reverse", t.str());
    for (unsigned n = 0; n <= c.max_n; ++n) {
      for (unsigned p = 0; p <= n; ++p) r.absorb(verify_reverse_identity(t, n, p, c.max_degree));
    }
    return Reports{r};
  });
}

const std::vector<std::pair<std::string, std::string>>& cyclic_identity() {
  static const std::vector<std::pair<std::string, std::string>> terms = {
      {"1", "[[f1,f2]_1,f3]_1"}, {"1", "[[f2,f3]_1,f1]_1"}, {"1", "[[f3,f1]_1,f2]_1"}};
  return terms;
}

const std::vector<std::pair<std::string, std::string>>& weighted_identity() {
  static const std::vector<std::pair<std::string, std::string>> terms = {
      {"l3", "[[f1,f2]_1,f3]_0"}, {"l1", "[[f2,f3]_1,f1]_0"}, {"l2", "[[f3,f1]_1,f2]_0"}};
  return terms;
}

const std::vector<std::pair<std::string, std::string>>& four_form_identity() {
  static const std::vector<std::pair<std::string, std::string>> terms = {{"1", "[[[f1,f2]_0,f3]_0,f4]_1"},
                                                                         {"1", "[[[f2,f3]_0,f4]_0,f1]_1"},
                                                                         {"1", "[[[f4,f3]_0,f1]_0,f2]_1"},
                                                                         {"1", "[[[f4,f1]_0,f2]_0,f3]_1"}};
  return terms;
}

WeightAssignment assign(const std::vector<Rational>& w) {
  WeightAssignment out;
  for (std::size_t i = 0; i < w.size(); ++i) out[static_cast<unsigned>(i + 1)] = w[i];
  return out;
}

VerificationReport renamed(VerificationReport r, const std::string& id) {
  r.identity_id = id;
  return r;
}

Reports suite_classical(const SuiteConfig& c) {
  Reports three = per_tuple("classical", 3, c, [&](const std::vector<Rational>& w) {
    const WeightAssignment a = assign(w);
    VerificationReport rewritten = renamed(check_identity(cyclic_identity(), a), "classical-rewriter");
    rewritten.absorb(check_identity(weighted_identity(), a));
    return Reports{verify_classical({w[0], w[1], w[2]}, c.max_degree + 1), rewritten};
  });
  Reports four = per_tuple("four-form", 4, c, [&](const std::vector<Rational>& w) {
    return Reports{verify_four_form(w, c.max_degree), renamed(check_identity(four_form_identity(), assign(w)),
                                                              "four-form-rewriter")};
  });
  return merge({three, four});
}

Reports suite_convolution(const SuiteConfig& c) {
  return per_triple("convolution", c, [&](const ParamTriple& t) {
    VerificationReport r = fresh("convolution", t.str());
    for (unsigned n = 0; n <= std::min(c.max_n, 4U); ++n) {
      for (unsigned k = 0; k <= n; ++k) r.absorb(verify_convolution(t, n, k));
    }
    return Reports{r};
  });
}

Reports suite_operator(const SuiteConfig& c) {
  return per_triple("operator", c, [&](const ParamTriple& t) {
    VerificationReport r = fresh("operator", t.str());
    for (unsigned n = 0; n <= std::min(c.max_n, 3U); ++n) {
      for (unsigned k = 0; k <= n; ++k) r.absorb(verify_operator_convolution(t, n, k, c.max_degree));
    }
    return Reports{r};
  });
}

Reports suite_verma(const SuiteConfig& c) {
  return per_triple("intertwiner", c, [&](const ParamTriple& t) {
    return Reports{verify_intertwiner(t.lam1, t.lam2), verify_adjoint(t.lam1, t.lam2),
                   verify_casimir(t.lam1, t.lam2)};
  });
}

Reports suite_zagier(const SuiteConfig& c) {
  Reports out = per_triple("zagier", c, [&](const ParamTriple& t) {
    Reports parts;
    for (const auto reading : {ZagierReading::PrintedIndex, ZagierReading::CorrectedIndex}) {
      for (unsigned n = 0; n <= std::min(c.max_n, 2U); ++n) parts.push_back(verify_zagier_invariance(t, n, reading));
    }
    return parts;
  });
  add_summary(out);
  return out;
}

Reports suite_oracle(const SuiteConfig& c) {
  Reports out = per_triple("oracle", c, [&](const ParamTriple& t) {
    VerificationReport r = fresh("oracle", t.str());
    for (unsigned n = 0; n <= std::min(c.max_n, 3U); ++n) r.absorb(verify_u_recovery(t, n));
    Reports parts{r};
    for (VerificationReport& w : verify_worked_example(t)) parts.push_back(std::move(w));
    return parts;
  });
  add_summary(out);
  return out;
}

Reports suite_sum_to_one(const SuiteConfig& c) {
  return per_triple("sum-to-one", c, [&](const ParamTriple& t) { return Reports{verify_sum_to_one(t, std::max(c.max_n, 8U))}; });
}

Reports suite_generating(const SuiteConfig& c) {
  return per_triple("generating", c, [&](const ParamTriple& t) { return Reports{verify_generating(t, c.max_n)}; });
}

Reports suite_inverse(const SuiteConfig& c) {
  return per_triple("inverse", c,
                    [&](const ParamTriple& t) { return Reports{verify_inverse(t, std::min(c.max_n, 4U))}; });
}

const std::vector<Rational>& cmz_kappas() {
  static const std::vector<Rational> kappas = {Rational(1, 2), Rational(3, 2), Rational(5, 7), Rational(2),
                                               Rational(1, 3)};
  return kappas;
}

Reports suite_cmz(const SuiteConfig& c) {
  Reports out = per_triple("cmz", c, [&](const ParamTriple& t) {
    Reports parts = verify_cmz(t, cmz_kappas(), std::min(c.max_n, 4U));
    const unsigned truncation = std::min(c.hbar_order, 4U);
    for (const Rational& kappa : cmz_kappas()) {
      for (const CmzReading reading : {CmzReading::Printed, CmzReading::Halved}) {
        const std::string id = std::string(reading == CmzReading::Printed ? "cmz-star-printed" : "cmz-star-halved") +
                               " kappa=" + kappa.str();
        VerificationReport r = fresh(id, t.str(), true);
        for (unsigned a = 0; a <= 2; ++a) {
          for (unsigned b = 0; b <= 2; ++b) {
            const StarSeries d =
                assoc_defect_kappa({t.lam1, zpow(a)}, {t.lam2, zpow(b)}, {t.lam3, zpow(2)}, truncation, kappa, reading);
            r.check(d.is_zero(), t.str(), "N=" + num(truncation) + ",m=(" + num(a) + "," + num(b) + ",2)", d.str(),
                    "0");
          }
        }
        parts.push_back(std::move(r));
      }
    }
    return parts;
  });
  add_summary(out);
  return out;
}

Reports suite_star(const SuiteConfig& c) {
  return per_triple("eholzer-associativity", c,
                    [&](const ParamTriple& t) { return Reports{verify_star(t, c.hbar_order, c.max_degree)}; });
}

/// Random tree over a shuffled leaf set with orders summing to at most max_total.
BracketExpr random_tree(std::mt19937_64& rng, unsigned leaves, unsigned max_total) {
  const auto pick = [&](unsigned lo, unsigned hi) { return std::uniform_int_distribution<unsigned>(lo, hi)(rng); };
  std::vector<unsigned> slots(leaves);
  std::iota(slots.begin(), slots.end(), 1U);
  std::shuffle(slots.begin(), slots.end(), rng);
  unsigned budget = max_total;
  const std::function<BracketExpr(unsigned, unsigned)> build = [&](unsigned lo, unsigned hi) {
    if (hi - lo == 1) return BracketExpr::leaf(slots[lo]);
    const unsigned mid = pick(lo + 1, hi - 1);
    BracketExpr l = build(lo, mid);
    BracketExpr r = build(mid, hi);
    const unsigned k = pick(0, budget);
    budget -= k;
    return BracketExpr::node(std::move(l), std::move(r), k);
  };
  return build(0, leaves);
}

Poly eval_combo(const LinearCombo& combo, const std::map<unsigned, WeightedForm>& leaves) {
  Poly sum(VarSet{Var::z});
  for (const auto& [term, coeff] : combo.terms()) sum += eval_bracket_tree(term.to_expr(), leaves).form * coeff;
  return sum;
}

/// Expansions of the three terms of the cyclic identity in the basis [f1,[f2,f3]_p]_{2-p}.
VerificationReport rewriter_expansion(const std::vector<Rational>& w) {
  const std::string sample = tuple_str(w);
  VerificationReport r = fresh("rewriter-expansion", sample);
  const WeightAssignment a = assign(w);
  const ParamTriple t123{w[0], w[1], w[2]}, t132{w[0], w[2], w[1]};
  const auto basis = [](unsigned p) { return StandardTerm{{1, 2, 3}, {p, 2 - p}}; };
  LinearCombo first, second, third;
  for (unsigned p = 0; p <= 2; ++p) {
    first.add(basis(p), u_coefficient(t123, {2, 1, p}));
    third.add(basis(p), (p == 1 ? Rational(1) : Rational(-1)) * u_coefficient(t132, {2, 1, p}));
  }
  second.add(basis(1), -1);
  const std::pair<const char*, const LinearCombo*> cases[] = {
      {"[[f1,f2]_1,f3]_1", &first}, {"[[f2,f3]_1,f1]_1", &second}, {"[[f3,f1]_1,f2]_1", &third}};
  for (const auto& [expr, expected] : cases) {
    const LinearCombo got = to_standard(parse_bracket(expr), a);
    r.check(got == *expected, sample, expr, got.str(), expected->str());
  }
  return r;
}

Reports suite_rewriter(const SuiteConfig& c) {
  const auto samples = weight_tuples(5, c.seed, c.sample_count);
  std::vector<std::size_t> indices(samples.size());
  std::iota(indices.begin(), indices.end(), 0U);
  return per_sample<std::size_t>(
      "rewriter-semantics", indices, c, [&](const std::size_t& i) { return tuple_str(samples[i]); },
      [&](const std::size_t& i) {
        const std::vector<Rational>& w = samples[i];
        const std::string sample = tuple_str(w);
        const WeightAssignment weights = assign(w);
        std::mt19937_64 rng(c.seed + i);
        VerificationReport semantics = fresh("rewriter-semantics", sample);
        VerificationReport confluence = fresh("rewriter-confluence", sample);
        VerificationReport roundtrip = fresh("rewriter-roundtrip", sample);
        for (int trial = 0; trial < 4; ++trial) {
          const unsigned leaves = 2 + static_cast<unsigned>(rng() % 4);
          const BracketExpr expr = random_tree(rng, leaves, 3);
          const LinearCombo normal = to_standard(expr, weights);
          for (const RewriteStrategy s : {RewriteStrategy::LeftmostInnermost, RewriteStrategy::RightmostInnermost,
                                          RewriteStrategy::FlipAndReassociate}) {
            const LinearCombo other = to_standard(expr, weights, s);
            confluence.check(other == normal, sample, expr.str(), other.str(), normal.str());
          }
          for (const auto& [term, coeff] : normal.terms()) {
            LinearCombo single;
            single.add(term, 1);
            const LinearCombo back = to_standard(term.to_expr(), weights);
            roundtrip.check(back == single, sample, term.to_expr().str(), back.str(), single.str());
          }
          if (leaves > 4) continue;
          const unsigned top = leaves == 4 ? 2 : 3;
          std::vector<unsigned> deg(leaves, 0);
          while (true) {
            std::map<unsigned, WeightedForm> forms;
            for (unsigned j = 0; j < leaves; ++j) forms[j + 1] = {w[j], zpow(deg[j])};
            const Poly lhs = eval_bracket_tree(expr, forms).form;
            const Poly rhs = eval_combo(normal, forms);
            std::string idx = expr.str() + ",m=(";
            for (unsigned j = 0; j < leaves; ++j) idx += (j ? "," : "") + num(deg[j]);
            semantics.check(lhs == rhs, sample, idx + ")", lhs.str(), rhs.str());
            unsigned j = 0;
            while (j < leaves && deg[j] == top) deg[j++] = 0;
            if (j == leaves) break;
            ++deg[j];
          }
        }
        return Reports{semantics, confluence, roundtrip, rewriter_expansion({w[0], w[1], w[2]})};
      });
}

using SuiteFn = Reports (*)(const SuiteConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"main", suite_main},
      {"reverse", suite_reverse},
      {"classical", suite_classical},
      {"convolution", suite_convolution},
      {"operator", suite_operator},
      {"verma", suite_verma},
      {"zagier", suite_zagier},
      {"oracle", suite_oracle},
      {"sum-to-one", suite_sum_to_one},
      {"generating", suite_generating},
      {"inverse", suite_inverse},
      {"cmz", suite_cmz},
      {"star", suite_star},
      {"rewriter", suite_rewriter},
  };
  return suites;
}

}  // namespace

// ------------------------------------------------------- single-sample checks

VerificationReport verify_sum_to_one(const ParamTriple& params, unsigned max_n) {
  VerificationReport r = fresh("sum-to-one", params.str());
  for (unsigned n = 0; n <= max_n; ++n) {
    for (unsigned p = 0; p <= n; ++p) {
      Rational sum;
      for (unsigned k = 0; k <= n; ++k) sum += u_coefficient(params, {n, k, p});
      r.check(sum == Rational(1), params.str(), "n=" + num(n) + ",p=" + num(p), sum.str(), "1");
    }
  }
  return r;
}

VerificationReport verify_generating(const ParamTriple& params, unsigned max_n) {
  VerificationReport r = fresh("generating", params.str());
  for (unsigned n = 0; n <= max_n; ++n) {
    for (unsigned p = 0; p <= n; ++p) {
      const Poly g = u_generating_poly(params, n, p);
      const std::string where = "n=" + num(n) + ",p=" + num(p);
      r.check(g.total_degree() <= static_cast<int>(n), params.str(), where + ",degree", num(g.total_degree()),
              "<= " + num(n));
      for (unsigned k = 0; k <= n; ++k) {
        const Rational got = g.coefficient_of_power(k), want = u_coefficient(params, {n, k, p});
        r.check(got == want, params.str(), where + ",k=" + num(k), got.str(), want.str());
      }
      const Rational at_one = g.eval({{Var::t, 1}});
      r.check(at_one == Rational(1), params.str(), where + ",t=1", at_one.str(), "1");
    }
  }
  return r;
}

VerificationReport verify_inverse(const ParamTriple& params, unsigned max_n) {
  VerificationReport r = fresh("inverse", params.str());
  for (unsigned n = 0; n <= max_n; ++n) {
    const auto u = u_matrix(params, n);
    const auto v = u_reverse_matrix(params, n);
    for (unsigned i = 0; i <= n; ++i) {
      for (unsigned j = 0; j <= n; ++j) {
        Rational uv, vu;
        for (unsigned m = 0; m <= n; ++m) {
          uv += u[i][m] * v[m][j];
          vu += v[i][m] * u[m][j];
        }
        const Rational id = i == j ? Rational(1) : Rational(0);
        const std::string where = "n=" + num(n) + ",i=" + num(i) + ",j=" + num(j);
        r.check(uv == id, params.str(), where + ",U*V", uv.str(), id.str());
        r.check(vu == id, params.str(), where + ",V*U", vu.str(), id.str());
      }
    }
  }
  return r;
}

VerificationReport verify_intertwiner(const Rational& lam1, const Rational& lam2, unsigned max_ell, unsigned max_deg) {
  const std::string sample = pair_str(lam1, lam2);
  VerificationReport r = fresh("intertwiner", sample);
  const ModuleModel tensor = ModuleModel::tensor_lowest(lam1, lam2);
  for (unsigned ell = 0; ell <= max_ell; ++ell) {
    const ModuleModel target = ModuleModel::lowest(lam1 + lam2 + Rational(2 * ell));
    for (unsigned m = 0; m <= max_deg; ++m) {
      const Poly q = Poly::power(Var::x, m);
      for (const Generator g : {Generator::H, Generator::E, Generator::F}) {
        const Poly lhs = act(tensor, g, intertwiner_phi_tilde(ell, lam1, lam2, q));
        const Poly rhs = intertwiner_phi_tilde(ell, lam1, lam2, act(target, g, q));
        r.check(lhs == rhs, sample, "ell=" + num(ell) + ",m=" + num(m) + "," + std::string(generator_name(g)),
                lhs.str(), rhs.str());
      }
    }
  }
  return r;
}

VerificationReport verify_adjoint(const Rational& lam1, const Rational& lam2, unsigned max_ell, unsigned max_total) {
  const std::string sample = pair_str(lam1, lam2);
  VerificationReport r = fresh("adjoint", sample);
  const VarSet xy{Var::x, Var::y};
  for (unsigned ell = 0; ell <= max_ell; ++ell) {
    for (unsigned a = 0; a <= max_total; ++a) {
      for (unsigned b = 0; a + b <= max_total; ++b) {
        const Poly p = Poly::monomial(xy, {a, b});
        const Poly adj = adjoint_phi_tilde(ell, lam1, lam2, p);
        const Poly bracket = rc_bracket({lam1, zpow(a)}, {lam2, zpow(b)}, ell).form;
        const std::string where = "ell=" + num(ell) + ",a=" + num(a) + ",b=" + num(b);
        r.check(adj == bracket, sample, where + ",bracket", adj.str(), bracket.str());
        const unsigned m = a + b >= ell ? a + b - ell : 0;
        const Rational lhs = fischer(intertwiner_phi_tilde(ell, lam1, lam2, zpow(m)), p);
        const Rational rhs = fischer(zpow(m), adj);
        r.check(lhs == rhs, sample, where + ",fischer", lhs.str(), rhs.str());
      }
    }
  }
  return r;
}

VerificationReport verify_casimir(const Rational& lam1, const Rational& lam2, unsigned max_ell, unsigned max_deg) {
  const std::string sample = pair_str(lam1, lam2);
  VerificationReport r = fresh("casimir", sample);
  const ModuleModel tv = ModuleModel::tensor_lowest_tv(lam1, lam2);
  for (unsigned ell = 0; ell <= max_ell; ++ell) {
    const Rational mu = casimir_eigenvalue(ell, lam1, lam2);
    for (unsigned m = 0; m <= max_deg; ++m) {
      const Poly p = intertwiner_phi(ell, lam1, lam2, Poly::power(Var::t, m));
      const Poly lhs = act(tv, Generator::C, p);
      r.check(lhs == p * mu, sample, "ell=" + num(ell) + ",m=" + num(m), lhs.str(), (p * mu).str());
    }
  }
  std::set<Rational> seen;
  for (unsigned ell = 0; ell <= 8; ++ell) seen.insert(casimir_eigenvalue(ell, lam1, lam2));
  r.check(seen.size() == 9, sample, "distinct ell<=8", num(static_cast<unsigned>(seen.size())), "9");
  return r;
}

VerificationReport verify_star(const ParamTriple& params, unsigned truncation, unsigned max_deg) {
  VerificationReport r = fresh("eholzer-associativity", params.str());
  const StarSeries unit = inject({Rational(0), zpow(0)}, truncation);
  for (unsigned a = 0; a <= max_deg; ++a) {
    for (unsigned b = 0; b <= max_deg; ++b) {
      for (unsigned c = 0; c <= max_deg; ++c) {
        const StarSeries d = assoc_defect({params.lam1, zpow(a)}, {params.lam2, zpow(b)}, {params.lam3, zpow(c)},
                                          truncation);
        r.check(d.is_zero(), params.str(),
                "N=" + num(truncation) + ",m=(" + num(a) + "," + num(b) + "," + num(c) + ")", d.str(), "0");
      }
    }
    const StarSeries f = inject({params.lam1, zpow(a)}, truncation);
    r.check(star(unit, f) == f && star(f, unit) == f, params.str(), "unit,m=" + num(a), star(unit, f).str(), f.str());
  }
  return r;
}

std::vector<VerificationReport> verify_worked_example(const ParamTriple& params) {
  const auto& [l1, l2, l3] = params;
  const Rational s23 = l2 + l3;
  const Rational printed[3] = {
      Rational(2) * l2 * l3 / s23,
      (l1 * l2 + l2 * l3 - l3 * l1 + Rational(2) * l2 + l2 * l2) / (s23 * (s23 + Rational(2))),
      -Rational(2) * l1 * (l1 + l2 + l3 + Rational(2)) /
          ((s23 + Rational(1)) * (s23 + Rational(2)) * (s23 + Rational(4))),
  };
  const auto solved = recover_u_by_solve(params, 2, 1);
  std::vector<VerificationReport> out;
  for (unsigned p = 0; p <= 2; ++p) {
    VerificationReport r = fresh("worked-example p=" + num(p), params.str(), true);
    const Rational formula = u_coefficient(params, {2, 1, p});
    const std::string oracle = solved ? (*solved)[p].str() : "unsolvable";
    const bool agrees = solved && (*solved)[p] == printed[p] && formula == printed[p];
    r.check(agrees, params.str(), "n=2,k=1,p=" + num(p), printed[p].str(), oracle);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  out.push_back("all");
  return out;
}

std::vector<VerificationReport> run_suite(const std::string& name, const SuiteConfig& config) {
  std::vector<Reports> parts;
  for (const auto& [suite, fn] : registry()) {
    if (name == "all" || name == suite) parts.push_back(fn(config));
  }
  if (parts.empty()) throw Error(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
  return merge(parts);
}

}  // namespace rcb
