#include "rcb/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rcb/bracket.hpp"
#include "rcb/eholzer.hpp"
#include "rcb/error.hpp"
#include "rcb/racah.hpp"
#include "rcb/rewriter.hpp"
#include "rcb/samples.hpp"
#include "rcb/specfun.hpp"
#include "rcb/verma.hpp"

namespace rcb {

SuiteConfig RunConfig::suite_config() const {
  SuiteConfig c;
  c.seed = seed;
  c.sample_count = sample_count;
  c.max_n = max_n;
  c.max_degree = max_degree;
  c.hbar_order = hbar_order;
  c.threads = threads;
  return c;
}

namespace {

using Json = nlohmann::ordered_json;

struct Inputs {
  std::string suite = "all";
  std::string l1, l2, l3;
  std::string f, g;
  std::string expr, weights;
  std::string identity_file;
  std::string model, generator, poly;
  unsigned truncation = 0;
  bool json = false;
};

Json config_json(const RunConfig& c) {
  Json j;
  j["seed"] = c.seed;
  j["sample_count"] = c.sample_count;
  j["max_n"] = c.max_n;
  j["max_degree"] = c.max_degree;
  j["hbar_order"] = c.hbar_order;
  return j;
}

bool any_failure(const std::vector<VerificationReport>& reports) {
  return std::any_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.status() == Status::Fail; });
}

void print_reports(const std::string& suite, const RunConfig& c, const std::vector<VerificationReport>& reports,
                   std::ostream& out) {
  if (c.output == OutputFormat::Text) {
    for (const auto& r : reports) {
      out << r.identity_id << "  " << to_string(r.status()) << "  " << r.instances_checked << " checked  "
          << r.failure_count << " failed\n";
    }
    return;
  }
  Json j;
  j["suite"] = suite;
  j["config"] = config_json(c);
  j["reports"] = Json::array();
  for (const auto& r : reports) j["reports"].push_back(r.to_json());
  out << j.dump(2) << "\n";
}

ParamTriple triple(const Inputs& in) {
  return {Rational::parse(in.l1), Rational::parse(in.l2), Rational::parse(in.l3)};
}

int cmd_verify(const Inputs& in, const RunConfig& c, std::ostream& out) {
  const auto reports = run_suite(in.suite, c.suite_config());
  print_reports(in.suite, c, reports, out);
  return any_failure(reports) ? 1 : 0;
}

int cmd_u_table(const Inputs& in, const RunConfig& c, std::ostream& out) {
  const ParamTriple t = triple(in);
  const auto m = u_matrix(t, c.max_n);
  if (in.json || c.output == OutputFormat::Json) {
    Json j;
    j["params"] = {{"l1", t.lam1.str()}, {"l2", t.lam2.str()}, {"l3", t.lam3.str()}};
    j["n"] = c.max_n;
    j["entries"] = Json::array();
    for (unsigned k = 0; k <= c.max_n; ++k) {
      for (unsigned p = 0; p <= c.max_n; ++p) j["entries"].push_back({{"k", k}, {"p", p}, {"value", m[k][p].str()}});
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "k\\p";
  for (unsigned p = 0; p <= c.max_n; ++p) out << "," << p;
  out << "\n";
  for (unsigned k = 0; k <= c.max_n; ++k) {
    out << k;
    for (unsigned p = 0; p <= c.max_n; ++p) out << "," << m[k][p].str();
    out << "\n";
  }
  return 0;
}

int cmd_racah(const Inputs& in, const RunConfig& c, std::ostream& out) {
  const ParamTriple t = triple(in);
  const unsigned n = c.max_n;
  if (c.output == OutputFormat::Json) {
    Json j;
    j["params"] = {{"l1", t.lam1.str()}, {"l2", t.lam2.str()}, {"l3", t.lam3.str()}};
    j["n"] = n;
    j["entries"] = Json::array();
    for (unsigned p = 0; p <= n; ++p) {
      for (unsigned k = 0; k <= n; ++k) {
        j["entries"].push_back({{"p", p}, {"k", k}, {"value", racah_value(p, k, n, t.lam1, t.lam2, t.lam3).str()}});
      }
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "p\\k";
  for (unsigned k = 0; k <= n; ++k) out << "," << k;
  out << "\n";
  for (unsigned p = 0; p <= n; ++p) {
    out << p;
    for (unsigned k = 0; k <= n; ++k) out << "," << racah_value(p, k, n, t.lam1, t.lam2, t.lam3).str();
    out << "\n";
  }
  return 0;
}

int cmd_bracket(const Inputs& in, const RunConfig& c, std::ostream& out) {
  const VarSet z{Var::z};
  const WeightedForm f{Rational::parse(in.l1), parse_poly(in.f, z)};
  const WeightedForm g{Rational::parse(in.l2), parse_poly(in.g, z)};
  const WeightedForm r = rc_bracket(f, g, c.max_n);
  out << "weight: " << r.weight.str() << "\nform: " << r.form.str() << "\n";
  return 0;
}

int cmd_star(const Inputs& in, const RunConfig& c, std::ostream& out) {
  const unsigned truncation = in.truncation ? in.truncation : c.hbar_order;
  const StarSeries s = star(inject(parse_weighted_form(in.f), truncation), inject(parse_weighted_form(in.g), truncation));
  const std::string text = s.str();
  out << (text.empty() ? "0\n" : text);
  return 0;
}

int cmd_rewrite(const Inputs& in, std::ostream& out) {
  const LinearCombo combo = to_standard(parse_bracket(in.expr), parse_weights(in.weights));
  const std::string text = combo.str();
  out << (text.empty() ? "0\n" : text);
  return 0;
}

int cmd_check(const Inputs& in, const RunConfig& c, std::ostream& out) {
  std::ifstream file(in.identity_file);
  std::stringstream buffer;
  buffer << file.rdbuf();
  const auto terms = parse_identity_lines(buffer.str());
  VerificationReport report;
  if (!in.weights.empty()) {
    report = check_identity(terms, parse_weights(in.weights));
  } else {
    unsigned arity = 1;
    for (const auto& [coeff, expr] : terms) {
      for (unsigned slot : parse_bracket(expr).slots()) arity = std::max(arity, slot);
    }
    for (const auto& w : weight_tuples(arity, c.seed, c.sample_count)) {
      WeightAssignment a;
      for (std::size_t i = 0; i < w.size(); ++i) a[static_cast<unsigned>(i + 1)] = w[i];
      const VerificationReport one = check_identity(terms, a);
      if (report.identity_id.empty()) {
        report = one;
      } else {
        report.absorb(one);
      }
    }
  }
  if (c.output == OutputFormat::Text) {
    out << report.identity_id << "  " << to_string(report.status()) << "  " << report.instances_checked
        << " checked  " << report.failure_count << " failed\n";
  } else {
    out << report.to_json().dump(2) << "\n";
  }
  return report.status() == Status::Fail ? 1 : 0;
}

int cmd_verma(const Inputs& in, std::ostream& out) {
  const ModuleModel model = ModuleModel::parse(in.model);
  const Poly p = parse_poly(in.poly, model.vars());
  out << act(model, parse_generator(in.generator), p).str() << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  Inputs in;
  std::string output = "default";

  CLI::App app{"Exact Rankin-Cohen bracket, Racah coefficient and star product verifier", "rcb"};
  app.set_config("--config", "", "flat key=value file presetting any global flag");
  app.option_defaults()->always_capture_default();
  app.add_option("--seed", config.seed, "seed for the random parameter samples");
  app.add_option("--samples", config.sample_count, "number of seeded samples added to the fixed ones");
  app.add_option("--n", config.max_n, "order n (largest n for suites)");
  app.add_option("--max-degree", config.max_degree, "largest monomial degree in the test forms");
  app.add_option("--hbar-order", config.hbar_order, "truncation order of star series");
  app.add_option("--threads", config.threads, "worker threads, 0 for all cores");
  app.add_option("--output", output, "json, csv or text")
      ->check(CLI::IsMember({"default", "json", "csv", "text"}));
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run verification suites")->fallthrough();
  verify->add_option("--suite", in.suite, "suite name")->check(CLI::IsMember(suite_names()));

  const auto add_params = [&](CLI::App* sub) {
    sub->add_option("--l1", in.l1)->required();
    sub->add_option("--l2", in.l2)->required();
    sub->add_option("--l3", in.l3)->required();
  };
  auto* u_table = app.add_subcommand("u-table", "U coefficients as a (k, p) table")->fallthrough();
  add_params(u_table);
  u_table->add_flag("--json", in.json, "emit JSON instead of CSV");
  auto* racah = app.add_subcommand("racah", "Racah values R_{p,k} as a (p, k) table")->fallthrough();
  add_params(racah);

  auto* bracket = app.add_subcommand("bracket", "one RC bracket of two polynomials in z")->fallthrough();
  bracket->add_option("--l1", in.l1)->required();
  bracket->add_option("--l2", in.l2)->required();
  bracket->add_option("--f", in.f)->required();
  bracket->add_option("--g", in.g)->required();

  auto* star_cmd = app.add_subcommand("star", "star product of two weighted forms")->fallthrough();
  star_cmd->add_option("--N", in.truncation, "truncation order (default: --hbar-order)");
  star_cmd->add_option("--f", in.f, "weight:poly")->required();
  star_cmd->add_option("--g", in.g, "weight:poly")->required();

  auto* rewrite = app.add_subcommand("rewrite", "standard-basis expansion of a bracket expression")->fallthrough();
  rewrite->add_option("--expr", in.expr)->required();
  rewrite->add_option("--weights", in.weights, "comma separated, e.g. 1/2,1,7/3")->required();

  auto* check = app.add_subcommand("check", "certify an identity by rewriting")->fallthrough();
  check->add_option("--identity-file", in.identity_file, "lines 'coeff | expr'")->required()->check(CLI::ExistingFile);
  check->add_option("--weights", in.weights, "single weight assignment (default: the sample set)");

  auto* verma = app.add_subcommand("verma", "apply an sl2 generator in a module model")->fallthrough();
  verma->add_option("--model", in.model, "highest:l, lowest:l, tensor:l1,l2 or tv:l1,l2")->required();
  verma->add_option("--gen", in.generator, "H, E, F or C")->required();
  verma->add_option("--poly", in.poly)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }
  if (output == "json") config.output = OutputFormat::Json;
  if (output == "csv") config.output = OutputFormat::Csv;
  if (output == "text") config.output = OutputFormat::Text;

  try {
    if (verify->parsed()) return cmd_verify(in, config, out);
    if (u_table->parsed()) return cmd_u_table(in, config, out);
    if (racah->parsed()) return cmd_racah(in, config, out);
    if (bracket->parsed()) return cmd_bracket(in, config, out);
    if (star_cmd->parsed()) return cmd_star(in, config, out);
    if (rewrite->parsed()) return cmd_rewrite(in, out);
    if (check->parsed()) return cmd_check(in, config, out);
    if (verma->parsed()) return cmd_verma(in, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace rcb
