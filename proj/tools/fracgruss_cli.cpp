// fracgruss: evaluate generalized fractional integrals and check the
// Gruss-type identities and inequalities they satisfy.
//
// Subcommands: op, check, suite, presets. Results go to stdout as JSON,
// diagnostics to stderr. Exit codes: 0 all-hold/success, 1 violation,
// 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracgruss/errors.hpp"
#include "fracgruss/harness.hpp"
#include "fracgruss/operators.hpp"
#include "fracgruss/reductions.hpp"
#include "fracgruss/serialization.hpp"

namespace fg = fracgruss;
using nlohmann::json;

namespace {

std::size_t default_nodes() {
  if (const char* env = std::getenv("FRACGRUSS_NODES")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return static_cast<std::size_t>(v);
    std::cerr << "warning: ignoring invalid FRACGRUSS_NODES='" << env << "'\n";
  }
  return fg::kDefaultNodes;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fg::ParseError("cannot open '" + path + "'");
  json j;
  in >> j;
  return j;
}

struct OpArgs {
  std::string side = "left";
  std::string fn;
  double rho = 1.0, alpha = 1.0, beta = 0.0, eta = 0.0, k = 0.0;
  double x = 1.0;
  std::optional<double> b;
  std::size_t nodes = fg::kDefaultNodes;
};

int cmd_op(const OpArgs& a) {
  fg::FunctionSpec f = fg::FunctionSpec::parse(a.fn);
  fg::OperatorParams p(a.rho, a.alpha, a.beta, a.eta, a.k);
  fg::OperatorResult result = [&] {
    if (a.side == "left") return fg::left_integral(f, p, a.x, a.nodes);
    if (a.side == "right") {
      if (!a.b) throw fg::ParseError("right-sided evaluation needs --b");
      return fg::right_integral(f, p, a.x, *a.b, a.nodes);
    }
    throw fg::ParseError("--side must be left or right");
  }();

  json out{{"side", a.side}, {"fn", f.serialize()},  {"value", result.value},
           {"rule_size", result.rule_size},          {"rho", p.rho},
           {"alpha", p.alpha},                       {"beta", p.beta},
           {"eta", p.eta},                           {"k", p.k},
           {"x", a.x}};
  if (a.b) out["b"] = *a.b;
  std::cout << out.dump() << "\n";
  return 0;
}

struct CheckArgs {
  std::string theorem;
  std::string case_file;
  std::optional<std::string> v, z1, z2, u, g1, g2;
  std::optional<double> m, M, p_lo, p_hi;
  double rho = 1.0, alpha = 1.0, beta = 0.0, eta = 0.0, k = 0.0;
  std::optional<double> delta, lambda;
  std::optional<double> alpha2, beta2, eta2, k2;
  double x = 1.0;
  std::size_t nodes = fg::kDefaultNodes;
  double tol = fg::kDefaultTol;
};

json inline_case(const CheckArgs& a) {
  json inputs{{"x", a.x}, {"nodes", a.nodes}};
  if (a.theorem == "comp") {
    if (!a.v) throw fg::ParseError("comp needs --v with the monomial");
    inputs["fn"] = *a.v;
    inputs["outer"] = {{"rho", a.rho}, {"alpha", a.alpha}, {"beta", a.beta},
                       {"eta", a.eta}, {"k", a.k}};
    inputs["inner"] = {{"rho", a.rho},
                       {"alpha", a.alpha2.value_or(a.alpha)},
                       {"beta", a.beta2.value_or(a.beta)},
                       {"eta", a.eta2.value_or(a.eta)},
                       {"k", a.k2.value_or(-a.rho * a.eta)}};
    return inputs;
  }

  json params{{"rho", a.rho}, {"alpha", a.alpha}, {"beta", a.beta}, {"eta", a.eta}, {"k", a.k}};
  if (a.delta) params["delta"] = *a.delta;
  if (a.lambda) params["lambda"] = *a.lambda;
  inputs["params"] = params;

  auto bounded = [&](const std::optional<std::string>& fn, const std::optional<std::string>& lo,
                     const std::optional<std::string>& hi, const char* who) {
    if (!fn || !lo || !hi) {
      throw fg::ParseError(std::string(who) + " needs a function and both envelopes");
    }
    return json{{"fn", *fn}, {"lower", *lo}, {"upper", *hi}};
  };
  auto const_bounded = [&](const std::optional<std::string>& fn, std::optional<double> lo,
                           std::optional<double> hi, const char* who) {
    if (!fn || !lo || !hi) {
      throw fg::ParseError(std::string(who) + " needs a function and both constant bounds");
    }
    return json{{"fn", *fn}, {"lo", *lo}, {"hi", *hi}};
  };

  const std::string& id = a.theorem;
  if (id == "thm1" || id == "lemma1" || id == "lemma2") {
    inputs["v"] = bounded(a.v, a.z1, a.z2, "--v/--z1/--z2");
  } else if (id == "thm2" || id == "thm3" || id.rfind("thm4", 0) == 0) {
    inputs["v"] = bounded(a.v, a.z1, a.z2, "--v/--z1/--z2");
    inputs["u"] = bounded(a.u, a.g1, a.g2, "--u/--g1/--g2");
  } else if (id == "cs1") {
    if (!a.v || !a.u) throw fg::ParseError("cs1 needs --v and --u");
    inputs["v"] = *a.v;
    inputs["u"] = *a.u;
  } else if (id == "cor1") {
    inputs["v"] = const_bounded(a.v, a.m, a.M, "--v/--m/--M");
  } else if (id.rfind("cor2", 0) == 0 || id == "dahmani") {
    inputs["v"] = const_bounded(a.v, a.m, a.M, "--v/--m/--M");
    inputs["u"] = const_bounded(a.u, a.p_lo, a.p_hi, "--u/--p/--P");
  } else {
    throw fg::ParseError("unknown theorem id '" + id + "'");
  }
  return inputs;
}

int cmd_check(const CheckArgs& a) {
  std::string theorem = a.theorem;
  json inputs;
  if (!a.case_file.empty()) {
    json file = read_json_file(a.case_file);
    if (file.contains("inputs")) {
      if (theorem.empty()) {
        if (!file.contains("theorem_id")) {
          throw fg::ParseError("case file has no theorem_id; pass --theorem");
        }
        theorem = file["theorem_id"].get<std::string>();
      }
      inputs = file["inputs"];
    } else {
      if (theorem.empty()) {
        if (!file.contains("theorem_id")) {
          throw fg::ParseError("case file has no theorem_id; pass --theorem");
        }
        theorem = file["theorem_id"].get<std::string>();
        file.erase("theorem_id");
      }
      inputs = file;
    }
  } else {
    if (theorem.empty()) throw fg::ParseError("--theorem is required without --case-file");
    inputs = inline_case(a);
  }

  fg::CheckOptions opt;
  opt.tol = a.tol;
  fg::CheckReport report = fg::run_check_from_case(theorem, inputs, opt);
  std::cout << report.to_json().dump() << "\n";
  return report.holds ? 0 : 1;
}

struct SuiteArgs {
  std::string config_path;
  std::string csv_path;
  std::string out_path;
  std::string failures_path;
  std::optional<std::size_t> threads;
};

int cmd_suite(const SuiteArgs& a) {
  json cfg_json = read_json_file(a.config_path);
  fg::SuiteConfig config = fg::suite_config_from_json(cfg_json);
  if (!cfg_json.contains("nodes")) config.nodes = default_nodes();
  if (a.threads) config.threads = *a.threads;

  fg::SuiteReport report = fg::run_suite(config);
  std::string dumped = report.to_json().dump();
  std::cout << dumped << "\n";
  if (!a.out_path.empty()) {
    std::ofstream out(a.out_path);
    if (!out) throw fg::ParseError("cannot write '" + a.out_path + "'");
    out << dumped << "\n";
  }
  if (!a.csv_path.empty()) {
    std::ofstream csv(a.csv_path);
    if (!csv) throw fg::ParseError("cannot write '" + a.csv_path + "'");
    fg::write_suite_csv(report, csv);
  }
  if (!a.failures_path.empty()) {
    std::ofstream lines(a.failures_path);
    if (!lines) throw fg::ParseError("cannot write '" + a.failures_path + "'");
    for (const auto& f : report.failures) {
      lines << json{{"seed", f.seed},
                    {"theorem_id", f.theorem_id},
                    {"slack", f.slack},
                    {"inputs", f.inputs}}
                   .dump()
            << "\n";
    }
  }
  return report.all_hold() ? 0 : 1;
}

int cmd_presets() {
  json out = json::array();
  for (const auto& preset : fg::reduction_presets()) {
    out.push_back({{"name", preset.name}, {"parameters", preset.description}});
  }
  std::cout << out.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized fractional integrals and their Gruss-type checks"};
  app.require_subcommand(1);

  OpArgs op_args;
  op_args.nodes = default_nodes();
  auto* op = app.add_subcommand("op", "evaluate a left- or right-sided operator");
  op->add_option("--side", op_args.side, "left or right")->default_val("left");
  op->add_option("--fn", op_args.fn, "function in prefix form, e.g. \"(var t)\"")->required();
  op->add_option("--rho", op_args.rho);
  op->add_option("--alpha", op_args.alpha);
  op->add_option("--beta", op_args.beta);
  op->add_option("--eta", op_args.eta);
  op->add_option("--k", op_args.k);
  op->add_option("--x", op_args.x)->required();
  op->add_option("--b", [&op_args](const CLI::results_t& r) {
    double v = 0.0;
    if (!CLI::detail::lexical_cast(r[0], v)) return false;
    op_args.b = v;
    return true;
  }, "upper limit for the right-sided operator");
  op->add_option("--nodes,-n", op_args.nodes, "quadrature nodes");

  CheckArgs check_args;
  check_args.nodes = default_nodes();
  auto* check = app.add_subcommand("check", "run one identity/inequality check");
  check->add_option("--theorem,-t", check_args.theorem, "theorem id (thm1, cor1, lemma1, ...)");
  check->add_option("--case-file", check_args.case_file, "JSON case (or failed-case line)");
  auto opt_str = [&](const char* name, std::optional<std::string>& slot, const char* desc) {
    check->add_option(name, [&slot](const CLI::results_t& r) {
      slot = r[0];
      return true;
    }, desc);
  };
  auto opt_num = [&](const char* name, std::optional<double>& slot, const char* desc) {
    check->add_option(name, [&slot](const CLI::results_t& r) {
      double v = 0.0;
      if (!CLI::detail::lexical_cast(r[0], v)) return false;
      slot = v;
      return true;
    }, desc);
  };
  opt_str("--v", check_args.v, "function v (or the monomial for comp)");
  opt_str("--z1", check_args.z1, "lower envelope of v");
  opt_str("--z2", check_args.z2, "upper envelope of v");
  opt_str("--u", check_args.u, "function u");
  opt_str("--g1", check_args.g1, "lower envelope of u");
  opt_str("--g2", check_args.g2, "upper envelope of u");
  opt_num("--m", check_args.m, "constant lower bound of v");
  opt_num("--M", check_args.M, "constant upper bound of v");
  opt_num("--p", check_args.p_lo, "constant lower bound of u");
  opt_num("--P", check_args.p_hi, "constant upper bound of u");
  check->add_option("--rho", check_args.rho);
  check->add_option("--alpha", check_args.alpha);
  check->add_option("--beta", check_args.beta);
  check->add_option("--eta", check_args.eta);
  check->add_option("--k", check_args.k);
  opt_num("--delta", check_args.delta, "second operator order");
  opt_num("--lambda", check_args.lambda, "second operator beta-analogue");
  opt_num("--alpha2", check_args.alpha2, "inner operator order (comp)");
  opt_num("--beta2", check_args.beta2, "inner operator beta (comp)");
  opt_num("--eta2", check_args.eta2, "inner operator eta (comp)");
  opt_num("--k2", check_args.k2, "inner operator k (comp)");
  check->add_option("--x", check_args.x);
  check->add_option("--nodes,-n", check_args.nodes);
  check->add_option("--tol", check_args.tol, "verdict tolerance");

  SuiteArgs suite_args;
  auto* suite = app.add_subcommand("suite", "run a randomized verification suite");
  suite->add_option("config", suite_args.config_path, "suite config JSON")->required();
  suite->add_option("--csv", suite_args.csv_path, "write per-check rows to CSV");
  suite->add_option("--out", suite_args.out_path, "also write the JSON report here");
  suite->add_option("--failures", suite_args.failures_path,
                    "write failed cases as JSON lines (replayable via check --case-file)");
  suite->add_option("--threads", [&suite_args](const CLI::results_t& r) {
    std::size_t v = 0;
    if (!CLI::detail::lexical_cast(r[0], v) || v < 1) return false;
    suite_args.threads = v;
    return true;
  }, "worker threads (overrides config)");

  auto* presets = app.add_subcommand("presets", "list reduction presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // diagnostic on stderr
    return 2;     // stable usage-error code
  }

  try {
    if (op->parsed()) return cmd_op(op_args);
    if (check->parsed()) return cmd_check(check_args);
    if (suite->parsed()) return cmd_suite(suite_args);
    if (presets->parsed()) return cmd_presets();
  } catch (const fg::InconsistencyError& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
