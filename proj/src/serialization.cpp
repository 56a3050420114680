#include "fracgruss/serialization.hpp"

#include <ostream>
#include <set>

#include "fracgruss/errors.hpp"
#include "fracgruss/operators.hpp"

namespace fracgruss {

namespace {

double need_number(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw ParseError(std::string("case needs numeric field '") + key + "'");
  }
  return j[key].get<double>();
}

std::string need_string(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) {
    throw ParseError(std::string("case needs string field '") + key + "'");
  }
  return j[key].get<std::string>();
}

OperatorParams params_from(const nlohmann::json& p) {
  return OperatorParams(need_number(p, "rho"), need_number(p, "alpha"), need_number(p, "beta"),
                        need_number(p, "eta"), need_number(p, "k"));
}

OperatorParams second_params_from(const nlohmann::json& p) {
  return OperatorParams(need_number(p, "rho"), need_number(p, "delta"),
                        need_number(p, "lambda"), need_number(p, "eta"), need_number(p, "k"));
}

BoundedFunction bounded_from(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_object()) {
    throw ParseError(std::string("case needs bounded-function object '") + key + "'");
  }
  const auto& b = j[key];
  return BoundedFunction{FunctionSpec::parse(need_string(b, "fn")),
                         FunctionSpec::parse(need_string(b, "lower")),
                         FunctionSpec::parse(need_string(b, "upper"))};
}

std::pair<FunctionSpec, ConstantBounds> const_bounded_from(const nlohmann::json& j,
                                                           const char* key) {
  if (!j.contains(key) || !j[key].is_object()) {
    throw ParseError(std::string("case needs constant-bounded object '") + key + "'");
  }
  const auto& b = j[key];
  return {FunctionSpec::parse(need_string(b, "fn")),
          ConstantBounds(need_number(b, "lo"), need_number(b, "hi"))};
}

std::size_t nodes_from(const nlohmann::json& j) {
  double n = need_number(j, "nodes");
  if (n < 1) throw ParseError("nodes must be at least 1");
  return static_cast<std::size_t>(n);
}

}  // namespace

SuiteConfig suite_config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("suite config must be a JSON object");
  static const std::set<std::string> allowed = {"theorems", "trials",  "master_seed",
                                                "nodes",    "families", "tolerance",
                                                "x_max",    "threads"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!allowed.contains(key)) throw ParseError("unknown suite config key '" + key + "'");
  }

  SuiteConfig config;
  if (j.contains("theorems")) {
    const auto& t = j["theorems"];
    if (t.is_string()) {
      if (t.get<std::string>() != "all") {
        throw ParseError("theorems must be an array of ids or the string \"all\"");
      }
    } else if (t.is_array()) {
      for (const auto& id : t) {
        if (!id.is_string()) throw ParseError("theorem ids must be strings");
        config.theorems.push_back(id.get<std::string>());
      }
    } else {
      throw ParseError("theorems must be an array of ids or the string \"all\"");
    }
  }
  if (j.contains("trials")) {
    if (!j["trials"].is_number_integer() || j["trials"].get<long long>() < 0) {
      throw ParseError("trials must be a nonnegative integer");
    }
    config.trials = j["trials"].get<std::size_t>();
  }
  if (j.contains("master_seed")) {
    if (!j["master_seed"].is_number_integer()) throw ParseError("master_seed must be an integer");
    config.master_seed = j["master_seed"].get<std::uint64_t>();
  }
  if (j.contains("nodes")) {
    if (!j["nodes"].is_number_integer() || j["nodes"].get<long long>() < 1) {
      throw ParseError("nodes must be a positive integer");
    }
    config.nodes = j["nodes"].get<std::size_t>();
  }
  if (j.contains("families")) {
    if (!j["families"].is_array() || j["families"].empty()) {
      throw ParseError("families must be a nonempty array");
    }
    config.families.clear();
    for (const auto& f : j["families"]) {
      if (!f.is_string()) throw ParseError("family names must be strings");
      config.families.push_back(family_from_name(f.get<std::string>()));
    }
  }
  if (j.contains("tolerance")) {
    if (!j["tolerance"].is_number() || j["tolerance"].get<double>() <= 0.0) {
      throw ParseError("tolerance must be a positive number");
    }
    config.tolerance = j["tolerance"].get<double>();
  }
  if (j.contains("x_max")) {
    if (!j["x_max"].is_number()) throw ParseError("x_max must be a number");
    config.x_max = j["x_max"].get<double>();
  }
  if (j.contains("threads")) {
    if (!j["threads"].is_number_integer() || j["threads"].get<long long>() < 1) {
      throw ParseError("threads must be a positive integer");
    }
    config.threads = j["threads"].get<std::size_t>();
  }
  return config;
}

nlohmann::json suite_config_to_json(const SuiteConfig& config) {
  nlohmann::json fams = nlohmann::json::array();
  for (CaseFamily f : config.families) fams.push_back(family_name(f));
  nlohmann::json j{{"theorems", config.theorems.empty()
                                    ? nlohmann::json("all")
                                    : nlohmann::json(config.theorems)},
                   {"trials", config.trials},
                   {"master_seed", config.master_seed},
                   {"nodes", config.nodes},
                   {"families", fams},
                   {"x_max", config.x_max},
                   {"threads", config.threads}};
  if (config.tolerance) j["tolerance"] = *config.tolerance;
  return j;
}

void write_suite_csv(const SuiteReport& report, std::ostream& out) {
  out << "seed,theorem_id,lhs,rhs,slack,scale,holds\n";
  for (const auto& check : report.checks) {
    out << check.seed << ',' << check.theorem_id << ',' << format_double(check.lhs) << ','
        << format_double(check.rhs) << ',' << format_double(check.slack) << ','
        << format_double(check.scale) << ',' << (check.holds ? "true" : "false") << '\n';
  }
}

CheckReport run_check_from_case(const std::string& theorem_id, const nlohmann::json& inputs,
                                CheckOptions opt) {
  if (!inputs.is_object()) throw ParseError("case must be a JSON object");

  if (theorem_id == "comp") {
    const auto& outer = inputs.contains("outer") ? inputs["outer"] : nlohmann::json();
    const auto& inner = inputs.contains("inner") ? inputs["inner"] : nlohmann::json();
    return check_composition(FunctionSpec::parse(need_string(inputs, "fn")), params_from(outer),
                             params_from(inner), need_number(inputs, "x"), nodes_from(inputs),
                             opt.tol);
  }

  double x = need_number(inputs, "x");
  std::size_t nodes = nodes_from(inputs);
  if (!inputs.contains("params") || !inputs["params"].is_object()) {
    throw ParseError("case needs a 'params' object");
  }
  const auto& pj = inputs["params"];
  OperatorParams first = params_from(pj);

  auto two_param = [&] {
    return TwoParamCase(first, second_params_from(pj), x, nodes);
  };

  if (theorem_id == "thm1") return check_thm1(bounded_from(inputs, "v"), two_param(), opt);
  if (theorem_id == "cor1") {
    auto [v, b] = const_bounded_from(inputs, "v");
    return check_cor1(v, b, two_param(), opt);
  }
  if (theorem_id == "lemma1") {
    return residual_lemma1(bounded_from(inputs, "v"), first, x, nodes, opt);
  }
  if (theorem_id == "thm2") {
    return check_thm2(bounded_from(inputs, "v"), bounded_from(inputs, "u"), first, x, nodes, opt);
  }
  if (theorem_id == "cs1") {
    return check_cs_one_param(FunctionSpec::parse(need_string(inputs, "v")),
                              FunctionSpec::parse(need_string(inputs, "u")), first, x, nodes,
                              opt);
  }
  if (theorem_id == "lemma2") return residual_lemma2(bounded_from(inputs, "v"), two_param(), opt);
  if (theorem_id == "thm3") {
    return check_thm3(bounded_from(inputs, "v"), bounded_from(inputs, "u"), two_param(), opt);
  }
  if (theorem_id == "thm4a" || theorem_id == "thm4b" || theorem_id == "thm4c" ||
      theorem_id == "thm4d") {
    Thm4Part part = theorem_id == "thm4a"   ? Thm4Part::a
                    : theorem_id == "thm4b" ? Thm4Part::b
                    : theorem_id == "thm4c" ? Thm4Part::c
                                            : Thm4Part::d;
    return check_thm4(part, bounded_from(inputs, "v"), bounded_from(inputs, "u"), two_param(),
                      opt);
  }
  if (theorem_id == "cor2a" || theorem_id == "cor2b" || theorem_id == "cor2c" ||
      theorem_id == "cor2d") {
    Cor2Part part = theorem_id == "cor2a"   ? Cor2Part::A
                    : theorem_id == "cor2b" ? Cor2Part::B
                    : theorem_id == "cor2c" ? Cor2Part::C
                                            : Cor2Part::D;
    auto [v, vb] = const_bounded_from(inputs, "v");
    auto [u, ub] = const_bounded_from(inputs, "u");
    return check_cor2(part, v, u, vb, ub, two_param(), opt);
  }
  if (theorem_id == "dahmani") {
    auto [v, vb] = const_bounded_from(inputs, "v");
    auto [u, ub] = const_bounded_from(inputs, "u");
    return check_dahmani_remark(v, u, vb, ub, first, x, nodes, opt);
  }
  throw ParseError("unknown theorem id '" + theorem_id + "'");
}

}  // namespace fracgruss
