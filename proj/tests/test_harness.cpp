#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "fracgruss/errors.hpp"
#include "fracgruss/harness.hpp"
#include "fracgruss/serialization.hpp"

using namespace fracgruss;

namespace {

nlohmann::json report_sans_time(const SuiteReport& r) {
  nlohmann::json j = r.to_json();
  j.erase("wall_time_s");
  return j;
}

std::string csv_of(const SuiteReport& r) {
  std::ostringstream out;
  write_suite_csv(r, out);
  return out.str();
}

}  // namespace

TEST_CASE("trial seeds are deterministic and index-dependent") {
  CHECK(derive_trial_seed(42, 0) == derive_trial_seed(42, 0));
  CHECK(derive_trial_seed(42, 0) != derive_trial_seed(42, 1));
  CHECK(derive_trial_seed(42, 0) != derive_trial_seed(43, 0));
}

TEST_CASE("case generation is deterministic in the seed") {
  GeneratedCase a = generate_case(1, CaseFamily::polynomial, 2.0);
  GeneratedCase b = generate_case(1, CaseFamily::polynomial, 2.0);
  CHECK(a.v.fn.serialize() == b.v.fn.serialize());
  CHECK(a.v.lower.serialize() == b.v.lower.serialize());
  CHECK(a.u.upper.serialize() == b.u.upper.serialize());
  CHECK(a.params.first == b.params.first);
  CHECK(a.params.second == b.params.second);
  CHECK(a.params.x == b.params.x);

  GeneratedCase c = generate_case(2, CaseFamily::polynomial, 2.0);
  CHECK(a.v.fn.serialize() != c.v.fn.serialize());
}

TEST_CASE("constant family pins the envelopes to the function") {
  GeneratedCase gc = generate_case(0, CaseFamily::constant, 2.0);
  CHECK(gc.v.fn == gc.v.lower);
  CHECK(gc.v.fn == gc.v.upper);
}

TEST_CASE("generated envelopes certify on the dense grid") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    for (CaseFamily family : all_families()) {
      GeneratedCase gc = generate_case(derive_trial_seed(3, seed), family, 2.0);
      CHECK_NOTHROW(gc.v.certify(gc.params.x, 1024));
      CHECK_NOTHROW(gc.u.certify(gc.params.x, 1024));
      CHECK(gc.params.first.eta > -1.0);
      CHECK(gc.params.x >= 0.3);
      CHECK(gc.params.x <= 2.0);
    }
  }
}

TEST_CASE("empty suite") {
  SuiteConfig config;
  config.trials = 0;
  SuiteReport r = run_suite(config);
  CHECK(r.total == 0);
  CHECK(r.passed == 0);
  CHECK(r.failures.empty());
  CHECK(r.all_hold());
}

TEST_CASE("small suite passes across all theorems") {
  SuiteConfig config;
  config.trials = 20;
  config.master_seed = 7;
  SuiteReport r = run_suite(config);
  CHECK(r.total == 20 * known_theorem_ids().size());
  CHECK(r.passed == r.total);
  CHECK(r.failures.empty());
  CHECK(r.max_residual <= 1e-10);
}

TEST_CASE("suite counting stays consistent when checks fail") {
  SuiteConfig config;
  config.trials = 6;
  config.theorems = {"lemma1", "thm1"};
  config.tolerance = 1e-18;  // below float noise: identity residuals must fail
  SuiteReport r = run_suite(config);
  CHECK(r.total == 12);
  CHECK(r.passed + r.failures.size() == r.total);
  CHECK(!r.failures.empty());
  for (const auto& f : r.failures) CHECK(f.theorem_id == "lemma1");

  // failed rows appear in the CSV with holds=false
  std::string csv = csv_of(r);
  CHECK(csv.find("false") != std::string::npos);
  CHECK(csv.rfind("seed,theorem_id,lhs,rhs,slack,scale,holds\n", 0) == 0);
}

TEST_CASE("failed cases replay to the same numbers") {
  SuiteConfig config;
  config.trials = 4;
  config.theorems = {"lemma2"};
  config.tolerance = 1e-18;
  SuiteReport r = run_suite(config);
  REQUIRE(!r.failures.empty());
  const auto& f = r.failures.front();
  CheckReport replay = run_check_from_case(f.theorem_id, f.inputs);
  CHECK(replay.slack == f.slack);
}

TEST_CASE("identical configs give byte-identical reports; threads do not matter") {
  SuiteConfig config;
  config.trials = 12;
  config.master_seed = 99;
  config.families = {CaseFamily::polynomial, CaseFamily::trig_poly, CaseFamily::exp_mix};

  SuiteReport serial1 = run_suite(config);
  SuiteReport serial2 = run_suite(config);
  config.threads = 4;
  SuiteReport parallel = run_suite(config);

  CHECK(report_sans_time(serial1).dump() == report_sans_time(serial2).dump());
  CHECK(report_sans_time(serial1).dump() == report_sans_time(parallel).dump());
  CHECK(csv_of(serial1) == csv_of(serial2));
  CHECK(csv_of(serial1) == csv_of(parallel));
}

TEST_CASE("suite config parsing") {
  SuiteConfig c = suite_config_from_json(nlohmann::json::parse(
      R"({"theorems":["thm1","lemma2"],"trials":5,"master_seed":11,"nodes":32,
          "families":["constant","exp_mix"],"tolerance":1e-9,"x_max":1.5,"threads":2})"));
  CHECK(c.theorems == std::vector<std::string>{"thm1", "lemma2"});
  CHECK(c.trials == 5);
  CHECK(c.master_seed == 11);
  CHECK(c.nodes == 32);
  CHECK(c.families.size() == 2);
  CHECK(c.tolerance.value() == 1e-9);
  CHECK(c.x_max == 1.5);
  CHECK(c.threads == 2);

  CHECK(suite_config_from_json(nlohmann::json::parse(R"({"theorems":"all"})")).theorems.empty());

  CHECK_THROWS_AS(suite_config_from_json(nlohmann::json::parse(R"({"bogus":1})")), ParseError);
  CHECK_THROWS_AS(suite_config_from_json(nlohmann::json::parse(R"({"families":["nope"]})")),
                  ParseError);
  CHECK_THROWS_AS(suite_config_from_json(nlohmann::json::parse(R"({"trials":-3})")), ParseError);
  CHECK_THROWS_AS(suite_config_from_json(nlohmann::json::parse(R"({"tolerance":0})")),
                  ParseError);
}

TEST_CASE("unknown theorem ids are rejected up front") {
  SuiteConfig config;
  config.trials = 1;
  config.theorems = {"thm9"};
  CHECK_THROWS_AS(run_suite(config), ParseError);
}

TEST_CASE("config round-trip keeps the fields") {
  SuiteConfig c;
  c.theorems = {"thm3"};
  c.trials = 9;
  c.tolerance = 1e-8;
  SuiteConfig back = suite_config_from_json(suite_config_to_json(c));
  CHECK(back.theorems == c.theorems);
  CHECK(back.trials == c.trials);
  CHECK(back.tolerance.value() == 1e-8);
}
