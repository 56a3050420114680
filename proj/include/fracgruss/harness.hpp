#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fracgruss/inequalities.hpp"

namespace fracgruss {

/// Families of generated test functions. Envelopes are constructed as
/// v -/+ c*(1+t^2) with c >= 0, so the bound conditions hold by algebra
/// (no rejection sampling); the constant family uses zero margins.
enum class CaseFamily { constant, monomial, polynomial, trig_poly, exp_mix };

std::string family_name(CaseFamily f);
CaseFamily family_from_name(const std::string& name);
const std::vector<CaseFamily>& all_families();

/// Deterministic 64-bit generator (splitmix64); the whole harness draws
/// through this so case streams are reproducible across platforms.
struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next();
  double uniform();  // [0, 1)
  double uniform(double lo, double hi);
  std::uint64_t below(std::uint64_t bound);
};

/// Per-trial seed: splitmix64 finalizer of master_seed xor golden-ratio
/// multiples of (index+1). Independent of execution order.
std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t index);

/// One generated trial: two certified bounded functions and an evaluation
/// context drawn from the documented grid ranges
///   alpha, delta in [0.2, 3], rho in [0.4, 2.5], eta in (-0.9, 2],
///   beta, lambda, k in [-1.5, 1.5], x in [0.3, x_max].
struct GeneratedCase {
  BoundedFunction v;
  BoundedFunction u;
  TwoParamCase params;
  std::uint64_t seed;
};

GeneratedCase generate_case(std::uint64_t seed, CaseFamily family, double x_max,
                            std::size_t nodes = kDefaultNodes);

/// Theorem ids runnable by the suite, in canonical order.
const std::vector<std::string>& known_theorem_ids();
bool is_identity_check(const std::string& theorem_id);

/// Run one named checker on a generated case. Constant-bound checkers use
/// grid extrema of the generated functions. Throws on unknown id.
CheckReport run_check(const std::string& theorem_id, const GeneratedCase& gc,
                      CheckOptions opt = {});

struct SuiteConfig {
  std::vector<std::string> theorems;  // empty means all known ids
  std::size_t trials = 100;
  std::uint64_t master_seed = 42;
  std::size_t nodes = kDefaultNodes;
  std::vector<CaseFamily> families = {CaseFamily::polynomial, CaseFamily::trig_poly};
  std::optional<double> tolerance;
  double x_max = 2.0;
  std::size_t threads = 1;
};

struct SuiteReport {
  struct Failure {
    std::uint64_t seed = 0;
    std::string theorem_id;
    double slack = 0.0;
    nlohmann::json inputs;
  };

  std::size_t total = 0;   // number of (case, checker) executions
  std::size_t passed = 0;  // passed + failures.size() == total
  std::vector<Failure> failures;
  double max_residual = 0.0;  // worst normalized residual/violation seen
  double wall_time_s = 0.0;
  std::vector<CheckReport> checks;  // per (trial, theorem), deterministic order

  bool all_hold() const { return failures.empty(); }
  nlohmann::json to_json() const;  // stable fields; excludes the per-check list
};

/// Execute every named checker on every generated case. Per-trial seeds come
/// from derive_trial_seed, families cycle by trial index, and results are
/// aggregated by index, so serial and parallel runs produce identical
/// reports (wall time aside). Checker precondition failures are recorded as
/// failed cases, not crashes.
SuiteReport run_suite(const SuiteConfig& config);

}  // namespace fracgruss
