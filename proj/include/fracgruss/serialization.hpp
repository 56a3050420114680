#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "fracgruss/harness.hpp"

namespace fracgruss {

/// Parse a suite config object:
///   {"theorems": ["thm1", ...] | "all", "trials": N, "master_seed": S,
///    "nodes": n, "families": ["polynomial", ...], "tolerance": t,
///    "x_max": X, "threads": T}
/// Every key is optional; unknown keys are rejected.
SuiteConfig suite_config_from_json(const nlohmann::json& j);
nlohmann::json suite_config_to_json(const SuiteConfig& config);

/// Per-check CSV rows with the fixed header
///   seed,theorem_id,lhs,rhs,slack,scale,holds
/// in the suite's deterministic check order.
void write_suite_csv(const SuiteReport& report, std::ostream& out);

/// Re-run a checker from a serialized case (the `inputs` object a CheckReport
/// carries, which is also what failed-case JSON lines embed). Throws
/// ParseError/PreconditionError on malformed or incomplete cases.
CheckReport run_check_from_case(const std::string& theorem_id, const nlohmann::json& inputs,
                                CheckOptions opt = {});

}  // namespace fracgruss
