#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace fracgruss {

inline constexpr double kDefaultTol = 1e-10;
inline constexpr std::size_t kDefaultNodes = 64;
inline constexpr std::size_t kDefaultCertGrid = 1024;

/// Outcome of one identity or inequality check.
///
/// For an "lhs <= rhs" statement, slack = rhs - lhs and the verdict is
/// holds = (slack >= -tol*scale). For an identity, lhs/rhs are the two sides,
/// slack = |lhs - rhs| and holds = (slack <= tol*scale). scale is
/// max(1, max |term|) over the constituent terms, so verdicts are meaningful
/// across magnitudes.
struct CheckReport {
  std::string theorem_id;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double scale = 1.0;
  double tol = kDefaultTol;
  bool holds = false;
  std::uint64_t seed = 0;
  nlohmann::json inputs = nlohmann::json::object();

  double normalized_slack() const { return slack / scale; }

  /// Stable-field JSON object: theorem_id, lhs, rhs, slack, scale, tol,
  /// holds, seed, inputs.
  nlohmann::json to_json() const;
};

/// scale = max(1, max |terms|).
double report_scale(const std::vector<double>& terms);

CheckReport make_inequality_report(std::string theorem_id, double lesser, double greater,
                                   const std::vector<double>& terms, double tol);

CheckReport make_identity_report(std::string theorem_id, double lhs, double rhs,
                                 const std::vector<double>& terms, double tol);

}  // namespace fracgruss
