#include "fracgruss/report.hpp"

#include <algorithm>
#include <cmath>

namespace fracgruss {

nlohmann::json CheckReport::to_json() const {
  return nlohmann::json{{"theorem_id", theorem_id}, {"lhs", lhs},     {"rhs", rhs},
                        {"slack", slack},           {"scale", scale}, {"tol", tol},
                        {"holds", holds},           {"seed", seed},   {"inputs", inputs}};
}

double report_scale(const std::vector<double>& terms) {
  double s = 1.0;
  for (double t : terms) s = std::max(s, std::abs(t));
  return s;
}

CheckReport make_inequality_report(std::string theorem_id, double lesser, double greater,
                                   const std::vector<double>& terms, double tol) {
  CheckReport r;
  r.theorem_id = std::move(theorem_id);
  r.lhs = lesser;
  r.rhs = greater;
  r.scale = report_scale(terms);
  r.tol = tol;
  r.slack = greater - lesser;
  r.holds = r.slack >= -tol * r.scale;
  return r;
}

CheckReport make_identity_report(std::string theorem_id, double lhs, double rhs,
                                 const std::vector<double>& terms, double tol) {
  CheckReport r;
  r.theorem_id = std::move(theorem_id);
  r.lhs = lhs;
  r.rhs = rhs;
  r.scale = report_scale(terms);
  r.tol = tol;
  r.slack = std::abs(lhs - rhs);
  r.holds = r.slack <= tol * r.scale;
  return r;
}

}  // namespace fracgruss
