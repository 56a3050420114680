#include "fracgruss/params.hpp"

#include <cmath>

#include "fracgruss/errors.hpp"
#include "fracgruss/expression.hpp"
#include "fracgruss/special.hpp"

namespace fracgruss {

OperatorParams::OperatorParams(double rho_, double alpha_, double beta_, double eta_, double k_)
    : rho(rho_), alpha(alpha_), beta(beta_), eta(eta_), k(k_) {
  if (!std::isfinite(rho) || !std::isfinite(alpha) || !std::isfinite(beta) ||
      !std::isfinite(eta) || !std::isfinite(k)) {
    throw DomainError("operator parameters must be finite");
  }
  if (rho <= 0.0) throw DomainError("rho must be positive, got " + format_double(rho));
  if (alpha <= 0.0) throw DomainError("alpha must be positive, got " + format_double(alpha));
  if (eta <= -1.0) {
    throw DomainError("eta must exceed -1 for the kernel to be integrable at 0, got " +
                      format_double(eta));
  }
}

std::string OperatorParams::describe() const {
  return "(rho=" + format_double(rho) + ", alpha=" + format_double(alpha) +
         ", beta=" + format_double(beta) + ", eta=" + format_double(eta) +
         ", k=" + format_double(k) + ")";
}

double lambda_value(const OperatorParams& p, double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("lambda_value requires x > 0, got " + format_double(x));
  }
  double gamma_ratio = std::exp(log_gamma(p.eta + 1.0) - log_gamma(p.eta + p.alpha + 1.0));
  return gamma_ratio * std::pow(p.rho, -p.beta) * std::pow(x, p.k + p.rho * (p.eta + p.alpha));
}

}  // namespace fracgruss
