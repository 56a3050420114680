#include "fracgruss/operators.hpp"

#include <cmath>

#include "fracgruss/errors.hpp"
#include "fracgruss/quadrature.hpp"
#include "fracgruss/special.hpp"

namespace fracgruss {

namespace {

void require_positive_x(double x, const char* who) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError(std::string(who) + " requires x > 0, got " + format_double(x));
  }
}

void require_nodes(std::size_t n) {
  if (n < 1) throw DomainError("node count must be at least 1");
}

bool close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

OperatorResult left_integral(const FunctionSpec& f, const OperatorParams& p, double x,
                             std::size_t n) {
  require_positive_x(x, "left_integral");
  require_nodes(n);

  auto rule = cached_jacobi_rule(n, p.alpha - 1.0, p.eta);
  double inv_rho = 1.0 / p.rho;
  long double acc = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    double tau = x * std::pow(rule->nodes[i], inv_rho);
    acc += static_cast<long double>(rule->weights[i]) * f(tau);
  }
  double prefactor = std::pow(p.rho, -p.beta) *
                     std::pow(x, p.k + p.rho * (p.eta + p.alpha)) / std::tgamma(p.alpha);
  double value = prefactor * static_cast<double>(acc);
  if (!std::isfinite(value)) throw EvalError("left_integral of " + f.serialize(), x);
  return OperatorResult{value, n, p, x};
}

OperatorResult right_integral(const FunctionSpec& f, const OperatorParams& p, double x, double b,
                              std::size_t n) {
  if (!std::isfinite(x) || !std::isfinite(b) || x <= 0.0 || x >= b) {
    throw DomainError("right_integral requires 0 < x < b, got x=" + format_double(x) +
                      " b=" + format_double(b));
  }
  require_nodes(n);

  auto rule = cached_jacobi_rule(n, 0.0, p.alpha - 1.0);
  double xr = std::pow(x, p.rho);
  double span = std::pow(b, p.rho) - xr;  // b^rho - x^rho > 0
  double inv_rho = 1.0 / p.rho;
  long double acc = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    double tau = std::pow(xr + rule->nodes[i] * span, inv_rho);
    acc += static_cast<long double>(rule->weights[i]) * std::pow(tau, p.k) * f(tau);
  }
  double prefactor = std::pow(p.rho, -p.beta) * std::pow(x, p.rho * p.eta) *
                     std::pow(span, p.alpha) / std::tgamma(p.alpha);
  double value = prefactor * static_cast<double>(acc);
  if (!std::isfinite(value)) throw EvalError("right_integral of " + f.serialize(), x);
  return OperatorResult{value, n, p, x};
}

double power_closed_form(double s, const OperatorParams& p, double x) {
  require_positive_x(x, "power_closed_form");
  if (!std::isfinite(s) || p.eta + s + 1.0 <= 0.0) {
    throw DomainError("power_closed_form requires eta + s + 1 > 0, got s=" + format_double(s) +
                      " with " + p.describe());
  }
  double gamma_ratio = std::exp(log_gamma(p.eta + s + 1.0) - log_gamma(p.eta + s + p.alpha + 1.0));
  return gamma_ratio * std::pow(p.rho, -p.beta) *
         std::pow(x, p.k + p.rho * (p.eta + p.alpha + s));
}

CheckReport check_composition(const FunctionSpec& f, const OperatorParams& p1,
                              const OperatorParams& p2, double x, std::size_t n, double tol) {
  require_positive_x(x, "check_composition");
  require_nodes(n);
  if (!close(p1.rho, p2.rho, 1e-12)) {
    throw PreconditionError("composition requires both operators to share rho");
  }
  double required_k2 = -p1.rho * p1.eta;
  if (!close(p2.k, required_k2, 1e-12)) {
    throw PreconditionError("composition requires inner k = -rho*eta of the outer operator (" +
                            format_double(required_k2) + "), got " + format_double(p2.k));
  }
  double coeff = 0.0, exponent = 0.0;
  if (!f.as_monomial(coeff, exponent)) {
    throw PreconditionError("composition check needs a monomial c*t^(rho*s): " + f.serialize());
  }
  double s = exponent / p1.rho;
  if (s < -1e-9 || std::abs(s - std::round(s)) > 1e-9) {
    throw PreconditionError("monomial exponent must be rho*s for integer s >= 0, got exponent " +
                            format_double(exponent));
  }
  s = std::round(s);

  // Inner operator on c*t^{rho s} is again a monomial: coefficient below,
  // exponent rho*s' with s' = k2/rho + eta2 + alpha2 + s.
  double inner_coeff = coeff * std::pow(p2.rho, -p2.beta) *
                       std::exp(log_gamma(p2.eta + s + 1.0) - log_gamma(p2.eta + s + p2.alpha + 1.0));
  double s_outer = p2.k / p1.rho + p2.eta + p2.alpha + s;

  double lhs = inner_coeff * power_closed_form(s_outer, p1, x);

  OperatorParams fused(p1.rho, p1.alpha + p2.alpha, p1.beta + p2.beta, p2.eta, p1.k);
  double rhs = coeff * power_closed_form(s, fused, x);

  CheckReport report = make_identity_report("comp", lhs, rhs, {lhs, rhs}, tol);
  report.inputs = {{"fn", f.serialize()},
                   {"x", x},
                   {"nodes", n},
                   {"s", s},
                   {"outer", {{"rho", p1.rho},
                              {"alpha", p1.alpha},
                              {"beta", p1.beta},
                              {"eta", p1.eta},
                              {"k", p1.k}}},
                   {"inner", {{"rho", p2.rho},
                              {"alpha", p2.alpha},
                              {"beta", p2.beta},
                              {"eta", p2.eta},
                              {"k", p2.k}}}};
  return report;
}

}  // namespace fracgruss
