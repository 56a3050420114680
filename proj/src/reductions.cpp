#include "fracgruss/reductions.hpp"

#include <algorithm>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>

#include "fracgruss/errors.hpp"
#include "fracgruss/special.hpp"

namespace fracgruss {

const std::vector<Preset>& reduction_presets() {
  static const std::vector<Preset> presets = {
      {"riemann_liouville", "rho=1, eta=0, k=0, beta=0"},
      {"katugampola", "beta=alpha, k=0, eta=0 (rho free)"},
      {"erdelyi_kober", "beta=0, k=-rho*(alpha+eta) (rho, eta free)"},
  };
  return presets;
}

OperatorParams preset_params(const std::string& name, double alpha, double rho, double eta) {
  if (name == "riemann_liouville") {
    return OperatorParams(1.0, alpha, 0.0, 0.0, 0.0);
  }
  if (name == "katugampola") {
    return OperatorParams(rho, alpha, alpha, 0.0, 0.0);
  }
  if (name == "erdelyi_kober") {
    return OperatorParams(rho, alpha, 0.0, eta, -rho * (alpha + eta));
  }
  if (name == "hadamard" || name == "weyl" || name == "liouville") {
    throw UnsupportedReductionError(
        "unsupported reduction '" + name +
        "': it is reached only as a parameter limit, not by a finite parameter "
        "assignment, and the limit prescription is ambiguous; supported presets are "
        "riemann_liouville, katugampola, erdelyi_kober");
  }
  throw UnsupportedReductionError("unknown reduction preset '" + name + "'");
}

double classical_rl(const FunctionSpec& f, double alpha, double x, std::size_t n) {
  if (!std::isfinite(alpha) || alpha <= 0.0) {
    throw DomainError("classical_rl requires alpha > 0");
  }
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("classical_rl requires x > 0");
  }
  if (n < 1) throw DomainError("node count must be at least 1");

  // Refinement depth grows with the requested resolution; level 12 already
  // places abscissae double-exponentially close to both endpoints.
  auto levels = static_cast<std::size_t>(
      std::clamp<double>(std::ceil(std::log2(static_cast<double>(n))) + 6.0, 8.0, 15.0));
  boost::math::quadrature::tanh_sinh<double> integrator(levels);

  // The second argument is x - tau (positive) when tau is nearest the upper
  // endpoint, which is exactly the singular gap; elsewhere the direct
  // difference is cancellation-free.
  auto integrand = [&](double tau, double tc) {
    double gap = tc > 0 ? tc : x - tau;
    return std::pow(gap, alpha - 1.0) * f(tau);
  };
  double value = integrator.integrate(integrand, 0.0, x, 1e-13) / std::tgamma(alpha);
  if (!std::isfinite(value)) throw EvalError("classical_rl of " + f.serialize(), x);
  return value;
}

}  // namespace fracgruss
