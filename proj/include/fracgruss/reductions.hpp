#pragma once

#include <string>
#include <vector>

#include "fracgruss/expression.hpp"
#include "fracgruss/params.hpp"
#include "fracgruss/report.hpp"

namespace fracgruss {

/// Named parameter assignments reducing the generalized operator to a
/// classical fractional integral:
///   riemann_liouville: rho=1, eta=0, k=0, beta=0
///   katugampola:       beta=alpha, k=0, eta=0      (rho free)
///   erdelyi_kober:     beta=0, k=-rho*(alpha+eta)  (rho, eta free)
/// hadamard, weyl and liouville exist only as parameter limits and are
/// rejected with UnsupportedReductionError.
struct Preset {
  std::string name;
  std::string description;
};

const std::vector<Preset>& reduction_presets();

/// Parameters for the named preset. Inputs that a preset fixes are ignored
/// (riemann_liouville ignores rho and eta; katugampola ignores eta).
OperatorParams preset_params(const std::string& name, double alpha, double rho = 1.0,
                             double eta = 0.0);

/// Independently coded Riemann-Liouville value
///   1/Gamma(alpha) * int_0^x (x - t)^{alpha-1} f(t) dt,
/// used as the oracle behind the reduction-consistency checks. Shares no
/// operator code with left_integral: the raw integrand goes through
/// tanh-sinh quadrature, with n bounding the refinement depth.
double classical_rl(const FunctionSpec& f, double alpha, double x, std::size_t n = kDefaultNodes);

}  // namespace fracgruss
