#pragma once

#include <string>

namespace fracgruss {

/// Parameter pack (rho, alpha, beta, eta, k) of the generalized fractional
/// operator. A second instance carries the (delta, lambda) pair of the
/// two-parameter results in its alpha/beta slots.
///
/// Validity: rho > 0, alpha > 0, eta > -1 (integrability of the kernel
/// factor t^{rho(eta+1)-1} at 0), all fields finite. beta and k are free.
struct OperatorParams {
  double rho;
  double alpha;
  double beta;
  double eta;
  double k;

  OperatorParams(double rho_, double alpha_, double beta_, double eta_, double k_);

  bool operator==(const OperatorParams&) const = default;

  std::string describe() const;
};

/// Closed-form value of the operator applied to the constant-one function:
///   Gamma(eta+1)/Gamma(eta+alpha+1) * rho^{-beta} * x^{k+rho(eta+alpha)}.
/// The fractional analogue of interval length. Requires x > 0.
double lambda_value(const OperatorParams& p, double x);

}  // namespace fracgruss
