#pragma once

#include <cstddef>

#include "fracgruss/expression.hpp"
#include "fracgruss/params.hpp"
#include "fracgruss/report.hpp"

namespace fracgruss {

/// One evaluated operator value together with the rule size it used.
struct OperatorResult {
  double value;
  std::size_t rule_size;
  OperatorParams params;
  double x;
};

/// Left-sided generalized fractional integral of f at x (lower limit 0):
///
///   rho^{1-beta} x^k / Gamma(alpha) *
///     int_0^x t^{rho(eta+1)-1} (x^rho - t^rho)^{alpha-1} f(t) dt.
///
/// The substitution t = (tau/x)^rho turns the kernel into the Jacobi weight
/// (1-t)^{alpha-1} t^eta exactly, so the value is computed as
///   rho^{-beta} x^{k+rho(eta+alpha)} / Gamma(alpha) * sum_i w_i f(x t_i^{1/rho})
/// with the n-point rule for that weight. Exact (to rounding) when f is a
/// polynomial in tau^rho of degree d and n >= ceil((d+1)/2).
OperatorResult left_integral(const FunctionSpec& f, const OperatorParams& p, double x,
                             std::size_t n = kDefaultNodes);

/// Right-sided operator on [x, b], 0 < x < b:
///
///   rho^{1-beta} x^{rho eta} / Gamma(alpha) *
///     int_x^b t^{k+rho-1} (t^rho - x^rho)^{alpha-1} f(t) dt.
///
/// The substitution u = (t^rho - x^rho)/(b^rho - x^rho) maps the singular
/// factor to u^{alpha-1}; the remaining factor t^{k+rho-1} dt/du collapses to
/// t(u)^k (b^rho - x^rho)/rho, evaluated per node of the (0, alpha-1) rule.
OperatorResult right_integral(const FunctionSpec& f, const OperatorParams& p, double x, double b,
                              std::size_t n = kDefaultNodes);

/// Exact value of the left-sided operator on f(t) = t^{rho s}:
///   rho^{-beta} x^{k+rho(eta+alpha+s)} Gamma(eta+s+1)/Gamma(eta+s+alpha+1).
/// Requires x > 0 and eta + s + 1 > 0. The s = 0 case is lambda_value.
double power_closed_form(double s, const OperatorParams& p, double x);

/// Check the left-sided composition law on a monomial f(t) = c t^{rho s}
/// (integer s >= 0): applying the p2 operator then the p1 operator equals the
/// fused operator with order alpha1+alpha2, weight exponent beta1+beta2,
/// index eta2 and prefactor exponent k1 — provided p2.k = -p1.rho*p1.eta and
/// p1.rho = p2.rho. lhs is the two-step closed form, rhs the fused closed
/// form, slack their relative residual against max(|lhs|,|rhs|,1).
CheckReport check_composition(const FunctionSpec& f, const OperatorParams& p1,
                              const OperatorParams& p2, double x, std::size_t n = kDefaultNodes,
                              double tol = kDefaultTol);

}  // namespace fracgruss
