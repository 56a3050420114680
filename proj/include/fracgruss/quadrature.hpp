#pragma once

#include <cstddef>
#include <memory>
#include <vector>

namespace fracgruss {

/// Gauss rule for the Jacobi weight (1-t)^a t^b on (0,1).
/// Nodes are strictly increasing in (0,1), weights positive, and the weights
/// sum to the zeroth moment B(b+1, a+1).
struct QuadratureRule {
  std::size_t n;
  double a;  // exponent of (1-t)
  double b;  // exponent of t
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Build the n-point rule from the three-term Jacobi recurrence via the
/// eigendecomposition of the symmetric tridiagonal matrix (Golub-Welsch).
/// Exact to rounding for polynomial integrands of degree <= 2n-1.
/// Requires n >= 1, a > -1, b > -1.
QuadratureRule jacobi_rule(std::size_t n, double a, double b);

/// Rule from the process-wide cache keyed by (n, a, b). Rules are immutable;
/// access is race-free and does not change results.
std::shared_ptr<const QuadratureRule> cached_jacobi_rule(std::size_t n, double a, double b);

}  // namespace fracgruss
