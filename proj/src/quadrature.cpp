#include "fracgruss/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "fracgruss/errors.hpp"
#include "fracgruss/expression.hpp"
#include "fracgruss/special.hpp"

namespace fracgruss {

namespace {

// Recurrence coefficients of the monic Jacobi polynomials for the weight
// (1-s)^a (1+s)^b on (-1,1):  p_{k+1} = (s - alpha_k) p_k - beta_k p_{k-1}.
double recurrence_diag(std::size_t k, double a, double b) {
  if (k == 0) return (b - a) / (a + b + 2.0);
  double n2ab = 2.0 * static_cast<double>(k) + a + b;
  return (b * b - a * a) / (n2ab * (n2ab + 2.0));
}

double recurrence_offdiag_sq(std::size_t k, double a, double b) {
  // beta_k for k >= 1; k = 1 uses the cancelled form, which stays finite
  // when a + b = -1.
  double kk = static_cast<double>(k);
  if (k == 1) {
    return 4.0 * (a + 1.0) * (b + 1.0) / ((a + b + 2.0) * (a + b + 2.0) * (a + b + 3.0));
  }
  double n2ab = 2.0 * kk + a + b;
  return 4.0 * kk * (kk + a) * (kk + b) * (kk + a + b) /
         (n2ab * n2ab * (n2ab + 1.0) * (n2ab - 1.0));
}

}  // namespace

QuadratureRule jacobi_rule(std::size_t n, double a, double b) {
  if (n < 1) throw DomainError("jacobi_rule requires n >= 1");
  if (!(a > -1.0) || !std::isfinite(a)) {
    throw DomainError("jacobi_rule requires a > -1, got " + format_double(a));
  }
  if (!(b > -1.0) || !std::isfinite(b)) {
    throw DomainError("jacobi_rule requires b > -1, got " + format_double(b));
  }

  // Zeroth moment of the weight on (0,1).
  double m0 = std::exp(log_beta(a + 1.0, b + 1.0));

  QuadratureRule rule;
  rule.n = n;
  rule.a = a;
  rule.b = b;
  rule.nodes.resize(n);
  rule.weights.resize(n);

  if (n == 1) {
    rule.nodes[0] = (1.0 + recurrence_diag(0, a, b)) / 2.0;
    rule.weights[0] = m0;
    return rule;
  }

  Eigen::VectorXd diag(static_cast<Eigen::Index>(n));
  Eigen::VectorXd offdiag(static_cast<Eigen::Index>(n) - 1);
  for (std::size_t i = 0; i < n; ++i) {
    diag[static_cast<Eigen::Index>(i)] = recurrence_diag(i, a, b);
  }
  for (std::size_t i = 1; i < n; ++i) {
    offdiag[static_cast<Eigen::Index>(i - 1)] = std::sqrt(recurrence_offdiag_sq(i, a, b));
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, offdiag, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw EvalError("jacobi_rule tridiagonal eigensolve", static_cast<double>(n));
  }

  for (std::size_t i = 0; i < n; ++i) {
    auto idx = static_cast<Eigen::Index>(i);
    double xi = solver.eigenvalues()[idx];                   // node on (-1,1)
    double q0 = solver.eigenvectors()(0, idx);               // first component
    rule.nodes[i] = (1.0 + xi) / 2.0;
    rule.weights[i] = m0 * q0 * q0;
  }
  return rule;
}

std::shared_ptr<const QuadratureRule> cached_jacobi_rule(std::size_t n, double a, double b) {
  using Key = std::tuple<std::size_t, double, double>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const QuadratureRule>> cache;

  Key key{n, a, b};
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto rule = std::make_shared<const QuadratureRule>(jacobi_rule(n, a, b));
  cache.emplace(key, rule);
  return rule;
}

}  // namespace fracgruss
