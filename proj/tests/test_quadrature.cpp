#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <thread>

#include "fracgruss/errors.hpp"
#include "fracgruss/quadrature.hpp"
#include "oracles.hpp"

using namespace fracgruss;
using oracles::rel_diff;

namespace {

// Independent moment oracle: int_0^1 (1-t)^a t^(b+j) dt = B(b+j+1, a+1).
double moment(double a, double b, int j) {
  return static_cast<double>(std::exp(oracles::oracle_log_beta(b + j + 1.0, a + 1.0)));
}

}  // namespace

TEST_CASE("one-point rule on the flat weight is the midpoint rule") {
  QuadratureRule r = jacobi_rule(1, 0.0, 0.0);
  CHECK(r.nodes[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(r.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("one-point rule reproduces the moment ratio") {
  for (double alpha : {0.3, 0.7, 1.0, 2.5}) {
    for (double eta : {-0.5, 0.0, 0.3, 1.2}) {
      double a = alpha - 1.0, b = eta;
      QuadratureRule r = jacobi_rule(1, a, b);
      CHECK(rel_diff(r.nodes[0], moment(a, b, 1) / moment(a, b, 0)) <= 1e-14);
      CHECK(rel_diff(r.nodes[0], (eta + 1.0) / (eta + alpha + 1.0)) <= 1e-14);
      CHECK(rel_diff(r.weights[0], moment(a, b, 0)) <= 1e-14);
    }
  }
}

TEST_CASE("two-point Gauss-Legendre on (0,1)") {
  QuadratureRule r = jacobi_rule(2, 0.0, 0.0);
  double root3 = std::sqrt(3.0);
  CHECK(r.nodes[0] == doctest::Approx((3.0 - root3) / 6.0).epsilon(1e-14));
  CHECK(r.nodes[1] == doctest::Approx((3.0 + root3) / 6.0).epsilon(1e-14));
  CHECK(r.weights[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(r.weights[1] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("rule invariants across exponent combinations") {
  for (std::size_t n : {1u, 2u, 5u, 16u, 64u}) {
    for (double a : {-0.7, -0.5, 0.0, 1.5}) {
      for (double b : {-0.9, -0.5, 0.0, 1.2, 2.0}) {
        QuadratureRule r = jacobi_rule(n, a, b);
        REQUIRE(r.nodes.size() == n);
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          CHECK(r.nodes[i] > 0.0);
          CHECK(r.nodes[i] < 1.0);
          if (i > 0) CHECK(r.nodes[i] > r.nodes[i - 1]);
          CHECK(r.weights[i] > 0.0);
          sum += r.weights[i];
        }
        CHECK(rel_diff(sum, moment(a, b, 0)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("degree 2n-1 exactness against the moment oracle") {
  for (std::size_t n : {3u, 5u, 8u}) {
    double a = -0.3, b = 1.2;
    QuadratureRule r = jacobi_rule(n, a, b);
    for (int j = 0; j <= static_cast<int>(2 * n - 1); ++j) {
      double quad = 0.0;
      for (std::size_t i = 0; i < n; ++i) quad += r.weights[i] * std::pow(r.nodes[i], j);
      CHECK(rel_diff(quad, moment(a, b, j)) <= 1e-12);
    }
  }
}

TEST_CASE("rule construction rejects bad arguments") {
  CHECK_THROWS_AS(jacobi_rule(0, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(jacobi_rule(4, -1.0, 0.0), DomainError);
  CHECK_THROWS_AS(jacobi_rule(4, 0.0, -1.5), DomainError);
}

TEST_CASE("cache returns shared immutable rules and is race-free") {
  auto r1 = cached_jacobi_rule(32, -0.5, 0.7);
  auto r2 = cached_jacobi_rule(32, -0.5, 0.7);
  CHECK(r1.get() == r2.get());

  std::vector<std::shared_ptr<const QuadratureRule>> results(16);
  std::vector<std::thread> pool;
  for (int i = 0; i < 16; ++i) {
    pool.emplace_back([&results, i] { results[i] = cached_jacobi_rule(48, 0.25, -0.25); });
  }
  for (auto& t : pool) t.join();
  for (int i = 1; i < 16; ++i) CHECK(results[i].get() == results[0].get());
}
