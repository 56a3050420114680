#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fracgruss/errors.hpp"
#include "fracgruss/operators.hpp"
#include "fracgruss/reductions.hpp"
#include "oracles.hpp"

using namespace fracgruss;
using oracles::rel_diff;

TEST_CASE("preset parameter tables") {
  OperatorParams rl = preset_params("riemann_liouville", 0.5);
  CHECK(rl == OperatorParams(1, 0.5, 0, 0, 0));

  OperatorParams kat = preset_params("katugampola", 2.0, 3.0);
  CHECK(kat == OperatorParams(3, 2, 2, 0, 0));

  OperatorParams ek = preset_params("erdelyi_kober", 1.0, 2.0, 0.5);
  CHECK(ek == OperatorParams(2, 1, 0, 0.5, -3));
}

TEST_CASE("limit-only reductions are rejected with a documented error") {
  for (const char* name : {"hadamard", "weyl", "liouville"}) {
    CHECK_THROWS_AS(preset_params(name, 1.0), UnsupportedReductionError);
  }
  CHECK_THROWS_AS(preset_params("unknown_kind", 1.0), UnsupportedReductionError);
  CHECK(reduction_presets().size() == 3);
}

TEST_CASE("classical RL oracle worked examples") {
  FunctionSpec one = FunctionSpec::constant(1.0);
  FunctionSpec t = FunctionSpec::variable();
  CHECK(rel_diff(classical_rl(one, 1.0, 3.0), 3.0) <= 1e-12);
  CHECK(rel_diff(classical_rl(t, 1.0, 1.0), 0.5) <= 1e-12);
  // 1/Gamma(1.5), frozen from the oracle.
  CHECK(rel_diff(classical_rl(one, 0.5, 1.0), 1.1283791670955126) <= 1e-12);
}

TEST_CASE("left integral under the RL preset matches the independent oracle") {
  std::vector<FunctionSpec> family = {
      FunctionSpec::parse("(pow t 2)"),
      FunctionSpec::parse("(add (const 1) (scale -0.7 (var t)) (scale 0.25 (pow t 3)))"),
      FunctionSpec::parse("(add (const 0.3) (scale 1.2 (sin (scale 2 (var t)))))"),
      FunctionSpec::parse("(add (scale 0.5 (cos (var t))) (scale 0.4 (exp (scale -0.8 (var t)))))"),
  };
  for (const FunctionSpec& f : family) {
    for (double alpha : {0.3, 0.5, 1.0, 1.5, 2.5}) {
      for (double x : {0.5, 1.0, 2.0}) {
        double generalized = left_integral(f, preset_params("riemann_liouville", alpha), x, 64).value;
        double direct = classical_rl(f, alpha, x, 64);
        CHECK(rel_diff(generalized, direct) <= 1e-10);
      }
    }
  }
}

TEST_CASE("erdelyi_kober normalizer is independent of x") {
  for (double alpha : {0.6, 1.0, 2.2}) {
    for (double rho : {0.5, 1.0, 2.0}) {
      for (double eta : {-0.4, 0.0, 1.1}) {
        OperatorParams ek = preset_params("erdelyi_kober", alpha, rho, eta);
        CHECK(ek.k + ek.rho * (ek.eta + ek.alpha) == doctest::Approx(0.0).epsilon(1e-14));
        double ref = static_cast<double>(std::exp(oracles::oracle_log_gamma(eta + 1.0) -
                                                  oracles::oracle_log_gamma(eta + alpha + 1.0)));
        for (double x : {0.5, 1.0, 2.0, 7.0}) {
          CHECK(rel_diff(lambda_value(ek, x), ref) <= 1e-13);
        }
      }
    }
  }
}
