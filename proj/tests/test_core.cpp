#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "fracgruss/errors.hpp"
#include "fracgruss/expression.hpp"
#include "fracgruss/harness.hpp"
#include "fracgruss/params.hpp"
#include "fracgruss/special.hpp"
#include "oracles.hpp"

using namespace fracgruss;
using oracles::rel_diff;

TEST_CASE("log_gamma matches known values") {
  CHECK(std::abs(log_gamma(1.0)) <= 1e-15);
  CHECK(rel_diff(log_gamma(3.0), 0.6931471805599453) <= 1e-14);
  // Gamma(1.5) = sqrt(pi)/2; reference frozen from the long-double oracle.
  CHECK(rel_diff(log_gamma(1.5), -0.12078223763524522) <= 1e-14);
  CHECK(rel_diff(log_gamma(1.5), static_cast<double>(oracles::oracle_log_gamma(1.5L))) <= 1e-14);
}

TEST_CASE("log_gamma tracks the independent oracle on [0.5, 50]") {
  for (double x = 0.5; x <= 50.0; x += 0.37) {
    double ref = static_cast<double>(oracles::oracle_log_gamma(static_cast<long double>(x)));
    CHECK(rel_diff(log_gamma(x), ref) <= 1e-14);
  }
}

TEST_CASE("log_gamma satisfies the recurrence") {
  for (double x = 0.5; x <= 48.0; x += 0.31) {
    double lhs = log_gamma(x + 1.0);
    double rhs = log_gamma(x) + std::log(x);
    CHECK(std::abs(lhs - rhs) <= 1e-13 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("log_gamma rejects bad arguments") {
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-2.5), DomainError);
  CHECK_THROWS_AS(log_gamma(std::numeric_limits<double>::infinity()), DomainError);
  CHECK_THROWS_AS(log_gamma(std::numeric_limits<double>::quiet_NaN()), DomainError);
}

TEST_CASE("lambda_value worked examples") {
  CHECK(rel_diff(lambda_value(OperatorParams(1, 1, 0, 0, 0), 2.0), 2.0) <= 1e-15);
  CHECK(rel_diff(lambda_value(OperatorParams(1, 2, 0, 0, 0), 1.0), 0.5) <= 1e-15);
  // 2^{-0.3} Gamma(1.5)/Gamma(2.2), frozen from the oracle.
  OperatorParams p(2.0, 0.7, 0.3, 0.5, 1.0);
  CHECK(rel_diff(lambda_value(p, 1.0), 0.6533293851420497) <= 1e-14);
  double ref = std::pow(2.0, -0.3) *
               static_cast<double>(std::exp(oracles::oracle_log_gamma(1.5L) -
                                            oracles::oracle_log_gamma(2.2L)));
  CHECK(rel_diff(lambda_value(p, 1.0), ref) <= 1e-14);
}

TEST_CASE("lambda_value is positive on the whole parameter range") {
  SplitMix64 rng{2024};
  for (int i = 0; i < 500; ++i) {
    OperatorParams p(rng.uniform(0.4, 2.5), rng.uniform(0.2, 3.0), rng.uniform(-1.5, 1.5),
                     rng.uniform(-0.9, 2.0), rng.uniform(-1.5, 1.5));
    CHECK(lambda_value(p, rng.uniform(0.3, 2.0)) > 0.0);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(OperatorParams(0.0, 1, 0, 0, 0), DomainError);
  CHECK_THROWS_AS(OperatorParams(-1, 1, 0, 0, 0), DomainError);
  CHECK_THROWS_AS(OperatorParams(1, 0, 0, 0, 0), DomainError);
  CHECK_THROWS_AS(OperatorParams(1, 1, 0, -1.0, 0), DomainError);
  CHECK_THROWS_AS(OperatorParams(1, 1, std::nan(""), 0, 0), DomainError);
  CHECK_THROWS_AS(lambda_value(OperatorParams(1, 1, 0, 0, 0), 0.0), DomainError);
  CHECK_THROWS_AS(lambda_value(OperatorParams(1, 1, 0, 0, 0), -1.0), DomainError);
}

TEST_CASE("expression evaluation worked examples") {
  CHECK(FunctionSpec::power(2.0)(3.0) == doctest::Approx(9.0).epsilon(1e-15));
  CHECK(FunctionSpec::constant(1.0)(0.1) == 1.0);
  FunctionSpec f = FunctionSpec::variable() + FunctionSpec::sin_of(FunctionSpec::variable());
  double half_pi = 1.5707963267948966;
  CHECK(rel_diff(f(half_pi), 2.5707963267948966) <= 1e-15);
}

TEST_CASE("canonical serialization round-trips bit-exactly") {
  const char* text = "(add (pow t 2) (const 1))";
  FunctionSpec f = FunctionSpec::parse(text);
  CHECK(f.serialize() == text);
  CHECK(FunctionSpec::parse(f.serialize()) == f);

  // Awkward constants keep their bits through the round trip.
  for (double c : {0.1, -0.0, 1e-17, 3.0000000000000004, -123456.789e-300, 2.5e17}) {
    FunctionSpec g = FunctionSpec::scale(c, FunctionSpec::power(c));
    FunctionSpec h = FunctionSpec::parse(g.serialize());
    CHECK(h == g);
    CHECK(h.serialize() == g.serialize());
  }
}

TEST_CASE("random generated trees round-trip and evaluate identically") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    for (CaseFamily family : all_families()) {
      GeneratedCase gc = generate_case(derive_trial_seed(99, seed), family, 2.0);
      for (const FunctionSpec& f : {gc.v.fn, gc.v.lower, gc.v.upper, gc.u.fn}) {
        FunctionSpec g = FunctionSpec::parse(f.serialize());
        CHECK(g == f);
        CHECK(g.serialize() == f.serialize());
        for (double tau : {0.1, 0.5, 1.0, 1.9}) {
          CHECK(g(tau) == f(tau));
        }
      }
    }
  }
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(FunctionSpec::parse("(add"), ParseError);
  CHECK_THROWS_AS(FunctionSpec::parse("(var x)"), ParseError);
  CHECK_THROWS_AS(FunctionSpec::parse("(pow (var t) 2)"), ParseError);
  CHECK_THROWS_AS(FunctionSpec::parse("(foo 1)"), ParseError);
  CHECK_THROWS_AS(FunctionSpec::parse("(const 1) extra"), ParseError);
  CHECK_THROWS_AS(FunctionSpec::parse(""), ParseError);
  CHECK_THROWS_AS(FunctionSpec::parse("(const nope)"), ParseError);
  CHECK_THROWS_AS(FunctionSpec::parse("(add (const 1))"), ParseError);
}

TEST_CASE("evaluation errors carry the offending subexpression") {
  FunctionSpec f = FunctionSpec::exp_of(FunctionSpec::scale(1000.0, FunctionSpec::variable()));
  try {
    (void)f(1.0);
    FAIL("expected EvalError");
  } catch (const EvalError& e) {
    CHECK(e.subexpression() == "(exp (scale 1000 (var t)))");
  }
}

TEST_CASE("structural equality is decidable and strict") {
  FunctionSpec a = FunctionSpec::parse("(add (var t) (const 1))");
  FunctionSpec b = FunctionSpec::parse("(add (var t) (const 1))");
  FunctionSpec c = FunctionSpec::parse("(add (const 1) (var t))");
  CHECK(a == b);
  CHECK(a != c);
  CHECK(FunctionSpec::scale(2.0, FunctionSpec::variable()) !=
        FunctionSpec::scale(2.0000001, FunctionSpec::variable()));
}

TEST_CASE("monomial detection") {
  double c = 0, e = 0;
  CHECK(FunctionSpec::constant(3.5).as_monomial(c, e));
  CHECK(c == 3.5);
  CHECK(e == 0.0);
  CHECK(FunctionSpec::variable().as_monomial(c, e));
  CHECK(e == 1.0);
  CHECK(FunctionSpec::scale(3.0, FunctionSpec::power(2.0)).as_monomial(c, e));
  CHECK(c == 3.0);
  CHECK(e == 2.0);
  CHECK((FunctionSpec::variable() * FunctionSpec::power(1.5)).as_monomial(c, e));
  CHECK(e == 2.5);
  CHECK_FALSE(FunctionSpec::sin_of(FunctionSpec::variable()).as_monomial(c, e));
}

TEST_CASE("bound certification on the dense grid") {
  FunctionSpec t = FunctionSpec::variable();
  BoundedFunction good{t, t - FunctionSpec::constant(0.5), t + FunctionSpec::constant(0.5)};
  CHECK_NOTHROW(good.certify(1.0));

  BoundedFunction bad{t, FunctionSpec::constant(1.0), FunctionSpec::constant(2.0)};
  CHECK_THROWS_AS(bad.certify(1.0), PreconditionError);

  CHECK_THROWS_AS(ConstantBounds(2.0, 1.0), DomainError);
  CHECK_NOTHROW(certify_constant_bounds(t, ConstantBounds(0.0, 1.0), 1.0));
  CHECK_THROWS_AS(certify_constant_bounds(t, ConstantBounds(0.0, 0.5), 1.0),
                  PreconditionError);
}

TEST_CASE("grid extrema") {
  ConstantBounds b = grid_extrema(FunctionSpec::variable(), 1.0, 1024);
  CHECK(b.m == doctest::Approx(1.0 / 1024).epsilon(1e-12));
  CHECK(b.M == 1.0);
}
