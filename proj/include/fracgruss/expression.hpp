#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace fracgruss {

namespace detail {
struct Expr;
}

/// An evaluable real function of one variable t on (0, X], stored as an
/// immutable expression tree. Trees serialize to a canonical prefix form,
///   (add (pow t 2) (const 1))
/// that round-trips bit-exactly, so cases are replayable from reports.
///
/// Node kinds: (const c), (var t), (pow t p), (add e...), (mul e...),
/// (scale c e), (sin e), (cos e), (exp e).
class FunctionSpec {
 public:
  static FunctionSpec constant(double c);
  static FunctionSpec variable();
  static FunctionSpec power(double exponent);  // t^p
  static FunctionSpec sum(std::vector<FunctionSpec> terms);
  static FunctionSpec product(std::vector<FunctionSpec> factors);
  static FunctionSpec scale(double c, FunctionSpec inner);
  static FunctionSpec sin_of(FunctionSpec inner);
  static FunctionSpec cos_of(FunctionSpec inner);
  static FunctionSpec exp_of(FunctionSpec inner);

  /// Parse the canonical prefix form. Throws ParseError on malformed input.
  static FunctionSpec parse(std::string_view text);

  /// Evaluate at tau. Deterministic; throws EvalError (carrying the offending
  /// subexpression) if any intermediate is non-finite.
  double operator()(double tau) const;

  /// Canonical textual form; FunctionSpec::parse(serialize()) reproduces the
  /// tree bit-exactly.
  std::string serialize() const;

  /// Structural equality (node-wise, constants compared bitwise).
  bool operator==(const FunctionSpec& other) const;
  bool operator!=(const FunctionSpec& other) const { return !(*this == other); }

  /// True when the tree is c * t^p (const, pow, scale and products thereof).
  /// On success writes the coefficient and exponent.
  bool as_monomial(double& coefficient, double& exponent) const;

 private:
  explicit FunctionSpec(std::shared_ptr<const detail::Expr> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::Expr> node_;
  friend struct detail::Expr;
};

/// Convenience builders used throughout harness and tests.
FunctionSpec operator+(const FunctionSpec& a, const FunctionSpec& b);
FunctionSpec operator-(const FunctionSpec& a, const FunctionSpec& b);
FunctionSpec operator*(const FunctionSpec& a, const FunctionSpec& b);
FunctionSpec operator*(double c, const FunctionSpec& f);

/// Shortest round-trip decimal form of a double (via std::to_chars); used for
/// the canonical serialization and all report/CSV number formatting.
std::string format_double(double value);

/// Inverse of format_double; throws ParseError if text is not one number.
double parse_double(std::string_view text);

/// An integrable function together with evaluable envelopes
/// lower(t) <= fn(t) <= upper(t) on the working interval.
struct BoundedFunction {
  FunctionSpec fn;
  FunctionSpec lower;
  FunctionSpec upper;

  /// Verify the envelope ordering on a dense grid x*j/grid, j=1..grid.
  /// Throws PreconditionError listing the first offending point.
  void certify(double x, std::size_t grid = 1024) const;
};

/// Constant bounds m <= f <= M.
struct ConstantBounds {
  double m;
  double M;

  ConstantBounds(double m_, double M_);
};

/// Verify m <= f(t) <= M on the dense grid; throws PreconditionError otherwise.
void certify_constant_bounds(const FunctionSpec& f, const ConstantBounds& b, double x,
                             std::size_t grid = 1024);

/// Min/max of f over the grid x*j/grid, j=1..grid.
ConstantBounds grid_extrema(const FunctionSpec& f, double x, std::size_t grid = 1024);

}  // namespace fracgruss
