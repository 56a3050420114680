#pragma once

#include <stdexcept>
#include <string>

namespace fracgruss {

/// Argument outside the mathematical domain of an operation (x <= 0, alpha <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A function evaluation produced a non-finite intermediate. Carries the
/// offending subexpression in canonical text form.
class EvalError : public std::runtime_error {
 public:
  EvalError(std::string subexpression, double at)
      : std::runtime_error("non-finite value while evaluating " + subexpression +
                           " at t=" + std::to_string(at)),
        subexpression_(std::move(subexpression)) {}

  const std::string& subexpression() const noexcept { return subexpression_; }

 private:
  std::string subexpression_;
};

/// Malformed function text or report/config JSON.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A checker precondition failed (uncertified bounds, mismatched parameter packs, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A quantity that is provably nonnegative came out below -tol*scale.
/// Raised instead of clamping: it flags a genuine violation.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested a reduction preset that only exists as a parameter limit.
class UnsupportedReductionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace fracgruss
