#include "fracgruss/special.hpp"

#include <cmath>
#include <string>

#include "fracgruss/errors.hpp"

namespace fracgruss {

double log_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("log_gamma requires finite x > 0, got " + std::to_string(x));
  }
  // lgamma_r instead of std::lgamma: the latter writes the global signgam.
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

double log_beta(double a, double b) {
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

}  // namespace fracgruss
