#pragma once

#include <cmath>
#include <stdexcept>

namespace lauricella {

// log Gamma(x) for x > 0.
inline double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
  return std::lgamma(x);
}

inline double log_beta(double u, double v) {
  if (!(u > 0.0) || !(v > 0.0)) throw std::domain_error("beta: requires u > 0 and v > 0");
  return std::lgamma(u) + std::lgamma(v) - std::lgamma(u + v);
}

// B(u, v), evaluated in log space so large parameter shifts cannot overflow
// intermediates.
inline double beta_value(double u, double v) { return std::exp(log_beta(u, v)); }

}  // namespace lauricella
