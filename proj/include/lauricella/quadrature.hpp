#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include "lauricella/params.hpp"

namespace lauricella {

struct QuadResult {
  double value = 0.0;
  double abs_error = std::numeric_limits<double>::infinity();
  int levels = 0;
  std::int64_t evals = 0;
  bool converged = false;
};

namespace detail {

// tanh-sinh node on (0,1): t(u) = 1/(1 + exp(-pi*sinh u)).
// Computes t and 1-t separately so endpoint distances stay accurate, and the
// weight via dt/du = pi*cosh(u)*t*(1-t).
struct TanhSinhNode {
  double t;
  double one_minus_t;
  double weight;
  bool usable;  // false once t or 1-t drops below the representable range
};

inline TanhSinhNode tanh_sinh_node(double u) {
  constexpr double pi = 3.14159265358979323846;
  // below this the power t^(beta) of a near -1 exponent overflows; the true
  // contribution out there is negligible for exponents bounded away from -1
  constexpr double min_coord = 1e-280;
  const double s = pi * std::sinh(u);
  const double e = std::exp(-std::fabs(s));
  const double near = e / (1.0 + e);
  const double far = 1.0 / (1.0 + e);
  TanhSinhNode n;
  n.t = (s >= 0) ? far : near;
  n.one_minus_t = (s >= 0) ? near : far;
  n.usable = near >= min_coord;
  n.weight = pi * std::cosh(u) * near * far;
  return n;
}

}  // namespace detail

// Tanh-sinh (double-exponential) quadrature of f over (0,1). The integrand is
// called as f(t, one_minus_t); algebraic endpoint singularities t^p (1-t)^q
// with p, q > -1 are handled by the transformation itself. The error estimate
// is the difference between the last two refinement levels.
template <class F>
QuadResult integrate01(F&& f, const QuadConfig& cfg = {}) {
  constexpr double u_hard_limit = 7.5;
  QuadResult res;

  auto node_value = [&](double u) -> double {
    const auto n = detail::tanh_sinh_node(u);
    if (!n.usable) return 0.0;
    ++res.evals;
    return n.weight * f(n.t, n.one_minus_t);
  };

  // Sums one side of a level: u = start, start + step, ... Stops once three
  // consecutive contributions fall below thresh (double-exponential decay
  // makes anything past that negligible).
  auto sweep = [&](double start, double step, double thresh) -> double {
    double acc = 0.0;
    int small_run = 0;
    for (double u = start; u <= u_hard_limit; u += step) {
      const double c = node_value(u);
      acc += c;
      if (std::fabs(c) <= thresh) {
        if (++small_run >= 3) break;
      } else {
        small_run = 0;
      }
    }
    return acc;
  };

  // level 0: h = 1
  double h = 1.0;
  double crude = node_value(0.0);
  crude += sweep(1.0, 1.0, 1e-16 * std::fabs(crude));
  crude += sweep(-1.0, -1.0, 1e-16 * std::fabs(crude));
  double estimate = h * crude;
  double level_sum = crude;

  for (int level = 1; level <= cfg.max_levels; ++level) {
    h *= 0.5;
    const double thresh = 1e-16 * std::fabs(estimate) / h;
    double odd = sweep(h, 2.0 * h, thresh) + sweep(-h, -2.0 * h, thresh);
    level_sum = level_sum + odd;
    const double next = h * level_sum;
    res.abs_error = std::fabs(next - estimate);
    estimate = next;
    res.levels = level;
    if (res.abs_error <= cfg.target_rel_error * std::fabs(estimate)) {
      res.converged = true;
      break;
    }
  }

  res.value = estimate;
  return res;
}

}  // namespace lauricella
