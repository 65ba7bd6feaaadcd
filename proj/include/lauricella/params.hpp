#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lauricella/rational.hpp"

namespace lauricella {

// Parameter block of one F_D instance: upper parameter a, lower parameter c,
// and per-variable exponents b_1..b_N attached to arguments x_1..x_N.
template <class Scalar>
struct FdParams {
  Scalar a{};
  Scalar c{};
  std::vector<Scalar> b;
  std::vector<Scalar> x;

  int var_count() const { return static_cast<int>(x.size()); }

  void validate_shape() const {
    if (b.size() != x.size())
      throw std::invalid_argument("FdParams: b and x must have the same length");
  }
};

using FdParamsD = FdParams<double>;
using FdParamsQ = FdParams<Rational>;

template <class Scalar>
FdParams<double> to_double_params(const FdParams<Scalar>& q) {
  FdParams<double> out;
  out.a = to_double(q.a);
  out.c = to_double(q.c);
  out.b.reserve(q.b.size());
  out.x.reserve(q.x.size());
  for (const auto& v : q.b) out.b.push_back(to_double(v));
  for (const auto& v : q.x) out.x.push_back(to_double(v));
  return out;
}

// Removes coordinates with x_i = 0; the value of F_D is unchanged because the
// corresponding factor (1 - 0*t)^{-b_i} is identically 1.
template <class Scalar>
FdParams<Scalar> drop_zero_coordinates(const FdParams<Scalar>& q) {
  q.validate_shape();
  FdParams<Scalar> out;
  out.a = q.a;
  out.c = q.c;
  for (std::size_t i = 0; i < q.x.size(); ++i) {
    if (q.x[i] == Scalar(0)) continue;
    out.b.push_back(q.b[i]);
    out.x.push_back(q.x[i]);
  }
  return out;
}

struct SeriesConfig {
  double tol = 1e-12;         // absolute target for a degree layer
  int max_total_degree = 400;  // cap on i_1 + ... + i_N
};

struct QuadConfig {
  double target_rel_error = 1e-11;
  int max_levels = 12;  // grid-halving refinements
};

struct EvalResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::int64_t effort = 0;  // series terms represented or quadrature evaluations
  bool converged = true;
};

}  // namespace lauricella
