#pragma once

#include <cstddef>
#include <vector>

namespace lauricella {

// Elementary symmetric polynomials sigma_l(y_1..y_k) with the closed
// boundary conventions sigma_0 = 1 (also for an empty argument list) and
// sigma_l = 0 for l < 0 or l > k.

// All of sigma_0..sigma_k at once, O(k^2), absorbing one variable at a time:
// sigma_l(y, ys) = y*sigma_{l-1}(ys) + sigma_l(ys).
template <class Scalar>
std::vector<Scalar> elem_sym_all(const std::vector<Scalar>& ys) {
  std::vector<Scalar> sig(ys.size() + 1, Scalar(0));
  sig[0] = Scalar(1);
  std::size_t used = 0;
  for (const Scalar& y : ys) {
    ++used;
    for (std::size_t l = used; l >= 1; --l) sig[l] += y * sig[l - 1];
  }
  return sig;
}

template <class Scalar>
Scalar elem_sym(long l, const std::vector<Scalar>& ys) {
  if (l == 0) return Scalar(1);
  if (l < 0 || l > static_cast<long>(ys.size())) return Scalar(0);
  return elem_sym_all(ys)[static_cast<std::size_t>(l)];
}

}  // namespace lauricella
