#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace lauricella {

// Dense univariate polynomial, coefficients stored lowest degree first.
// Exact when Scalar is Rational; no trailing zero coefficients are kept.
template <class Scalar>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(Scalar v) { return Poly(std::vector<Scalar>{std::move(v)}); }

  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }
  const std::vector<Scalar>& coeffs() const { return c_; }

  Scalar eval(const Scalar& t) const {
    Scalar acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly l, const Poly& r) { return l += r; }
  friend Poly operator-(Poly l, const Poly& r) { return l -= r; }

  friend Poly operator*(const Poly& l, const Poly& r) {
    if (l.c_.empty() || r.c_.empty()) return Poly();
    std::vector<Scalar> out(l.c_.size() + r.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < l.c_.size(); ++i)
      for (std::size_t j = 0; j < r.c_.size(); ++j) out[i + j] += l.c_[i] * r.c_[j];
    return Poly(std::move(out));
  }

  Poly operator*(const Scalar& s) const {
    std::vector<Scalar> out = c_;
    for (auto& v : out) v *= s;
    return Poly(std::move(out));
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Scalar> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Scalar(static_cast<int>(i));
    return Poly(std::move(out));
  }

  // this(inner(u)), Horner over polynomial arithmetic.
  Poly compose(const Poly& inner) const {
    Poly acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * inner + constant(c_[i]);
    return acc;
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Scalar(0)) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

}  // namespace lauricella
