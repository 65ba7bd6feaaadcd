#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace lauricella {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational scalar. Kept in lowest terms with a positive
// denominator by the backend; every operation is exact.
using Rational = boost::multiprecision::cpp_rational;

// Builds num/den with the sign moved to the numerator. The raw two-argument
// cpp_rational constructor rejects negative denominators.
inline Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

inline Rational rational_div(const Rational& a, const Rational& b) {
  if (b == 0) throw std::domain_error("rational: division by zero");
  return a / b;
}

// Integer power, negative exponents allowed for a nonzero base.
template <class Scalar>
Scalar pow_int(const Scalar& base, int e) {
  if (e < 0) {
    if (base == Scalar(0)) throw std::domain_error("pow_int: negative power of zero");
    return Scalar(1) / pow_int(base, -e);
  }
  Scalar acc(1);
  Scalar b = base;
  for (unsigned k = static_cast<unsigned>(e); k != 0; k >>= 1) {
    if (k & 1u) acc *= b;
    if (k >> 1) b *= b;
  }
  return acc;
}

inline double to_double(double v) { return v; }
inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Parses "n", "n/d", or a plain decimal string ("-0.25" -> -1/4) exactly.
inline Rational parse_rational(std::string_view s) {
  auto bad = [&] { return std::invalid_argument("parse_rational: bad input '" + std::string(s) + "'"); };
  if (s.empty()) throw bad();
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (num.empty() || den.empty()) throw bad();
    return make_rational(BigInt(std::string(num)), BigInt(std::string(den)));
  }
  bool neg = false;
  if (s.front() == '+' || s.front() == '-') {
    neg = s.front() == '-';
    s.remove_prefix(1);
    if (s.empty()) throw bad();
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false;
  for (char ch : s) {
    if (ch == '.') {
      if (seen_dot) throw bad();
      seen_dot = true;
      continue;
    }
    if (ch < '0' || ch > '9') throw bad();
    digits.push_back(ch);
    if (seen_dot) ++frac_digits;
  }
  if (digits.empty()) throw bad();
  BigInt num(digits);
  if (neg) num = -num;
  BigInt den = 1;
  for (long i = 0; i < frac_digits; ++i) den *= 10;
  return make_rational(num, den);
}

}  // namespace lauricella
