#pragma once

// Unbounded integers and exact rationals used by every bound computation.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace multbound {

// Expression templates off: values are plain, so `auto` and `?:` behave.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
/// Always normalized: lowest terms, positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

inline BigInt pow_int(BigInt base, unsigned exponent) {
  BigInt result = 1;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

/// num/den with the sign moved to the numerator; the Boost 1.74 rational
/// backend throws on a negative denominator.
inline Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

/// base^exponent for a possibly negative exponent.
inline Rational pow_signed(const BigInt& base, int exponent) {
  if (exponent >= 0) return Rational(pow_int(base, static_cast<unsigned>(exponent)));
  if (base == 0) throw std::domain_error("pow_signed: zero to a negative power");
  return make_rational(BigInt(1), pow_int(base, static_cast<unsigned>(-exponent)));
}

inline BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

inline std::string to_string(const BigInt& value) { return value.str(); }

/// "p" for integral values, "p/q" otherwise.
inline std::string to_string(const Rational& value) {
  const BigInt& den = boost::multiprecision::denominator(value);
  if (den == 1) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(BigInt(text));
  return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

/// Natural logarithm of a positive big integer without overflowing binary64.
inline double log_of(const BigInt& value) {
  if (value <= 0) throw std::domain_error("log_of: non-positive argument");
  const unsigned bits = boost::multiprecision::msb(value) + 1;
  if (bits <= 1000) return std::log(value.convert_to<double>());
  const unsigned shift = bits - 64;
  const BigInt top = value >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

inline double log_of(const Rational& value) {
  return log_of(boost::multiprecision::numerator(value)) -
         log_of(boost::multiprecision::denominator(value));
}

/// Shortest round-trippable decimal text for a double, independent of locale.
inline std::string format_double(double value) {
  char buffer[40];
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buffer, sizeof buffer, "%.*g", precision, value);
    if (std::strtod(buffer, nullptr) == value) break;
  }
  return buffer;
}

}  // namespace multbound
