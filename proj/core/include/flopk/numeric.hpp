#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace flopk {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer& value) { return value.str(); }

/// "p/q" or "p" when the denominator is one.
std::string to_string(const Rational& value);

/// Parses "p" or "p/q" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

Integer parse_integer(const std::string& text);

inline bool is_integral(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

inline Integer factorial(int n) {
  Integer result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

}  // namespace flopk
