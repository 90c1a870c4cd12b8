#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace envymin {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational in canonical form: denominator > 0, gcd(num, den) = 1.
// boost keeps the canonical form on every operation.
using Rational = boost::multiprecision::cpp_rational;

// Raised on malformed user input (files, flags, preconditions).
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an enumeration would exceed its node budget. Carries the bound.
struct budget_error : std::runtime_error {
  budget_error(const std::string& what, long long limit)
      : std::runtime_error(what), limit(limit) {}
  long long limit;
};

// Accepts "p", "p/q" (q > 0 after sign normalization) and plain decimals
// like "-3.25". Anything else is an input_error.
Rational parse_rational(const std::string& text);

// "p" when the denominator is 1, otherwise "p/q" in lowest terms.
std::string format_rational(const Rational& x);

// Six decimal places, truncated toward zero beyond the sixth.
std::string format_decimal6(const Rational& x);

inline Rational rational_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

// Values scaled by lcm(denominators) so envy arithmetic can run in int64.
// nullopt when any n*n-fold sum of scaled differences could overflow.
std::optional<std::vector<std::int64_t>> scale_to_int64(const std::vector<Rational>& values);

// Same scaling, arbitrary precision, never fails.
std::vector<BigInt> scale_to_bigint(const std::vector<Rational>& values);

}  // namespace envymin
