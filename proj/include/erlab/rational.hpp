#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace erlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "a/b", an integer, or a finite decimal such as "0.25" exactly.
Rational parse_rational(std::string_view text);

/// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& r);
double to_double(const Rational& r);

/// Exact test of lhs >= base^exponent for lhs >= 0, base >= 1.
/// With exponent a/b (b > 0) this compares lhs^b against base^a.
bool at_least_power(const Rational& lhs, std::int64_t base, const Rational& exponent);

/// Least integer m >= 0 with m >= base^exponent.
std::int64_t ceil_power(std::int64_t base, const Rational& exponent);

/// Smallest integer >= r and largest integer <= r.
BigInt ceil(const Rational& r);
BigInt floor(const Rational& r);

}  // namespace erlab
