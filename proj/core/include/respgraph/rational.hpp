#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace rg {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always kept in lowest terms with a positive
/// denominator; comparisons and arithmetic are exact.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "3", "-12", "-1.25" or "7/2" into an exact rational.
/// Throws Error{ParseError} on malformed input.
Rational parse_rational(std::string_view text);

/// Formats as "a" for integers, otherwise "a/b" with b > 0.
std::string format_rational(const Rational& value);

}  // namespace rg
