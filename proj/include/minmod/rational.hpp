#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace minmod {

/// Exact arbitrary-precision integer.
using Int = boost::multiprecision::cpp_int;

/// Exact rational, always stored in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Formats an exact rational as "num/den" ("num" when the denominator is 1).
std::string to_string(const Rational& x);

std::string to_string(const Int& x);

/// Parses "num" or "num/den" (optional leading '-').
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Largest integer <= x.
Int rational_floor(const Rational& x);

/// Smallest integer >= x.
Int rational_ceil(const Rational& x);

/// Checked narrowing; throws std::overflow_error when out of range.
std::int64_t to_int64(const Int& x);

}  // namespace minmod
