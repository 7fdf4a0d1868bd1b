#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace cohsys {

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Accepts "p", "-p", "p/q" (q != 0), surrounding whitespace ignored.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long long num, long long den = 1) { return Rational(num, den); }

}  // namespace cohsys
