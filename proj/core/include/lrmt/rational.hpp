#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace lrmt {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer ipow(const Integer& base, std::uint64_t exponent);
Rational rpow(const Rational& base, std::uint64_t exponent);
Integer factorial(std::uint64_t n);
Integer binomial(std::uint64_t n, std::uint64_t k);

/// Decimal over-approximation of e with 50 fractional digits (rounded up).
const Rational& e_upper_bound();

/// Parses "3", "-2/7" or "0.125" into an exact rational.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Nearest double; only for reporting, never for verified comparisons.
double to_double(const Rational& value);

/// Smallest m / 2^bits with m / 2^bits >= value.
Rational round_up_dyadic(const Rational& value, unsigned bits);

}  // namespace lrmt
