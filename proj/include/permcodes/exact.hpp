#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace permcodes {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt ipow(const BigInt& base, unsigned exponent);

/// Smallest integer >= x.
BigInt ceil(const Rational& x);
/// Largest integer <= x.
BigInt floor(const Rational& x);

Rational make_rational(const BigInt& num, const BigInt& den);

/// "num/den", or just "num" when the denominator is one.
std::string to_string(const Rational& x);
std::string to_string(const BigInt& x);

/// Decimal rendering with `digits` significant digits, rounded half-up.
/// Plain notation for moderate magnitudes, `d.ddddde+XX` otherwise.
std::string format_significant(const Rational& x, int digits);

/// Parses "a", "a/b" or a terminating decimal such as "0.75".
Rational parse_rational(const std::string& text);

} // namespace permcodes
