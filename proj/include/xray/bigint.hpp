#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace xray {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact binomial coefficient; 0 when k < 0 or k > n. Requires n >= 0.
BigInt binomial(long long n, long long k);

// n! for n >= 0.
BigInt factorial(long long n);

// base^exp by repeated squaring, exp >= 0.
BigInt ipow(const BigInt& base, unsigned long long exp);

// Accepts "p" or "p/q" with optional leading sign; q > 0 after normalization.
// Throws Error(parse_error) on anything else (including q == 0).
Rational parse_rational(const std::string& token);

// Inverse of parse_rational: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& r);

}  // namespace xray
