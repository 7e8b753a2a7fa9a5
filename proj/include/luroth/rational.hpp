#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace luroth {

using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in lowest terms with positive
/// denominator by the backend. Carrier for points of (0,1] and interval
/// endpoints; all expansion arithmetic is exact.
using Rational = boost::multiprecision::cpp_rational;

/// Expansion digit. Always >= 2 for valid Luroth digits; int64 is plenty:
/// the first digit of p/q is bounded by q+1 and we reject inputs whose
/// digits would not fit (see expansion::first_digit).
using Digit = std::int64_t;

/// Finite digit word. Entries >= 2.
using DigitString = std::vector<Digit>;

/// Parses "p/q", a plain integer, or a decimal string ("0.25" -> 1/4).
/// Throws domain_error on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// "p/q" in lowest terms; plain "p" when the denominator is 1.
std::string to_string(const Rational& x);

double to_double(const Rational& x);

/// Natural log of a positive rational. Safe for values far outside the
/// double range (log is taken on numerator and denominator separately).
double log_rational(const Rational& x);

/// Comma-separated decimal serialization, e.g. "3,2,2".
std::string format_digits(const DigitString& word);

/// Inverse of format_digits. Validates every entry >= 2.
DigitString parse_digits(const std::string& text);

}  // namespace luroth
