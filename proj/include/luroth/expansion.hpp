#pragma once

#include <cstddef>

#include "luroth/rational.hpp"

namespace luroth::expansion {

/// Left-open right-closed rational interval (left, right].
///
/// The orientation is forced by the digit formula: d1(1/2) = 3, so 1/2
/// belongs to the cylinder of digit 3, i.e. cylinders close on the right.
struct Interval {
  Rational left;
  Rational right;

  Rational length() const { return right - left; }
  bool contains(const Rational& x) const { return left < x && x <= right; }
};

/// One step of the Luroth map
///   T(x) = a(a+1)(x - 1/(a+1)),  a = floor(1/x),
/// evaluated exactly. Maps (0,1] onto (0,1]; T(1) = 1 and T(1/k) = 1.
Rational luroth_map(const Rational& x);

/// d1(x) = floor(1/x) + 1; always >= 2. Throws budget_error if the digit
/// would exceed 2^62 (denominators that large are outside practical use).
Digit first_digit(const Rational& x);

/// First n digits of x: d_k = d1(T^{k-1} x), exact iteration.
DigitString digits(const Rational& x, std::size_t n);

/// Partial sum of the expansion series for a finite word,
///   sum_i 1/(d1(d1-1)...d_{i-1}(d_{i-1}-1) d_i),
/// which equals the left endpoint of cylinder(word). Empty word -> 0 so
/// that cylinder endpoints compose recursively.
Rational evaluate(const DigitString& word);

/// Cylinder of the word: (evaluate(word), evaluate(word) + cylinder_length].
/// Every y whose first n digits equal the word lies in this interval.
Interval cylinder(const DigitString& word);

/// 1 / prod_i d_i(d_i - 1). Denominator bits grow linearly in the word
/// length (quadratically in digit size), so keep depths moderate.
Rational cylinder_length(const DigitString& word);

/// Lebesgue mass of the first digit: P(d1 = t) = 1/(t(t-1)).
Rational digit_mass(Digit t);

}  // namespace luroth::expansion
