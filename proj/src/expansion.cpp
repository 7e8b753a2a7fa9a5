#include "luroth/expansion.hpp"

#include "luroth/errors.hpp"

namespace luroth::expansion {

namespace {

void require_unit(const Rational& x) {
  if (x <= 0 || x > 1) throw domain_error("point must lie in (0,1], got " + to_string(x));
}

void require_digit(Digit d) {
  if (d < 2) throw domain_error("digit " + std::to_string(d) + " is < 2");
}

// floor(1/x) for x in (0,1]: integer division of denominator by numerator.
Integer inverse_floor(const Rational& x) { return denominator(x) / numerator(x); }

}  // namespace

Rational luroth_map(const Rational& x) {
  require_unit(x);
  Integer a = inverse_floor(x);
  // a(a+1)(x - 1/(a+1)) = a(a+1)x - a
  Rational y = Rational(a * (a + 1)) * x - Rational(a);
  return y;
}

Digit first_digit(const Rational& x) {
  require_unit(x);
  Integer a = inverse_floor(x);
  if (a >= (Integer(1) << 62))
    throw budget_error("digit exceeds 2^62; input too close to zero");
  return a.convert_to<Digit>() + 1;
}

DigitString digits(const Rational& x, std::size_t n) {
  require_unit(x);
  DigitString out;
  out.reserve(n);
  Rational y = x;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(first_digit(y));
    y = luroth_map(y);
  }
  return out;
}

Rational evaluate(const DigitString& word) {
  Rational acc = 0;
  Integer prefix = 1;  // d1(d1-1)...d_{i-1}(d_{i-1}-1)
  for (Digit d : word) {
    require_digit(d);
    acc += Rational(Integer(1), prefix * d);
    prefix *= Integer(d) * (d - 1);
  }
  return acc;
}

Interval cylinder(const DigitString& word) {
  if (word.empty()) throw domain_error("cylinder of the empty word");
  Rational left = evaluate(word);
  return Interval{left, left + cylinder_length(word)};
}

Rational cylinder_length(const DigitString& word) {
  if (word.empty()) throw domain_error("cylinder length of the empty word");
  Integer den = 1;
  for (Digit d : word) {
    require_digit(d);
    den *= Integer(d) * (d - 1);
  }
  return Rational(Integer(1), den);
}

Rational digit_mass(Digit t) {
  require_digit(t);
  return Rational(Integer(1), Integer(t) * (t - 1));
}

}  // namespace luroth::expansion
