#include <doctest.h>

#include "luroth/errors.hpp"
#include "luroth/expansion.hpp"
#include "luroth/rng.hpp"

using namespace luroth;
using namespace luroth::expansion;

namespace {
Rational rat(long long p, long long q) { return Rational(Integer(p), Integer(q)); }
}

TEST_CASE("luroth map on rationals") {
  CHECK(luroth_map(Rational(1)) == Rational(1));  // fixed point
  CHECK(luroth_map(rat(1, 2)) == Rational(1));    // 2*3*(1/2 - 1/3)
  CHECK(luroth_map(rat(2, 3)) == rat(1, 3));      // 1*2*(2/3 - 1/2)
  CHECK(luroth_map(rat(1, 7)) == Rational(1));    // 1/k maps to 1
  CHECK_THROWS_AS(luroth_map(Rational(0)), domain_error);
  CHECK_THROWS_AS(luroth_map(rat(3, 2)), domain_error);
  CHECK_THROWS_AS(luroth_map(rat(-1, 2)), domain_error);
}

TEST_CASE("first digit") {
  CHECK(first_digit(Rational(1)) == 2);
  CHECK(first_digit(rat(1, 2)) == 3);
  CHECK(first_digit(rat(2, 3)) == 2);
  CHECK(first_digit(rat(1, 3)) == 4);
  CHECK_THROWS_AS(first_digit(Rational(2)), domain_error);
}

TEST_CASE("digit strings of known points") {
  CHECK(digits(Rational(1), 4) == DigitString{2, 2, 2, 2});
  CHECK(digits(rat(2, 3), 4) == DigitString{2, 4, 2, 2});
  CHECK(digits(rat(1, 2), 3) == DigitString{3, 2, 2});
}

TEST_CASE("evaluate partial sums") {
  CHECK(evaluate({}) == Rational(0));
  CHECK(evaluate({3}) == rat(1, 3));
  CHECK(evaluate({2, 4}) == rat(5, 8));  // 1/2 + 1/(2*1*4)
  // appending 2s walks the partial sums to the right endpoint 1/2 of [3]
  CHECK(evaluate({3, 2, 2}) == rat(11, 24));
  CHECK(rat(1, 2) - evaluate({3, 2, 2}) == cylinder_length({3, 2, 2}));
  CHECK_THROWS_AS(evaluate({1}), domain_error);
}

TEST_CASE("cylinders") {
  Interval i2 = cylinder({2});
  CHECK(i2.left == rat(1, 2));
  CHECK(i2.right == Rational(1));
  Interval i3 = cylinder({3});
  CHECK(i3.left == rat(1, 3));
  CHECK(i3.right == rat(1, 2));
  CHECK(i3.length() == rat(1, 6));
  // half-open orientation: 1/2 has first digit 3, so it belongs to [3] not [2]
  CHECK(i3.contains(rat(1, 2)));
  CHECK(!i2.contains(rat(1, 2)));
  Interval i24 = cylinder({2, 4});
  CHECK(i24.left == rat(5, 8));
  CHECK(i24.right == rat(2, 3));  // 5/8 + 1/(2*1*4*3)
  CHECK_THROWS_AS(cylinder({}), domain_error);
}

TEST_CASE("cylinder lengths") {
  CHECK(cylinder_length({2}) == rat(1, 2));
  CHECK(cylinder_length({2, 2, 2}) == rat(1, 8));
  CHECK(cylinder_length({3, 4}) == rat(1, 72));
}

TEST_CASE("digit mass telescopes") {
  CHECK(digit_mass(2) == rat(1, 2));
  CHECK(digit_mass(3) == rat(1, 6));
  CHECK_THROWS_AS(digit_mass(1), domain_error);
  Rational sum = 0;
  for (Digit t = 2; t <= 100; ++t) sum += digit_mass(t);
  CHECK(sum == Rational(1) - rat(1, 100));
}

TEST_CASE("round trip: x lies in the cylinder of its digits") {
  Rng rng(20240901);
  for (int trial = 0; trial < 60; ++trial) {
    const std::int64_t q = rng.uniform_int(2, 100000);
    const std::int64_t p = rng.uniform_int(1, q);
    const Rational x = rat(p, q);
    const DigitString w = digits(x, 12);
    for (std::size_t n = 1; n <= w.size(); ++n) {
      DigitString prefix(w.begin(), w.begin() + n);
      CHECK(cylinder(prefix).contains(x));
    }
  }
}

TEST_CASE("nesting and exact partition of child cylinders") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    DigitString w;
    for (int i = 0, len = static_cast<int>(rng.uniform_int(1, 5)); i < len; ++i)
      w.push_back(rng.uniform_int(2, 9));
    const Interval parent = cylinder(w);
    const std::int64_t T = 40;
    Rational total = 0;
    for (Digit d = 2; d <= T; ++d) {
      DigitString child = w;
      child.push_back(d);
      const Interval ci = cylinder(child);
      CHECK(parent.left <= ci.left);
      CHECK(ci.right <= parent.right);
      total += cylinder_length(child);
    }
    CHECK(total == cylinder_length(w) * (Rational(1) - rat(1, T)));
  }
}

TEST_CASE("conjugacy: digits shift under the map") {
  Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const std::int64_t q = rng.uniform_int(2, 5000);
    const Rational x = rat(rng.uniform_int(1, q), q);
    const DigitString full = digits(x, 9);
    const DigitString shifted = digits(luroth_map(x), 8);
    CHECK(DigitString(full.begin() + 1, full.end()) == shifted);
  }
}
