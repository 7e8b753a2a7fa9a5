#include "luroth/rational.hpp"

#include <cmath>
#include <cstddef>

#include "luroth/errors.hpp"

namespace luroth {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Integer parse_integer(std::string s, const std::string& original) {
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.erase(0, 1);
  }
  if (!all_digits(s)) throw domain_error("not a rational number: '" + original + "'");
  Integer v(s);
  return neg ? -v : v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  if (s.empty()) throw domain_error("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer num = parse_integer(s.substr(0, slash), text);
    Integer den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw domain_error("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    bool neg = false;
    if (!ip.empty() && (ip[0] == '+' || ip[0] == '-')) {
      neg = ip[0] == '-';
      ip.erase(0, 1);
    }
    if (ip.empty()) ip = "0";
    if (fp.empty()) fp = "0";
    if (!all_digits(ip) || !all_digits(fp))
      throw domain_error("not a rational number: '" + text + "'");
    Integer scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    Rational v = Rational(Integer(ip)) + Rational(Integer(fp), scale);
    return neg ? -v : v;
  }
  return Rational(parse_integer(s, text));
}

std::string to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

namespace {

// log of a positive big integer via its top 53 bits.
double log_integer(const Integer& v) {
  std::size_t bits = msb(v);  // v >= 1
  if (bits <= 52) return std::log(v.convert_to<double>());
  std::size_t shift = bits - 52;
  double top = Integer(v >> shift).convert_to<double>();
  return std::log(top) + static_cast<double>(shift) * M_LN2;
}

}  // namespace

double log_rational(const Rational& x) {
  if (x <= 0) throw domain_error("log of a non-positive rational");
  return log_integer(numerator(x)) - log_integer(denominator(x));
}

std::string format_digits(const DigitString& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

DigitString parse_digits(const std::string& text) {
  DigitString out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    if (tok.empty()) throw domain_error("empty digit in '" + text + "'");
    try {
      std::size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size()) throw domain_error("bad digit '" + tok + "'");
      if (v < 2) throw domain_error("digit " + tok + " is < 2");
      out.push_back(v);
    } catch (const std::invalid_argument&) {
      throw domain_error("bad digit '" + tok + "'");
    } catch (const std::out_of_range&) {
      throw domain_error("digit out of range: '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw domain_error("empty digit string");
  return out;
}

}  // namespace luroth
