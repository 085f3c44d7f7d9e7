#include "dnb/numeric.hpp"

#include <cctype>

#include "dnb/error.hpp"

namespace dnb {

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw ParseError("malformed integer '" + std::string(text) + "'");
  }
  Integer value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("malformed integer '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  Integer den = parse_integer(den_text);
  if (den == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const Integer& den = boost::multiprecision::denominator(value);
  const Integer& num = boost::multiprecision::numerator(value);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

}  // namespace dnb
