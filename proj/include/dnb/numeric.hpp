#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace dnb {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Throws ParseError on malformed input.
Integer parse_integer(std::string_view text);

// Accepts `p`, `p/q`, with optional sign; the result is in lowest terms.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);

// `p/q` in lowest terms, or `p` when the denominator is 1.
std::string to_string(const Rational& value);

}  // namespace dnb
