#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tlimm {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "p", "-p" and "p/q" with q != 0.  Throws ParseError otherwise.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q" in lowest terms.
std::string to_string(const Rational& value);

}  // namespace tlimm
