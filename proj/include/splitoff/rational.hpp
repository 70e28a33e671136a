#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "splitoff/errors.hpp"

namespace splitoff {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational arithmetic for every cost, LP value and bound in this
// library. Always in lowest terms with a positive denominator; nothing is
// ever rounded.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rational_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt rational_den(const Rational& q) { return boost::multiprecision::denominator(q); }

// Canonical form: "p" when the denominator is 1, "p/q" otherwise.
std::string render_rational(const Rational& q);

// Accepts "p", "p/q" and exact decimals such as "-2.75" (converted exactly,
// e.g. "0.5" -> 1/2). Anything else throws ParseError.
Rational parse_rational(const std::string& text);

}  // namespace splitoff
