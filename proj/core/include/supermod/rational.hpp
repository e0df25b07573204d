#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace supermod {

// Exact payoff values. GMP keeps every value in lowest terms with a positive
// denominator.
using Rational = mpq_class;

// Accepts "[-]digits", "[-]digits/digits" and "[-]digits.digits". Throws
// kParseError for anything else, including exponents and a zero denominator.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

}  // namespace supermod
