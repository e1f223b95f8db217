#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace grossone {

// Exact rational of unbounded size. Always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

// Builds a canonical rational from numerator/denominator. Throws
// std::domain_error on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den = 1);

// "a" or "a/b" in lowest terms.
std::string to_string(const Rational& value);

// Accepts "12", "-3/4" and plain decimals such as "45.2" or "-0.125".
// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

// Parses a non-negative base-10 integer without sign or whitespace.
Integer parse_natural(std::string_view text);

// Round half up to `decimals` places and print with exactly that many
// fractional digits ("51.8", "0.0").
std::string to_fixed(const Rational& value, int decimals);

// -1, 0 or +1.
int sign(const Rational& value);

}  // namespace grossone
