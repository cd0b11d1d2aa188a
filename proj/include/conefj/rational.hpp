#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace conefj {

/// Exact rational scalar. GMP keeps every result canonical (gcd 1, den > 0).
using Rational = mpq_class;

/**
 * Parses "p", "p/q", "-p/q" (ASCII '-' or U+2212 minus). The denominator must
 * be positive; the result is canonicalized so "2/4" reads as 1/2.
 */
Rational parse_rational(std::string_view text);

/// Canonical rendering: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

int sign(const Rational& q);

}  // namespace conefj
