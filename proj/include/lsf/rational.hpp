#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lsf {

// All coefficient data is exact. There is no floating-point path.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p" or "-p/q" (surrounding whitespace allowed). The result is
/// canonicalized. Throws std::invalid_argument on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// Canonical "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

Integer factorial(int n);
Integer binomial(int n, int k);  // 0 when k < 0 or k > n

}  // namespace lsf
