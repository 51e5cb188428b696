#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tcla {

/// Exact rational scalar. GMP keeps it canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q". Throws ParseError on malformed text or q == 0.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

Rational factorial(unsigned n);

}  // namespace tcla
