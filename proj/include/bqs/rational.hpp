#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bqs {

// GMP keeps mpq_class canonical (lowest terms, positive denominator) after
// every arithmetic operation, which is the invariant we rely on everywhere.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "a" or "a/b" (optional leading sign, decimal digits only).
// Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// "a" when the denominator is 1, otherwise "a/b".
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

}  // namespace bqs
