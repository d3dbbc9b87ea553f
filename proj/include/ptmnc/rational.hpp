#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace ptmnc {

// Exact rational scalar. GMP keeps values canonical (lowest terms, positive
// denominator, zero as 0/1) as long as construction goes through arithmetic,
// rational() or parse_rational().
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

Rational rational(long num, long den = 1);

// Parses "p/q" or "p". Rejects empty strings, zero denominators and garbage.
Rational parse_rational(std::string_view text);

// Formats as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

}  // namespace ptmnc
