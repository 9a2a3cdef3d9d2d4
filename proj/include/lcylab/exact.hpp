#pragma once

// Exact integer and rational scalars shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace lcylab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// "a/b" in lowest terms, or "a" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "a" or "a/b" (optional sign on a). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Integer gcd(const Integer& a, const Integer& b);

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

}  // namespace lcylab
