#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace grover {

/// Arbitrary-precision rational, always kept in canonical form
/// (positive denominator, coprime numerator and denominator).
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

/// "num/den", always with an explicit denominator ("3/1", "-1/4").
std::string to_string(const Rational& q);

/// Parses "num/den" or a bare integer.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace grover
