#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ramanujan {

using Integer = mpz_class;
using Rational = mpq_class;

/// Decimal rendering, never scientific notation.
std::string to_decimal(const Integer& x);
std::string to_decimal(const Rational& x);

/// Strict decimal parse: optional sign followed by digits only.
/// Throws std::invalid_argument on anything else.
Integer parse_integer(std::string_view text);

/// Accepts "a" or "a/b" with b != 0; the result is canonicalized.
Rational parse_rational(std::string_view text);

Integer ipow(const Integer& base, std::uint64_t exponent);
Integer ipow(std::uint64_t base, std::uint64_t exponent);

/// Least non-negative residue of x modulo m (m > 0).
Integer residue(const Integer& x, const Integer& m);

/// Inverse of x modulo m; throws std::domain_error when gcd(x, m) != 1.
Integer inverse_mod(const Integer& x, const Integer& m);

}  // namespace ramanujan
