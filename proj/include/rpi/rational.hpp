#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rpi {

/// Exact fraction. gmp keeps the value canonical (positive denominator,
/// reduced) across arithmetic; parse_rational canonicalizes explicitly.
using Rational = mpq_class;
using Integer = mpz_class;

/// Accepts "p", "-p", "p/q". Decimal points, exponents and whitespace are
/// rejected so no value ever passes through floating point.
Rational parse_rational(std::string_view text);

/// Bare integer when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& value);

bool is_integer(const Rational& value);

/// binom(n, k) with the convention binom(n, k) = 0 for k < 0 or k > n.
/// Negative n is rejected.
Integer binomial(std::int64_t n, std::int64_t k);

Integer catalan_number(std::uint64_t n);

/// value^exponent for exponent >= 0; 0^0 = 1.
Rational power(const Rational& value, std::int64_t exponent);

std::vector<Rational> to_rationals(std::span<const std::int64_t> values);

}  // namespace rpi
