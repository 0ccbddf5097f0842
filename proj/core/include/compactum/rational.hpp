#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace compactum {

/// Exact rational coordinate. GMP keeps results of arithmetic in lowest
/// terms; values built from a numerator/denominator pair go through q().
using Rational = mpq_class;

/// p/q in lowest terms. Throws Error{OutOfRange} when den == 0.
Rational q(std::int64_t num, std::int64_t den = 1);

/// Lowest-terms "p/q" text, always with an explicit denominator ("0/1", "-3/2").
std::string to_text(const Rational& r);

/// Accepts "p/q" or a bare integer. Throws Error{ParseError} on anything else.
Rational parse_rational(std::string_view text);

/// Decimal rendering rounded half away from zero to `digits` places, computed
/// exactly so output does not depend on the platform's floating point.
std::string to_decimal(const Rational& r, int digits);

}  // namespace compactum
