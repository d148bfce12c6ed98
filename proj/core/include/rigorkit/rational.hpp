#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace rigorkit {

/// Exact arbitrary-precision rational. mpq_class maintains the canonical
/// form we require: positive denominator, gcd(num, den) = 1.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "3", "-7/2" or a decimal literal like "2.51" into an exact
/// rational. Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& text);

/// Exact decimal rendering when the denominator is of the form 2^a 5^b,
/// otherwise "num/den".
std::string rational_to_string(const Rational& q);

}  // namespace rigorkit
