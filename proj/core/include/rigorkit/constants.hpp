#pragma once

#include <string>

#include "rigorkit/interval.hpp"

namespace rigorkit {

/// Named transcendental constants of the scoring system.
///   pt        = -pi/3 + 4 arctan(sqrt(2)/5)
///   delta_oct = (pi - 4 arctan(sqrt(2)/5)) / (2 sqrt(2))
enum class ConstantName { kPi, kSqrt2, kAtanSqrt2Over5, kPt, kDeltaOct };

/// Verified enclosure of the named constant. Width <= 2^(-precision+2).
/// Results are memoized per (name, precision). Requires precision >= 8.
Interval enclose_constant(ConstantName name, unsigned precision);

const char* constant_name_string(ConstantName name);
/// Parses "pi", "sqrt2", "atn", "pt", "doct" (and a few aliases).
bool parse_constant_name(const std::string& text, ConstantName* out);

}  // namespace rigorkit
