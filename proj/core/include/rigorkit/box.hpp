#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rigorkit/rational.hpp"

namespace rigorkit {

/// Closed interval with exact rational endpoints, lo <= hi.
struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool is_point() const { return lo == hi; }
};

/// Axis-aligned box with rational endpoints, one interval per variable.
class Box {
public:
  Box() = default;
  explicit Box(std::vector<RationalInterval> coords);

  /// n-dimensional power of a single interval, e.g. [2, 2.51]^6.
  static Box uniform(std::size_t arity, const Rational& lo,
                     const Rational& hi);
  /// The unit box [0,1]^n.
  static Box unit(std::size_t arity);

  std::size_t arity() const { return coords_.size(); }
  const RationalInterval& operator[](std::size_t i) const {
    return coords_[i];
  }
  const std::vector<RationalInterval>& coords() const { return coords_; }

  /// Index of the coordinate with the largest width; ties to lowest index.
  std::size_t widest_axis() const;
  Rational max_width() const;

  /// Splits at the midpoint of `axis` into lower and upper halves.
  std::pair<Box, Box> split(std::size_t axis) const;

  /// Degenerate box at the midpoint of each coordinate.
  Box midpoint_box() const;

  std::string to_string() const;

private:
  std::vector<RationalInterval> coords_;
};

}  // namespace rigorkit
