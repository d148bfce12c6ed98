#pragma once

#include <string>

#include "rigorkit/dyadic.hpp"
#include "rigorkit/errors.hpp"
#include "rigorkit/rational.hpp"

namespace rigorkit {

/// Mantissa-precision budget for outward rounding, in bits.
/// Addition, subtraction and multiplication of dyadics are exact; the
/// budget only trims mantissas that outgrow it, always outward.
struct Precision {
  unsigned bits = 64;
};

inline constexpr unsigned kDefaultPrecisionBits = 64;

/// Closed interval with dyadic endpoints, lo <= hi. Every operation
/// returns an interval containing the exact image of its arguments.
class Interval {
public:
  Interval() : lo_(0), hi_(0) {}
  Interval(Dyadic lo, Dyadic hi);
  explicit Interval(const Dyadic& point) : lo_(point), hi_(point) {}

  static Interval from_rational(const Rational& q,
                                unsigned precision = kDefaultPrecisionBits);
  static Interval from_rationals(const Rational& lo, const Rational& hi,
                                 unsigned precision = kDefaultPrecisionBits);
  static Interval hull(const Interval& a, const Interval& b);

  const Dyadic& lo() const { return lo_; }
  const Dyadic& hi() const { return hi_; }
  Rational lo_q() const { return lo_.to_rational(); }
  Rational hi_q() const { return hi_.to_rational(); }

  Dyadic width() const { return hi_ - lo_; }
  Rational width_q() const { return hi_q() - lo_q(); }
  bool is_point() const { return lo_ == hi_; }
  bool contains_zero() const {
    return lo_.sign() <= 0 && hi_.sign() >= 0;
  }
  bool contains(const Rational& x) const {
    return lo_q() <= x && x <= hi_q();
  }
  bool contains(const Interval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  bool intersects(const Interval& other) const {
    return !(hi_ < other.lo_ || other.hi_ < lo_);
  }

  Interval operator-() const { return Interval(-hi_, -lo_); }

  std::string to_string() const;

private:
  Dyadic lo_, hi_;
};

Interval interval_add(const Interval& a, const Interval& b,
                      unsigned precision = kDefaultPrecisionBits);
Interval interval_sub(const Interval& a, const Interval& b,
                      unsigned precision = kDefaultPrecisionBits);
Interval interval_mul(const Interval& a, const Interval& b,
                      unsigned precision = kDefaultPrecisionBits);
/// Requires 0 not in b; throws DomainError otherwise.
Interval interval_div(const Interval& a, const Interval& b,
                      unsigned precision = kDefaultPrecisionBits);
/// Requires a.lo >= 0; throws DomainError otherwise.
Interval interval_sqrt(const Interval& a,
                       unsigned precision = kDefaultPrecisionBits);
Interval interval_arctan(const Interval& a,
                         unsigned precision = kDefaultPrecisionBits);
/// x^n with the even-power tightening at zero.
Interval interval_pow(const Interval& a, unsigned n,
                      unsigned precision = kDefaultPrecisionBits);

/// Directed square root of a single dyadic >= 0.
Dyadic sqrt_down(const Dyadic& d, unsigned precision);
Dyadic sqrt_up(const Dyadic& d, unsigned precision);

/// Enclosure of arctan at an exact rational point.
Interval arctan_point(const Rational& x, unsigned precision);

}  // namespace rigorkit
