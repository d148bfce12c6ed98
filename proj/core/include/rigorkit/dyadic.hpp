#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "rigorkit/rational.hpp"

namespace rigorkit {

/// A dyadic number: mantissa * 2^exponent with arbitrary-precision
/// mantissa. Canonical form: mantissa odd or zero; zero has exponent 0.
/// Addition, subtraction and multiplication are exact; rounding exists
/// only as the explicit round_down/round_up operations.
class Dyadic {
public:
  Dyadic() : man_(0), exp_(0) {}
  Dyadic(long value) : man_(value), exp_(0) { normalize(); }  // NOLINT
  Dyadic(Integer mantissa, long exponent)
      : man_(std::move(mantissa)), exp_(exponent) {
    normalize();
  }

  static Dyadic zero() { return Dyadic(); }
  static Dyadic one() { return Dyadic(1); }

  /// Exact conversion from a rational with power-of-two denominator.
  /// Throws std::invalid_argument otherwise.
  static Dyadic from_rational_exact(const Rational& q);

  /// Directed conversion: greatest dyadic with `precision` mantissa bits
  /// that is <= q (down), or least >= q (up).
  static Dyadic from_rational_down(const Rational& q, unsigned precision);
  static Dyadic from_rational_up(const Rational& q, unsigned precision);

  const Integer& mantissa() const { return man_; }
  long exponent() const { return exp_; }
  bool is_zero() const { return man_ == 0; }
  int sign() const { return sgn(man_); }

  /// Number of significant mantissa bits (0 for zero).
  std::size_t bits() const {
    return man_ == 0 ? 0 : mpz_sizeinbase(man_.get_mpz_t(), 2);
  }

  Rational to_rational() const;
  double to_double() const;
  std::string to_string() const;  // exact decimal

  Dyadic operator-() const { return Dyadic(-man_, exp_); }
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);

  /// Exact multiplication by 2^k.
  Dyadic ldexp(long k) const {
    return is_zero() ? Dyadic() : Dyadic(man_, exp_ + k);
  }

  /// Largest dyadic with at most `precision` mantissa bits that is <= *this
  /// (round_down) or smallest >= *this (round_up).
  Dyadic round_down(unsigned precision) const;
  Dyadic round_up(unsigned precision) const;

  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    return cmp_impl(a, b);
  }
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return cmp_impl(a, b) == std::strong_ordering::equal;
  }

private:
  void normalize();
  static std::strong_ordering cmp_impl(const Dyadic& a, const Dyadic& b);
  static Dyadic from_rational_dir(const Rational& q, unsigned precision,
                                  bool up);
  Dyadic round_dir(unsigned precision, bool up) const;

  Integer man_;
  long exp_;
};

Dyadic min(const Dyadic& a, const Dyadic& b);
Dyadic max(const Dyadic& a, const Dyadic& b);
Dyadic abs(const Dyadic& a);

}  // namespace rigorkit
