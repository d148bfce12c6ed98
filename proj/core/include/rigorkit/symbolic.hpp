#pragma once

#include <map>
#include <optional>

#include "rigorkit/interval.hpp"
#include "rigorkit/sparse_poly.hpp"

namespace rigorkit {

/// Basis monomial T^t A^a s^e of the coefficient ring, where
///   s = sqrt(2)            (s^2 reduces to 2),
///   A = arctan(sqrt(2)/5),
///   T = pi - 4 A           (negative powers allowed).
/// pi itself is expressed as T + 4A, which makes cancellation to a pure
/// rational structurally checkable: a coefficient is rational iff only
/// the monomial (0,0,0) survives.
struct SymMonomial {
  int t_pow = 0;
  unsigned a_pow = 0;
  unsigned s_pow = 0;  // 0 or 1 after reduction

  auto operator<=>(const SymMonomial&) const = default;
};

/// Element of the ring: rational linear combination of basis monomials.
class SymCoeff {
public:
  SymCoeff() = default;
  explicit SymCoeff(const Rational& q) { add(SymMonomial{}, q); }

  static SymCoeff rational(const Rational& q) { return SymCoeff(q); }
  static SymCoeff sqrt2(const Rational& q = Rational(1));
  static SymCoeff atn(const Rational& q = Rational(1));
  static SymCoeff big_t(const Rational& q = Rational(1), int power = 1);
  /// pt = -pi/3 + 4A = -T/3 + (8/3) A.
  static SymCoeff pt();
  /// delta_oct = (pi - 4A) / (2 sqrt 2) = T s / 4.
  static SymCoeff delta_oct();

  void add(const SymMonomial& m, const Rational& q);
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// The rational value when is_rational(); nullopt otherwise.
  std::optional<Rational> rational_value() const;

  const std::map<SymMonomial, Rational>& terms() const { return terms_; }

  SymCoeff operator-() const;
  friend SymCoeff operator+(const SymCoeff& x, const SymCoeff& y);
  friend SymCoeff operator-(const SymCoeff& x, const SymCoeff& y);
  friend SymCoeff operator*(const SymCoeff& x, const SymCoeff& y);
  friend bool operator==(const SymCoeff& x, const SymCoeff& y) {
    return x.terms_ == y.terms_;
  }

  /// Rigorous enclosure using verified enclosures of s, A, T.
  Interval enclosure(unsigned precision = kDefaultPrecisionBits) const;

  std::string to_string() const;

private:
  std::map<SymMonomial, Rational> terms_;
};

/// Multivariate polynomial with SymCoeff coefficients; the carrier of
/// the surrogate construction.
class SymPoly {
public:
  explicit SymPoly(std::size_t arity = 0) : arity_(arity) {}

  static SymPoly from_rational_poly(const SparsePoly& p);
  static SymPoly constant(std::size_t arity, const SymCoeff& c);

  std::size_t arity() const { return arity_; }
  const std::map<Monomial, SymCoeff, GradedLex>& terms() const {
    return terms_;
  }
  std::size_t monomial_count() const { return terms_.size(); }
  std::uint32_t total_degree() const;

  void add_term(const Monomial& m, const SymCoeff& c);

  friend SymPoly operator+(const SymPoly& p, const SymPoly& q);
  friend SymPoly operator-(const SymPoly& p, const SymPoly& q);
  friend SymPoly operator*(const SymPoly& p, const SymPoly& q);
  SymPoly scaled(const SymCoeff& c) const;

  SymCoeff eval(const std::vector<Rational>& point) const;

  /// Exact rational polynomial if every coefficient is rational.
  std::optional<SparsePoly> to_rational_poly() const;

private:
  std::size_t arity_;
  std::map<Monomial, SymCoeff, GradedLex> terms_;
};

}  // namespace rigorkit
