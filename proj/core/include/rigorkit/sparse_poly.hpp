#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rigorkit/box.hpp"
#include "rigorkit/expr.hpp"
#include "rigorkit/interval.hpp"
#include "rigorkit/rational.hpp"

namespace rigorkit {

/// Exponent vector; length equals the ambient arity.
using Monomial = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, then lexicographic.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Exact sparse multivariate polynomial with rational coefficients.
/// Canonical: no zero coefficients stored, terms in graded-lex order.
class SparsePoly {
public:
  using TermMap = std::map<Monomial, Rational, GradedLex>;

  explicit SparsePoly(std::size_t arity = 0) : arity_(arity) {}
  static SparsePoly zero(std::size_t arity) { return SparsePoly(arity); }
  static SparsePoly constant(std::size_t arity, const Rational& c);
  static SparsePoly variable(std::size_t arity, std::size_t index);

  std::size_t arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t monomial_count() const { return terms_.size(); }
  std::uint32_t total_degree() const;
  std::vector<std::uint32_t> per_variable_degrees() const;

  /// Adds c * x^mono, dropping the term if the sum cancels.
  void add_term(const Monomial& mono, const Rational& c);
  const Rational* coefficient(const Monomial& mono) const;

  SparsePoly operator-() const;
  friend SparsePoly operator+(const SparsePoly& p, const SparsePoly& q);
  friend SparsePoly operator-(const SparsePoly& p, const SparsePoly& q);
  friend SparsePoly operator*(const SparsePoly& p, const SparsePoly& q);
  SparsePoly scaled(const Rational& c) const;
  SparsePoly pow(unsigned n) const;

  /// Exact substitution p(args[0], ..., args[arity-1]); all args must
  /// share one arity.
  SparsePoly compose(const std::vector<SparsePoly>& args) const;

  /// q with q(t) = p(lo + t (hi - lo)) coordinatewise, mapping the box
  /// onto [0,1]^n. Requires positive width in each coordinate.
  SparsePoly affine_reparam(const Box& box) const;

  Rational eval_exact(const std::vector<Rational>& point) const;
  Interval eval_interval(const Box& box,
                         unsigned precision = kDefaultPrecisionBits) const;

  /// d/dx_i, exact.
  SparsePoly derivative(std::size_t var) const;

  ExprPtr to_expr() const;

  std::string to_string() const;

private:
  std::size_t arity_;
  TermMap terms_;
};

/// Attempts to expand a division-free rational expression into a sparse
/// polynomial (Div only by nonzero rational constants). Returns nullopt
/// if the expression contains sqrt, arctan, named constants, or a
/// non-constant divisor. `arity` is the ambient variable count.
std::optional<SparsePoly> expr_to_poly(const Expr& e, std::size_t arity);

/// Exact univariate division: returns quotient if divisor divides p with
/// zero remainder, nullopt otherwise. Both must have arity 1.
std::optional<SparsePoly> univariate_exact_divide(const SparsePoly& p,
                                                  const SparsePoly& divisor);

}  // namespace rigorkit
