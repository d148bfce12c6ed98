#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rigorkit/box.hpp"
#include "rigorkit/constants.hpp"
#include "rigorkit/interval.hpp"

namespace rigorkit {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression tree over the numeric vocabulary: variables,
/// rational and named constants, +, -, *, /, natural powers, sqrt,
/// arctan, negation. Shared subtrees are allowed and encouraged.
class Expr {
public:
  enum class Kind {
    kVariable,
    kRational,
    kConstant,
    kAdd,
    kSub,
    kMul,
    kDiv,
    kPow,
    kSqrt,
    kArctan,
    kNeg,
  };

  static ExprPtr variable(std::size_t index);
  static ExprPtr rational(Rational value);
  static ExprPtr constant(ConstantName name);
  static ExprPtr add(ExprPtr a, ExprPtr b);
  static ExprPtr sub(ExprPtr a, ExprPtr b);
  static ExprPtr mul(ExprPtr a, ExprPtr b);
  static ExprPtr div(ExprPtr a, ExprPtr b);
  static ExprPtr pow(ExprPtr a, unsigned exponent);
  static ExprPtr sqrt(ExprPtr a);
  static ExprPtr arctan(ExprPtr a);
  static ExprPtr neg(ExprPtr a);

  Kind kind() const { return kind_; }
  std::size_t variable_index() const { return var_index_; }
  const Rational& rational_value() const { return value_; }
  ConstantName constant_name() const { return constant_; }
  unsigned pow_exponent() const { return pow_exp_; }
  const std::vector<ExprPtr>& children() const { return children_; }

  /// Highest variable index + 1 over the whole tree (0 if closed).
  std::size_t min_arity() const;

  /// True if the tree contains no Sqrt/Arctan/Constant node, i.e. it is a
  /// rational function of the variables (exact evaluation possible).
  bool is_rational_expr() const;

  struct Private {};
  explicit Expr(Private) {}

private:
  Kind kind_ = Kind::kRational;
  std::size_t var_index_ = 0;
  Rational value_;
  ConstantName constant_ = ConstantName::kPi;
  unsigned pow_exp_ = 0;
  std::vector<ExprPtr> children_;
};

struct EvalOptions {
  unsigned precision = kDefaultPrecisionBits;
  // Evaluate sqrt through its continuous extension sqrt(max(0, x)) when
  // the argument enclosure merely brushes below zero. The extension
  // agrees with sqrt wherever sqrt is defined, so bounds proven for it
  // transfer soundly; rounding slop at domain boundaries stops raising
  // spurious errors.
  bool clamp_sqrt = false;
};

/// Interval evaluation over a box: the result contains
/// { e(x) : x in b }. Throws DomainError with the offending subexpression
/// path when a domain condition is violated (certain() tells whether the
/// violation holds on the whole box or is an overestimation artifact).
Interval eval_interval(const Expr& e, const Box& b,
                       unsigned precision = kDefaultPrecisionBits);
Interval eval_interval(const Expr& e, const Box& b, const EvalOptions& opts);

/// Exact rational evaluation at a point; requires is_rational_expr().
Rational eval_exact_rational(const Expr& e, const std::vector<Rational>& x);

/// Enclosure of e at an exact rational point (point-box evaluation).
Interval eval_point(const Expr& e, const std::vector<Rational>& x,
                    unsigned precision = kDefaultPrecisionBits);

std::string expr_to_string(const Expr& e);

}  // namespace rigorkit
