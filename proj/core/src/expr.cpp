#include "rigorkit/expr.hpp"

#include <algorithm>
#include <sstream>

namespace rigorkit {

namespace {
std::shared_ptr<Expr> make_node() {
  return std::make_shared<Expr>(Expr::Private{});
}
}  // namespace

// Box -------------------------------------------------------------------

Box::Box(std::vector<RationalInterval> coords) : coords_(std::move(coords)) {
  for (const auto& c : coords_) {
    if (c.lo > c.hi) {
      throw std::invalid_argument("box coordinate with lo > hi");
    }
  }
}

Box Box::uniform(std::size_t arity, const Rational& lo, const Rational& hi) {
  return Box(std::vector<RationalInterval>(arity, RationalInterval{lo, hi}));
}

Box Box::unit(std::size_t arity) {
  return uniform(arity, Rational(0), Rational(1));
}

std::size_t Box::widest_axis() const {
  std::size_t best = 0;
  Rational best_width = coords_.empty() ? Rational(0) : coords_[0].width();
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (coords_[i].width() > best_width) {
      best = i;
      best_width = coords_[i].width();
    }
  }
  return best;
}

Rational Box::max_width() const {
  Rational w(0);
  for (const auto& c : coords_) w = std::max(w, c.width());
  return w;
}

std::pair<Box, Box> Box::split(std::size_t axis) const {
  auto lo_coords = coords_;
  auto hi_coords = coords_;
  const Rational mid = coords_[axis].midpoint();
  lo_coords[axis].hi = mid;
  hi_coords[axis].lo = mid;
  return {Box(lo_coords), Box(hi_coords)};
}

Box Box::midpoint_box() const {
  auto coords = coords_;
  for (auto& c : coords) {
    const Rational m = c.midpoint();
    c.lo = m;
    c.hi = m;
  }
  return Box(coords);
}

std::string Box::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << " x ";
    os << "[" << rational_to_string(coords_[i].lo) << ","
       << rational_to_string(coords_[i].hi) << "]";
  }
  os << "]";
  return os.str();
}

// Expr constructors -----------------------------------------------------

ExprPtr Expr::variable(std::size_t index) {
  auto n = make_node();
  n->kind_ = Kind::kVariable;
  n->var_index_ = index;
  return n;
}

ExprPtr Expr::rational(Rational value) {
  auto n = make_node();
  n->kind_ = Kind::kRational;
  n->value_ = std::move(value);
  return n;
}

ExprPtr Expr::constant(ConstantName name) {
  auto n = make_node();
  n->kind_ = Kind::kConstant;
  n->constant_ = name;
  return n;
}

ExprPtr Expr::add(ExprPtr a, ExprPtr b) {
  auto n = make_node();
  n->kind_ = Kind::kAdd;
  n->children_ = {std::move(a), std::move(b)};
  return n;
}

ExprPtr Expr::sub(ExprPtr a, ExprPtr b) {
  auto n = make_node();
  n->kind_ = Kind::kSub;
  n->children_ = {std::move(a), std::move(b)};
  return n;
}

ExprPtr Expr::mul(ExprPtr a, ExprPtr b) {
  auto n = make_node();
  n->kind_ = Kind::kMul;
  n->children_ = {std::move(a), std::move(b)};
  return n;
}

ExprPtr Expr::div(ExprPtr a, ExprPtr b) {
  auto n = make_node();
  n->kind_ = Kind::kDiv;
  n->children_ = {std::move(a), std::move(b)};
  return n;
}

ExprPtr Expr::pow(ExprPtr a, unsigned exponent) {
  auto n = make_node();
  n->kind_ = Kind::kPow;
  n->pow_exp_ = exponent;
  n->children_ = {std::move(a)};
  return n;
}

ExprPtr Expr::sqrt(ExprPtr a) {
  auto n = make_node();
  n->kind_ = Kind::kSqrt;
  n->children_ = {std::move(a)};
  return n;
}

ExprPtr Expr::arctan(ExprPtr a) {
  auto n = make_node();
  n->kind_ = Kind::kArctan;
  n->children_ = {std::move(a)};
  return n;
}

ExprPtr Expr::neg(ExprPtr a) {
  auto n = make_node();
  n->kind_ = Kind::kNeg;
  n->children_ = {std::move(a)};
  return n;
}

std::size_t Expr::min_arity() const {
  std::size_t arity = 0;
  if (kind_ == Kind::kVariable) arity = var_index_ + 1;
  for (const auto& c : children_) arity = std::max(arity, c->min_arity());
  return arity;
}

bool Expr::is_rational_expr() const {
  if (kind_ == Kind::kSqrt || kind_ == Kind::kArctan ||
      kind_ == Kind::kConstant) {
    return false;
  }
  return std::all_of(children_.begin(), children_.end(),
                     [](const ExprPtr& c) { return c->is_rational_expr(); });
}

// Evaluation ------------------------------------------------------------

namespace {

struct EvalCtx {
  const Box* box;
  unsigned precision;
  bool clamp_sqrt;
  std::vector<std::size_t>* path;  // current position in the tree
};

[[noreturn]] void domain_error(const EvalCtx& ctx, const std::string& what,
                               bool certain) {
  std::ostringstream os;
  os << what << " at subexpression path [";
  for (std::size_t i = 0; i < ctx.path->size(); ++i) {
    if (i) os << ".";
    os << (*ctx.path)[i];
  }
  os << "]";
  throw DomainError(os.str(), certain);
}

Interval eval_rec(const Expr& e, EvalCtx& ctx) {
  const unsigned prec = ctx.precision;
  switch (e.kind()) {
    case Expr::Kind::kVariable: {
      const auto i = e.variable_index();
      if (i >= ctx.box->arity()) {
        throw ArityMismatch("expression variable not covered by box");
      }
      const auto& c = (*ctx.box)[i];
      return Interval::from_rationals(c.lo, c.hi, prec);
    }
    case Expr::Kind::kRational:
      return Interval::from_rational(e.rational_value(), prec);
    case Expr::Kind::kConstant:
      return enclose_constant(e.constant_name(), prec);
    default:
      break;
  }
  std::vector<Interval> kids;
  kids.reserve(e.children().size());
  for (std::size_t i = 0; i < e.children().size(); ++i) {
    ctx.path->push_back(i);
    kids.push_back(eval_rec(*e.children()[i], ctx));
    ctx.path->pop_back();
  }
  switch (e.kind()) {
    case Expr::Kind::kAdd:
      return interval_add(kids[0], kids[1], prec);
    case Expr::Kind::kSub:
      return interval_sub(kids[0], kids[1], prec);
    case Expr::Kind::kMul:
      return interval_mul(kids[0], kids[1], prec);
    case Expr::Kind::kDiv:
      if (kids[1].contains_zero()) {
        domain_error(ctx, "division by interval containing zero",
                     kids[1].is_point());
      }
      return interval_div(kids[0], kids[1], prec);
    case Expr::Kind::kPow:
      return interval_pow(kids[0], e.pow_exponent(), prec);
    case Expr::Kind::kSqrt:
      if (kids[0].lo().sign() < 0) {
        if (ctx.clamp_sqrt && kids[0].hi().sign() >= 0) {
          return interval_sqrt(Interval(Dyadic::zero(), kids[0].hi()), prec);
        }
        domain_error(ctx, "sqrt of interval with negative lower endpoint",
                     kids[0].hi().sign() < 0);
      }
      return interval_sqrt(kids[0], prec);
    case Expr::Kind::kArctan:
      return interval_arctan(kids[0], prec);
    case Expr::Kind::kNeg:
      return -kids[0];
    default:
      throw std::logic_error("unreachable expression kind");
  }
}

}  // namespace

Interval eval_interval(const Expr& e, const Box& b, unsigned precision) {
  std::vector<std::size_t> path;
  EvalCtx ctx{&b, precision, false, &path};
  return eval_rec(e, ctx);
}

Interval eval_interval(const Expr& e, const Box& b, const EvalOptions& opts) {
  std::vector<std::size_t> path;
  EvalCtx ctx{&b, opts.precision, opts.clamp_sqrt, &path};
  return eval_rec(e, ctx);
}

Rational eval_exact_rational(const Expr& e, const std::vector<Rational>& x) {
  switch (e.kind()) {
    case Expr::Kind::kVariable:
      if (e.variable_index() >= x.size()) {
        throw ArityMismatch("point does not cover expression variables");
      }
      return x[e.variable_index()];
    case Expr::Kind::kRational:
      return e.rational_value();
    case Expr::Kind::kConstant:
    case Expr::Kind::kSqrt:
    case Expr::Kind::kArctan:
      throw DomainError("exact evaluation of a non-rational expression");
    default:
      break;
  }
  const auto& c = e.children();
  switch (e.kind()) {
    case Expr::Kind::kAdd:
      return eval_exact_rational(*c[0], x) + eval_exact_rational(*c[1], x);
    case Expr::Kind::kSub:
      return eval_exact_rational(*c[0], x) - eval_exact_rational(*c[1], x);
    case Expr::Kind::kMul:
      return eval_exact_rational(*c[0], x) * eval_exact_rational(*c[1], x);
    case Expr::Kind::kDiv: {
      const Rational d = eval_exact_rational(*c[1], x);
      if (d == 0) throw DomainError("exact division by zero");
      return eval_exact_rational(*c[0], x) / d;
    }
    case Expr::Kind::kPow: {
      const Rational base = eval_exact_rational(*c[0], x);
      Rational acc(1);
      for (unsigned i = 0; i < e.pow_exponent(); ++i) acc *= base;
      return acc;
    }
    case Expr::Kind::kNeg:
      return -eval_exact_rational(*c[0], x);
    default:
      throw std::logic_error("unreachable expression kind");
  }
}

Interval eval_point(const Expr& e, const std::vector<Rational>& x,
                    unsigned precision) {
  std::vector<RationalInterval> coords;
  coords.reserve(x.size());
  for (const auto& v : x) coords.push_back(RationalInterval{v, v});
  return eval_interval(e, Box(std::move(coords)), precision);
}

std::string expr_to_string(const Expr& e) {
  const auto& c = e.children();
  switch (e.kind()) {
    case Expr::Kind::kVariable:
      return "y" + std::to_string(e.variable_index() + 1);
    case Expr::Kind::kRational:
      return rational_to_string(e.rational_value());
    case Expr::Kind::kConstant:
      return constant_name_string(e.constant_name());
    case Expr::Kind::kAdd:
      return "(" + expr_to_string(*c[0]) + " + " + expr_to_string(*c[1]) + ")";
    case Expr::Kind::kSub:
      return "(" + expr_to_string(*c[0]) + " - " + expr_to_string(*c[1]) + ")";
    case Expr::Kind::kMul:
      return "(" + expr_to_string(*c[0]) + " * " + expr_to_string(*c[1]) + ")";
    case Expr::Kind::kDiv:
      return "(" + expr_to_string(*c[0]) + " / " + expr_to_string(*c[1]) + ")";
    case Expr::Kind::kPow:
      return expr_to_string(*c[0]) + "^" + std::to_string(e.pow_exponent());
    case Expr::Kind::kSqrt:
      return "sqrt(" + expr_to_string(*c[0]) + ")";
    case Expr::Kind::kArctan:
      return "arctan(" + expr_to_string(*c[0]) + ")";
    case Expr::Kind::kNeg:
      return "-(" + expr_to_string(*c[0]) + ")";
  }
  return "?";
}

}  // namespace rigorkit
