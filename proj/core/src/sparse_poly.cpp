#include "rigorkit/sparse_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rigorkit {

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = std::accumulate(a.begin(), a.end(), 0u);
  const auto db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

SparsePoly SparsePoly::constant(std::size_t arity, const Rational& c) {
  SparsePoly p(arity);
  p.add_term(Monomial(arity, 0), c);
  return p;
}

SparsePoly SparsePoly::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw ArityMismatch("variable index out of range");
  SparsePoly p(arity);
  Monomial m(arity, 0);
  m[index] = 1;
  p.add_term(m, Rational(1));
  return p;
}

std::uint32_t SparsePoly::total_degree() const {
  std::uint32_t deg = 0;
  for (const auto& [m, c] : terms_) {
    deg = std::max(deg, std::accumulate(m.begin(), m.end(), 0u));
  }
  return deg;
}

std::vector<std::uint32_t> SparsePoly::per_variable_degrees() const {
  std::vector<std::uint32_t> degs(arity_, 0);
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < arity_; ++i) degs[i] = std::max(degs[i], m[i]);
  }
  return degs;
}

void SparsePoly::add_term(const Monomial& mono, const Rational& c) {
  if (mono.size() != arity_) throw ArityMismatch("monomial arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

const Rational* SparsePoly::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? nullptr : &it->second;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r(arity_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

SparsePoly operator+(const SparsePoly& p, const SparsePoly& q) {
  if (p.arity_ != q.arity_) throw ArityMismatch("polynomial arity mismatch");
  SparsePoly r = p;
  for (const auto& [m, c] : q.terms_) r.add_term(m, c);
  return r;
}

SparsePoly operator-(const SparsePoly& p, const SparsePoly& q) {
  if (p.arity_ != q.arity_) throw ArityMismatch("polynomial arity mismatch");
  SparsePoly r = p;
  for (const auto& [m, c] : q.terms_) r.add_term(m, -c);
  return r;
}

SparsePoly operator*(const SparsePoly& p, const SparsePoly& q) {
  if (p.arity_ != q.arity_) throw ArityMismatch("polynomial arity mismatch");
  SparsePoly r(p.arity_);
  Monomial sum(p.arity_);
  for (const auto& [ma, ca] : p.terms_) {
    for (const auto& [mb, cb] : q.terms_) {
      for (std::size_t i = 0; i < p.arity_; ++i) sum[i] = ma[i] + mb[i];
      r.add_term(sum, ca * cb);
    }
  }
  return r;
}

SparsePoly SparsePoly::scaled(const Rational& c) const {
  if (c == 0) return SparsePoly(arity_);
  SparsePoly r(arity_);
  for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
  return r;
}

SparsePoly SparsePoly::pow(unsigned n) const {
  SparsePoly acc = constant(arity_, Rational(1));
  for (unsigned i = 0; i < n; ++i) acc = acc * *this;
  return acc;
}

SparsePoly SparsePoly::compose(const std::vector<SparsePoly>& args) const {
  if (args.size() != arity_) {
    throw ArityMismatch("compose needs one argument per variable");
  }
  const std::size_t out_arity = args.empty() ? 0 : args[0].arity();
  for (const auto& a : args) {
    if (a.arity() != out_arity) {
      throw ArityMismatch("compose arguments must share one arity");
    }
  }
  // Cache powers of each argument as needed.
  std::vector<std::vector<SparsePoly>> powers(arity_);
  auto arg_power = [&](std::size_t i, std::uint32_t e) -> const SparsePoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(out_arity, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * args[i]);
    return cache[e];
  };
  SparsePoly result(out_arity);
  for (const auto& [m, c] : terms_) {
    SparsePoly term = constant(out_arity, c);
    for (std::size_t i = 0; i < arity_; ++i) {
      if (m[i] > 0) term = term * arg_power(i, m[i]);
    }
    result = result + term;
  }
  return result;
}

SparsePoly SparsePoly::affine_reparam(const Box& box) const {
  if (box.arity() != arity_) throw ArityMismatch("box arity mismatch");
  std::vector<SparsePoly> args;
  args.reserve(arity_);
  for (std::size_t i = 0; i < arity_; ++i) {
    const auto& c = box[i];
    if (c.width() == 0) {
      throw DegenerateBox("affine reparametrization of zero-width axis " +
                          std::to_string(i));
    }
    SparsePoly lin = constant(arity_, c.lo);
    Monomial m(arity_, 0);
    m[i] = 1;
    lin.add_term(m, c.width());
    args.push_back(std::move(lin));
  }
  return compose(args);
}

Rational SparsePoly::eval_exact(const std::vector<Rational>& point) const {
  if (point.size() != arity_) throw ArityMismatch("evaluation point arity");
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < arity_; ++i) {
      for (std::uint32_t k = 0; k < m[i]; ++k) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

Interval SparsePoly::eval_interval(const Box& box, unsigned precision) const {
  if (box.arity() != arity_) throw ArityMismatch("box arity mismatch");
  std::vector<Interval> vars;
  vars.reserve(arity_);
  for (std::size_t i = 0; i < arity_; ++i) {
    vars.push_back(Interval::from_rationals(box[i].lo, box[i].hi, precision));
  }
  Interval sum(Dyadic::zero());
  for (const auto& [m, c] : terms_) {
    Interval t = Interval::from_rational(c, precision);
    for (std::size_t i = 0; i < arity_; ++i) {
      if (m[i] > 0) t = interval_mul(t, interval_pow(vars[i], m[i], precision),
                                     precision);
    }
    sum = interval_add(sum, t, precision);
  }
  return sum;
}

SparsePoly SparsePoly::derivative(std::size_t var) const {
  if (var >= arity_) throw ArityMismatch("derivative variable out of range");
  SparsePoly r(arity_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    r.add_term(d, c * Rational(m[var]));
  }
  return r;
}

ExprPtr SparsePoly::to_expr() const {
  if (terms_.empty()) return Expr::rational(Rational(0));
  std::vector<ExprPtr> nodes;
  nodes.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    ExprPtr term = Expr::rational(c);
    for (std::size_t i = 0; i < arity_; ++i) {
      if (m[i] == 0) continue;
      ExprPtr v = Expr::variable(i);
      if (m[i] > 1) v = Expr::pow(v, m[i]);
      term = Expr::mul(term, v);
    }
    nodes.push_back(std::move(term));
  }
  // Balanced sum keeps the tree logarithmically deep.
  while (nodes.size() > 1) {
    std::vector<ExprPtr> next;
    next.reserve(nodes.size() / 2 + 1);
    for (std::size_t i = 0; i + 1 < nodes.size(); i += 2) {
      next.push_back(Expr::add(nodes[i], nodes[i + 1]));
    }
    if (nodes.size() % 2 == 1) next.push_back(nodes.back());
    nodes = std::move(next);
  }
  return nodes[0];
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print highest degree first for readability.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << " + ";
    first = false;
    os << rational_to_string(c);
    for (std::size_t i = 0; i < arity_; ++i) {
      if (m[i] == 0) continue;
      os << "*y" << (i + 1);
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

std::optional<SparsePoly> expr_to_poly(const Expr& e, std::size_t arity) {
  switch (e.kind()) {
    case Expr::Kind::kVariable:
      if (e.variable_index() >= arity) return std::nullopt;
      return SparsePoly::variable(arity, e.variable_index());
    case Expr::Kind::kRational:
      return SparsePoly::constant(arity, e.rational_value());
    case Expr::Kind::kConstant:
    case Expr::Kind::kSqrt:
    case Expr::Kind::kArctan:
      return std::nullopt;
    default:
      break;
  }
  const auto& c = e.children();
  switch (e.kind()) {
    case Expr::Kind::kAdd: {
      auto a = expr_to_poly(*c[0], arity);
      auto b = expr_to_poly(*c[1], arity);
      if (!a || !b) return std::nullopt;
      return *a + *b;
    }
    case Expr::Kind::kSub: {
      auto a = expr_to_poly(*c[0], arity);
      auto b = expr_to_poly(*c[1], arity);
      if (!a || !b) return std::nullopt;
      return *a - *b;
    }
    case Expr::Kind::kMul: {
      auto a = expr_to_poly(*c[0], arity);
      auto b = expr_to_poly(*c[1], arity);
      if (!a || !b) return std::nullopt;
      return *a * *b;
    }
    case Expr::Kind::kDiv: {
      auto a = expr_to_poly(*c[0], arity);
      auto b = expr_to_poly(*c[1], arity);
      if (!a || !b) return std::nullopt;
      // Only division by a nonzero constant stays polynomial.
      if (b->monomial_count() != 1) return std::nullopt;
      const auto& [m, coeff] = *b->terms().begin();
      if (std::accumulate(m.begin(), m.end(), 0u) != 0) return std::nullopt;
      return a->scaled(1 / coeff);
    }
    case Expr::Kind::kPow: {
      auto a = expr_to_poly(*c[0], arity);
      if (!a) return std::nullopt;
      return a->pow(e.pow_exponent());
    }
    case Expr::Kind::kNeg: {
      auto a = expr_to_poly(*c[0], arity);
      if (!a) return std::nullopt;
      return -*a;
    }
    default:
      return std::nullopt;
  }
}

std::optional<SparsePoly> univariate_exact_divide(const SparsePoly& p,
                                                  const SparsePoly& divisor) {
  if (p.arity() != 1 || divisor.arity() != 1 || divisor.is_zero()) {
    return std::nullopt;
  }
  // Dense long division.
  const auto deg_of = [](const SparsePoly& q) -> long {
    long d = -1;
    for (const auto& [m, c] : q.terms()) d = std::max<long>(d, m[0]);
    return d;
  };
  const long dp = deg_of(p);
  const long dd = deg_of(divisor);
  if (dp < dd) return p.is_zero() ? std::optional<SparsePoly>(p) : std::nullopt;
  std::vector<Rational> num(dp + 1, Rational(0));
  std::vector<Rational> den(dd + 1, Rational(0));
  for (const auto& [m, c] : p.terms()) num[m[0]] = c;
  for (const auto& [m, c] : divisor.terms()) den[m[0]] = c;
  std::vector<Rational> quot(dp - dd + 1, Rational(0));
  for (long i = dp; i >= dd; --i) {
    if (num[i] == 0) continue;
    const Rational f = num[i] / den[dd];
    quot[i - dd] = f;
    for (long j = 0; j <= dd; ++j) num[i - dd + j] -= f * den[j];
  }
  for (const auto& r : num) {
    if (r != 0) return std::nullopt;  // nonzero remainder
  }
  SparsePoly q(1);
  for (std::size_t i = 0; i < quot.size(); ++i) {
    q.add_term(Monomial{static_cast<std::uint32_t>(i)}, quot[i]);
  }
  return q;
}

}  // namespace rigorkit
