#include "rigorkit/symbolic.hpp"

#include <sstream>

#include "rigorkit/constants.hpp"

namespace rigorkit {

SymCoeff SymCoeff::sqrt2(const Rational& q) {
  SymCoeff c;
  c.add(SymMonomial{0, 0, 1}, q);
  return c;
}

SymCoeff SymCoeff::atn(const Rational& q) {
  SymCoeff c;
  c.add(SymMonomial{0, 1, 0}, q);
  return c;
}

SymCoeff SymCoeff::big_t(const Rational& q, int power) {
  SymCoeff c;
  c.add(SymMonomial{power, 0, 0}, q);
  return c;
}

SymCoeff SymCoeff::pt() {
  SymCoeff c;
  c.add(SymMonomial{1, 0, 0}, Rational(-1, 3));
  c.add(SymMonomial{0, 1, 0}, Rational(8, 3));
  return c;
}

SymCoeff SymCoeff::delta_oct() {
  SymCoeff c;
  c.add(SymMonomial{1, 0, 1}, Rational(1, 4));
  return c;
}

void SymCoeff::add(const SymMonomial& m, const Rational& q) {
  if (q == 0) return;
  auto [it, inserted] = terms_.emplace(m, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

bool SymCoeff::is_rational() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == SymMonomial{};
}

std::optional<Rational> SymCoeff::rational_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_rational()) return std::nullopt;
  return terms_.begin()->second;
}

SymCoeff SymCoeff::operator-() const {
  SymCoeff r;
  for (const auto& [m, q] : terms_) r.terms_.emplace(m, -q);
  return r;
}

SymCoeff operator+(const SymCoeff& x, const SymCoeff& y) {
  SymCoeff r = x;
  for (const auto& [m, q] : y.terms_) r.add(m, q);
  return r;
}

SymCoeff operator-(const SymCoeff& x, const SymCoeff& y) {
  SymCoeff r = x;
  for (const auto& [m, q] : y.terms_) r.add(m, -q);
  return r;
}

SymCoeff operator*(const SymCoeff& x, const SymCoeff& y) {
  SymCoeff r;
  for (const auto& [ma, qa] : x.terms_) {
    for (const auto& [mb, qb] : y.terms_) {
      SymMonomial m{ma.t_pow + mb.t_pow, ma.a_pow + mb.a_pow,
                    ma.s_pow + mb.s_pow};
      Rational q = qa * qb;
      if (m.s_pow >= 2) {  // s^2 = 2
        m.s_pow -= 2;
        q *= 2;
      }
      r.add(m, q);
    }
  }
  return r;
}

Interval SymCoeff::enclosure(unsigned precision) const {
  const unsigned work = precision + 8;
  Interval sum(Dyadic::zero());
  const Interval s2 = enclose_constant(ConstantName::kSqrt2, work);
  const Interval atn = enclose_constant(ConstantName::kAtanSqrt2Over5, work);
  const Interval pi = enclose_constant(ConstantName::kPi, work);
  const Interval big_t = interval_sub(
      pi, interval_mul(Interval(Dyadic(4)), atn, work), work);
  for (const auto& [m, q] : terms_) {
    Interval term = Interval::from_rational(q, work);
    if (m.t_pow > 0) {
      for (int i = 0; i < m.t_pow; ++i) term = interval_mul(term, big_t, work);
    } else if (m.t_pow < 0) {
      for (int i = 0; i > m.t_pow; --i) term = interval_div(term, big_t, work);
    }
    for (unsigned i = 0; i < m.a_pow; ++i) term = interval_mul(term, atn, work);
    if (m.s_pow) term = interval_mul(term, s2, work);
    sum = interval_add(sum, term, work);
  }
  return sum;
}

std::string SymCoeff::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, q] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rational_to_string(q);
    if (m.t_pow != 0) os << "*T^" << m.t_pow;
    if (m.a_pow != 0) os << "*A^" << m.a_pow;
    if (m.s_pow != 0) os << "*s";
  }
  return os.str();
}

// SymPoly ----------------------------------------------------------------

SymPoly SymPoly::from_rational_poly(const SparsePoly& p) {
  SymPoly r(p.arity());
  for (const auto& [m, c] : p.terms()) {
    r.terms_.emplace(m, SymCoeff(c));
  }
  return r;
}

SymPoly SymPoly::constant(std::size_t arity, const SymCoeff& c) {
  SymPoly r(arity);
  r.add_term(Monomial(arity, 0), c);
  return r;
}

std::uint32_t SymPoly::total_degree() const {
  std::uint32_t deg = 0;
  for (const auto& [m, c] : terms_) {
    std::uint32_t d = 0;
    for (auto e : m) d += e;
    deg = std::max(deg, d);
  }
  return deg;
}

void SymPoly::add_term(const Monomial& m, const SymCoeff& c) {
  if (m.size() != arity_) throw ArityMismatch("monomial arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymPoly operator+(const SymPoly& p, const SymPoly& q) {
  if (p.arity_ != q.arity_) throw ArityMismatch("arity mismatch");
  SymPoly r = p;
  for (const auto& [m, c] : q.terms_) r.add_term(m, c);
  return r;
}

SymPoly operator-(const SymPoly& p, const SymPoly& q) {
  if (p.arity_ != q.arity_) throw ArityMismatch("arity mismatch");
  SymPoly r = p;
  for (const auto& [m, c] : q.terms_) r.add_term(m, -c);
  return r;
}

SymPoly operator*(const SymPoly& p, const SymPoly& q) {
  if (p.arity_ != q.arity_) throw ArityMismatch("arity mismatch");
  SymPoly r(p.arity_);
  Monomial sum(p.arity_);
  for (const auto& [ma, ca] : p.terms_) {
    for (const auto& [mb, cb] : q.terms_) {
      for (std::size_t i = 0; i < p.arity_; ++i) sum[i] = ma[i] + mb[i];
      r.add_term(sum, ca * cb);
    }
  }
  return r;
}

SymPoly SymPoly::scaled(const SymCoeff& c) const {
  SymPoly r(arity_);
  if (c.is_zero()) return r;
  for (const auto& [m, coeff] : terms_) r.add_term(m, coeff * c);
  return r;
}

SymCoeff SymPoly::eval(const std::vector<Rational>& point) const {
  if (point.size() != arity_) throw ArityMismatch("point arity mismatch");
  SymCoeff sum;
  for (const auto& [m, c] : terms_) {
    Rational x(1);
    for (std::size_t i = 0; i < arity_; ++i) {
      for (std::uint32_t k = 0; k < m[i]; ++k) x *= point[i];
    }
    sum = sum + c * SymCoeff(x);
  }
  return sum;
}

std::optional<SparsePoly> SymPoly::to_rational_poly() const {
  SparsePoly r(arity_);
  for (const auto& [m, c] : terms_) {
    const auto q = c.rational_value();
    if (!q) return std::nullopt;
    r.add_term(m, *q);
  }
  return r;
}

}  // namespace rigorkit
