#include "rigorkit/dihedral.hpp"

#include <deque>

namespace rigorkit {

namespace {

ExprPtr rat(long n) { return Expr::rational(Rational(n)); }
ExprPtr x(int i) { return Expr::pow(Expr::variable(i - 1), 2); }  // x_i = y_i^2

ExprPtr sum(std::initializer_list<ExprPtr> terms) {
  ExprPtr acc;
  for (const auto& t : terms) acc = acc ? Expr::add(acc, t) : t;
  return acc;
}

}  // namespace

ExprPtr cayley_menger_expr() {
  // x1 x4 (-x1+x2+x3-x4+x5+x6) + x2 x5 (x1-x2+x3+x4-x5+x6)
  //   + x3 x6 (x1+x2-x3+x4+x5-x6) - x2 x3 x4 - x1 x3 x5 - x1 x2 x6
  //   - x4 x5 x6
  const ExprPtr t1 = Expr::mul(Expr::mul(x(1), x(4)),
                               sum({Expr::neg(x(1)), x(2), x(3),
                                    Expr::neg(x(4)), x(5), x(6)}));
  const ExprPtr t2 = Expr::mul(Expr::mul(x(2), x(5)),
                               sum({x(1), Expr::neg(x(2)), x(3), x(4),
                                    Expr::neg(x(5)), x(6)}));
  const ExprPtr t3 = Expr::mul(Expr::mul(x(3), x(6)),
                               sum({x(1), x(2), Expr::neg(x(3)), x(4), x(5),
                                    Expr::neg(x(6))}));
  const ExprPtr neg_terms = sum({Expr::mul(Expr::mul(x(2), x(3)), x(4)),
                                 Expr::mul(Expr::mul(x(1), x(3)), x(5)),
                                 Expr::mul(Expr::mul(x(1), x(2)), x(6)),
                                 Expr::mul(Expr::mul(x(4), x(5)), x(6))});
  return Expr::sub(sum({t1, t2, t3}), neg_terms);
}

ExprPtr cayley_menger_d4_expr() {
  // x1 (-x1+x2+x3-2x4+x5+x6) + x2 x5 + x3 x6 - x2 x3 - x5 x6
  const ExprPtr lin =
      sum({Expr::neg(x(1)), x(2), x(3), Expr::neg(Expr::mul(rat(2), x(4))),
           x(5), x(6)});
  return Expr::sub(
      sum({Expr::mul(x(1), lin), Expr::mul(x(2), x(5)),
           Expr::mul(x(3), x(6))}),
      Expr::add(Expr::mul(x(2), x(3)), Expr::mul(x(5), x(6))));
}

ExprPtr dihedral_expr() {
  const ExprPtr cm = cayley_menger_expr();
  const ExprPtr cm4 = cayley_menger_d4_expr();
  const ExprPtr root =
      Expr::sqrt(Expr::mul(Expr::mul(rat(4), x(1)), cm));
  const ExprPtr half_pi =
      Expr::mul(Expr::rational(Rational(1, 2)), Expr::constant(ConstantName::kPi));
  return Expr::add(half_pi, Expr::arctan(Expr::div(Expr::neg(cm4), root)));
}

Interval dihedral_from_edges(const std::array<Interval, 6>& edges,
                             unsigned precision, std::size_t budget) {
  std::vector<RationalInterval> coords;
  coords.reserve(6);
  for (const auto& e : edges) {
    coords.push_back(RationalInterval{e.lo_q(), e.hi_q()});
  }
  const Box box{coords};
  static const ExprPtr cm = cayley_menger_expr();
  static const ExprPtr dih = dihedral_expr();

  // Refine until the Cayley-Menger quantity is certified positive on
  // every leaf, then hull the dihedral enclosures over the leaves.
  std::deque<Box> queue{box};
  std::vector<Box> leaves;
  std::size_t examined = 0;
  while (!queue.empty()) {
    if (++examined > budget) {
      throw DegenerateSimplex(
          "could not certify simplex nondegeneracy within budget");
    }
    Box b = std::move(queue.front());
    queue.pop_front();
    const Interval v = eval_interval(*cm, b, precision);
    if (v.lo().sign() > 0) {
      leaves.push_back(std::move(b));
      continue;
    }
    if (v.hi().sign() <= 0) {
      throw DegenerateSimplex(
          "edge lengths admit no nondegenerate simplex on part of the box");
    }
    if (b.max_width() == 0) {
      throw DegenerateSimplex(
          "cannot certify nondegeneracy at a point configuration");
    }
    auto [lo_half, hi_half] = b.split(b.widest_axis());
    queue.push_back(std::move(lo_half));
    queue.push_back(std::move(hi_half));
  }

  Interval result;
  bool got = false;
  for (const auto& leaf : leaves) {
    const Interval v = eval_interval(*dih, leaf, precision);
    result = got ? Interval::hull(result, v) : v;
    got = true;
  }
  if (!got) throw DegenerateSimplex("empty edge-length box");
  return result;
}

}  // namespace rigorkit
