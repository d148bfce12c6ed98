#include "rigorkit/kepler.hpp"

#include <mutex>

namespace rigorkit::kepler {

Box main_box() { return Box::uniform(6, Rational(2), Rational(251, 100)); }

namespace {

// det of a square SparsePoly matrix by cofactor expansion along row 0.
SparsePoly det(const std::vector<std::vector<SparsePoly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  SparsePoly acc(m[0][0].arity());
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<SparsePoly>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<SparsePoly> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    SparsePoly term = m[0][j] * det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

std::vector<std::vector<SparsePoly>> distance_matrix() {
  auto one = SparsePoly::constant(6, Rational(1));
  auto zero = SparsePoly::zero(6);
  auto sq = [](int i) {
    return SparsePoly::variable(6, i - 1) * SparsePoly::variable(6, i - 1);
  };
  // Squared-distance layout of the four simplex vertices plus the
  // projective row/column.
  return {
      {zero, one, one, one, one},
      {one, zero, sq(3), sq(2), sq(1)},
      {one, sq(3), zero, sq(4), sq(5)},
      {one, sq(2), sq(4), zero, sq(6)},
      {one, sq(1), sq(5), sq(6), zero},
  };
}

SparsePoly build_delta() {
  SparsePoly d = det(distance_matrix()).scaled(Rational(1, 2));
  const std::vector<Rational> corner(6, Rational(2));
  const Rational at_corner = d.eval_exact(corner);
  if (at_corner == -128) d = -d;
  if (d.eval_exact(corner) != 128) {
    throw ConstructionError("delta normalization failed");
  }
  return d;
}

SparsePoly build_a0() {
  auto v = [](int i) { return SparsePoly::variable(6, i - 1); };
  const Rational half(1, 2);
  SparsePoly p = v(1) * v(2) * v(3);
  SparsePoly s = v(1) * v(1) * v(2) + v(1) * (v(2) * v(2)) +
                 v(1) * v(1) * v(3) + v(2) * v(2) * v(3) +
                 v(1) * (v(3) * v(3)) + v(2) * (v(3) * v(3)) -
                 v(1) * (v(4) * v(4)) - v(2) * (v(5) * v(5)) -
                 v(3) * (v(6) * v(6));
  return p + s.scaled(half);
}

// a1(y) = a0(y1,y5,y6,y4,y2,y3), a2(y) = a0(y2,y4,y6,y5,y1,y3),
// a3(y) = a0(y4,y5,y3,y1,y2,y6).
constexpr int kPerms[3][6] = {
    {1, 5, 6, 4, 2, 3},
    {2, 4, 6, 5, 1, 3},
    {4, 5, 3, 1, 2, 6},
};

SparsePoly permute_a0(const SparsePoly& a0, const int (&perm)[6]) {
  std::vector<SparsePoly> args;
  args.reserve(6);
  for (int i = 0; i < 6; ++i) {
    args.push_back(SparsePoly::variable(6, perm[i] - 1));
  }
  return a0.compose(args);
}

SparsePoly build_delta4() {
  auto x = [](int i) {
    return SparsePoly::variable(6, i - 1) * SparsePoly::variable(6, i - 1);
  };
  // x1 (-x1 + x2 + x3 - 2 x4 + x5 + x6) + x2 x5 + x3 x6 - x2 x3 - x5 x6
  SparsePoly lin = -x(1) + x(2) + x(3) - x(4).scaled(Rational(2)) + x(5) +
                   x(6);
  return x(1) * lin + x(2) * x(5) + x(3) * x(6) - x(2) * x(3) - x(5) * x(6);
}

struct Tables {
  SparsePoly delta;
  SparsePoly delta4;
  std::array<SparsePoly, 4> a;

  Tables() : delta(build_delta()), delta4(build_delta4()) {
    a[0] = build_a0();
    for (int i = 0; i < 3; ++i) a[i + 1] = permute_a0(a[0], kPerms[i]);
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

const SparsePoly& delta_poly() { return tables().delta; }

const SparsePoly& delta4_poly() { return tables().delta4; }

const SparsePoly& a_poly(int i) { return tables().a.at(i); }

RationalInterval dihedral_band(const Rational& c, unsigned precision) {
  const Interval pi = enclose_constant(ConstantName::kPi, precision);
  // arctan at a rational point, outward.
  Interval at = arctan_point(c, precision);
  const Rational lo = pi.lo_q() / 2 - at.hi_q();
  const Rational hi = pi.hi_q() / 2 + at.hi_q();
  return RationalInterval{lo, hi};
}

ExprPtr delta_det_expr() {
  // Cofactor expansion over expression nodes, mirroring the matrix.
  auto one = Expr::rational(Rational(1));
  auto zero = Expr::rational(Rational(0));
  auto sq = [](int i) { return Expr::pow(Expr::variable(i - 1), 2); };
  std::vector<std::vector<ExprPtr>> m = {
      {zero, one, one, one, one},
      {one, zero, sq(3), sq(2), sq(1)},
      {one, sq(3), zero, sq(4), sq(5)},
      {one, sq(2), sq(4), zero, sq(6)},
      {one, sq(1), sq(5), sq(6), zero},
  };
  // Recursive lambda for determinant of an Expr matrix.
  std::function<ExprPtr(const std::vector<std::vector<ExprPtr>>&)> edet =
      [&](const std::vector<std::vector<ExprPtr>>& mm) -> ExprPtr {
    const std::size_t n = mm.size();
    if (n == 1) return mm[0][0];
    ExprPtr acc;
    for (std::size_t j = 0; j < n; ++j) {
      // Skip structurally-zero pivots.
      if (mm[0][j]->kind() == Expr::Kind::kRational &&
          mm[0][j]->rational_value() == 0) {
        continue;
      }
      std::vector<std::vector<ExprPtr>> minor;
      for (std::size_t r = 1; r < n; ++r) {
        std::vector<ExprPtr> row;
        for (std::size_t c = 0; c < n; ++c) {
          if (c != j) row.push_back(mm[r][c]);
        }
        minor.push_back(std::move(row));
      }
      ExprPtr term = Expr::mul(mm[0][j], edet(minor));
      if (j % 2 == 1) term = Expr::neg(term);
      acc = acc ? Expr::add(acc, term) : term;
    }
    return acc ? acc : Expr::rational(Rational(0));
  };
  ExprPtr d = Expr::mul(Expr::rational(Rational(1, 2)), edet(m));
  // Match delta_poly's sign normalization (checked against the corner).
  const std::vector<Rational> corner(6, Rational(2));
  if (eval_exact_rational(*d, corner) == -128) d = Expr::neg(d);
  return d;
}

ExprPtr gamma_expr() {
  const ExprPtr delta = delta_det_expr();
  const ExprPtr root = Expr::sqrt(delta);
  // -delta_oct/12 * sqrt(delta)
  const ExprPtr lead = Expr::neg(
      Expr::mul(Expr::mul(Expr::rational(Rational(1, 12)),
                          Expr::constant(ConstantName::kDeltaOct)),
                root));
  ExprPtr sum;
  for (int i = 0; i < 4; ++i) {
    const ExprPtr ai = a_poly(i).to_expr();
    const ExprPtr term = Expr::arctan(
        Expr::div(root, Expr::mul(Expr::rational(Rational(2)), ai)));
    sum = sum ? Expr::add(sum, term) : term;
  }
  return Expr::add(lead,
                   Expr::mul(Expr::rational(Rational(2, 3)), sum));
}

SymCoeff pt_sym() { return SymCoeff::pt(); }

}  // namespace rigorkit::kepler
