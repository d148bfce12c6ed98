#include <mutex>

#include "rigorkit/kepler.hpp"

namespace rigorkit::kepler {

namespace {

// rcp_upper(t) = 1/4 - 37 t/1600 + t^2/1000 - 13 t^3/640000 + t^4/6400000
SparsePoly rcp_upper_poly() {
  SparsePoly p(1);
  p.add_term({0}, Rational(1, 4));
  p.add_term({1}, Rational(-37, 1600));
  p.add_term({2}, Rational(1, 1000));
  p.add_term({3}, Rational(-13, 640000));
  p.add_term({4}, Rational(1, 6400000));
  return p;
}

// sqrt_lower(t) = 8 sqrt2 + 3/(64 T) (t - 128),  T = pi - 4 arctan(sqrt2/5)
SymPoly sqrt_lower_body() {
  SymPoly b(1);
  SymCoeff c0 = SymCoeff::sqrt2(Rational(8)) +
                SymCoeff::big_t(Rational(-6), -1);
  b.add_term({0}, c0);
  b.add_term({1}, SymCoeff::big_t(Rational(3, 64), -1));
  return b;
}

// sqrt_upper(t) = 8 sqrt2 + (t - 128)/(16 sqrt2) = 4 sqrt2 + sqrt2 t / 32
SymPoly sqrt_upper_body() {
  SymPoly b(1);
  b.add_term({0}, SymCoeff::sqrt2(Rational(4)));
  b.add_term({1}, SymCoeff::sqrt2(Rational(1, 32)));
  return b;
}

// arctan_upper(t) = A + 25/27 (t - sqrt2/5) , the tangent line at sqrt2/5
SymPoly arctan_upper_body() {
  SymPoly b(1);
  b.add_term({0}, SymCoeff::atn() + SymCoeff::sqrt2(Rational(-5, 27)));
  b.add_term({1}, SymCoeff(Rational(25, 27)));
  return b;
}

// Substitutes an arity-6 symbolic polynomial into a univariate body of
// degree <= 1 (all bodies used on SymPoly arguments are affine).
SymPoly substitute_affine(const SymPoly& body, const SymPoly& arg) {
  SymCoeff c0, c1;
  for (const auto& [m, c] : body.terms()) {
    if (m[0] == 0) c0 = c0 + c;
    else if (m[0] == 1) c1 = c1 + c;
    else throw ConstructionError("affine substitution on nonlinear body");
  }
  return SymPoly::constant(arg.arity(), c0) + arg.scaled(c1);
}

struct Surrogate {
  SymPoly g;
  SparsePoly p;

  Surrogate() : g(6), p(6) {
    const SymPoly delta = SymPoly::from_rational_poly(delta_poly());
    // -delta_oct/12 * sqrt_lower(delta)
    const SymCoeff neg_doct_12 =
        -(SymCoeff::delta_oct() * SymCoeff(Rational(1, 12)));
    const SymPoly term1 =
        substitute_affine(sqrt_lower_body(), delta).scaled(neg_doct_12);

    // The arctan argument of the score is sqrt(delta)/(2 a_i); its
    // surrogate is sqrt_upper(delta) rcp_upper(a_i) / 2, whose value at
    // the symmetric corner is exactly the arctan anchor sqrt2/5.
    const SymPoly sqrt_up_delta = substitute_affine(sqrt_upper_body(), delta);
    const SparsePoly rcp = rcp_upper_poly();
    SymPoly atan_sum(6);
    bool any = false;
    for (int i = 0; i < 4; ++i) {
      const SparsePoly r_i = rcp.compose({a_poly(i)});
      const SymPoly u_i =
          (sqrt_up_delta * SymPoly::from_rational_poly(r_i))
              .scaled(SymCoeff(Rational(1, 2)));
      const SymPoly at_i = substitute_affine(arctan_upper_body(), u_i);
      atan_sum = any ? atan_sum + at_i : at_i;
      any = true;
    }
    g = term1 + atan_sum.scaled(SymCoeff(Rational(2, 3)));

    // p = sqrt2 (g - pt); every symbolic part must cancel.
    const SymPoly diff = g - SymPoly::constant(6, SymCoeff::pt());
    const SymPoly p_sym = diff.scaled(SymCoeff::sqrt2());
    auto rational = p_sym.to_rational_poly();
    if (!rational) {
      throw ConstructionError(
          "surrogate cancellation failed: non-rational coefficient in p");
    }
    p = std::move(*rational);
  }
};

const Surrogate& surrogate() {
  static const Surrogate s;
  return s;
}

// Shared sub-certificates -----------------------------------------------

ExprPtr t_var() { return Expr::variable(0); }

ExprPtr sqrt_lower_expr() {
  // 8 sqrt2 + 3/(64 (pi - 4 atn)) * (t - 128)
  const ExprPtr big_t =
      Expr::sub(Expr::constant(ConstantName::kPi),
                Expr::mul(Expr::rational(Rational(4)),
                          Expr::constant(ConstantName::kAtanSqrt2Over5)));
  const ExprPtr slope =
      Expr::div(Expr::rational(Rational(3, 64)), big_t);
  return Expr::add(
      Expr::mul(Expr::rational(Rational(8)),
                Expr::constant(ConstantName::kSqrt2)),
      Expr::mul(slope, Expr::sub(t_var(), Expr::rational(Rational(128)))));
}

VerifyReport merge(VerifyReport a, const VerifyReport& b) {
  a.boxes_examined += b.boxes_examined;
  a.max_depth = std::max(a.max_depth, b.max_depth);
  if (b.verdict != Verdict::kProven) {
    a.verdict = b.verdict;
    if (b.witness) a.witness = b.witness;
  }
  return a;
}

VerifyReport proven_report() {
  VerifyReport r;
  r.verdict = Verdict::kProven;
  r.boxes_examined = 0;
  return r;
}

VerifyReport failed_report() {
  VerifyReport r;
  r.verdict = Verdict::kBudgetExhausted;
  return r;
}

// Certified range of a univariate rational polynomial over a domain.
std::optional<RationalInterval> certified_range(const SparsePoly& p,
                                                const RationalInterval& dom,
                                                std::size_t budget) {
  const Box box(std::vector<RationalInterval>{dom});
  auto r = range_enclosure(p, box, Rational(1, 1000), budget);
  if (r.budget_exhausted) return std::nullopt;
  return r.range;
}

}  // namespace

const SymPoly& surrogate_g() { return surrogate().g; }

const SparsePoly& build_p() { return surrogate().p; }

std::array<Approximation, 4> approximations(std::size_t budget) {
  const RationalInterval sqrt_domain{Rational(128), Rational(501)};

  // Range of a_0 over the box certifies the (reconstructed) rcp domain;
  // all a_i are permutations of a_0 over a symmetric box.
  auto a_range = range_enclosure(a_poly(0), main_box(), Rational(1, 100),
                                 budget);
  RationalInterval rcp_domain{a_range.range.lo, a_range.range.hi};

  // Reconstructed arctan domain: half the product of the certified
  // ranges of sqrt_upper over the delta range and rcp_upper over its
  // domain. sqrt_upper(t) = sqrt2 (128 + t)/32 is increasing; bound
  // sqrt2 by rational outward bounds.
  const Interval s2 = enclose_constant(ConstantName::kSqrt2, 96);
  const Rational s2_lo = s2.lo_q(), s2_hi = s2.hi_q();
  const Rational su_lo = s2_lo * (128 + sqrt_domain.lo) / 32;
  const Rational su_hi = s2_hi * (128 + sqrt_domain.hi) / 32;
  auto rcp_range = certified_range(rcp_upper_poly(), rcp_domain, budget);
  RationalInterval atan_domain{Rational(0), Rational(1)};
  if (rcp_range && rcp_range->lo > 0) {
    atan_domain = RationalInterval{su_lo * rcp_range->lo / 2,
                                   su_hi * rcp_range->hi / 2};
  }

  return {
      Approximation{ApproxName::kAtanUpper, arctan_upper_body(), atan_domain,
                    true},
      Approximation{ApproxName::kRcpUpper,
                    SymPoly::from_rational_poly(rcp_upper_poly()), rcp_domain,
                    true},
      Approximation{ApproxName::kSqrtLower, sqrt_lower_body(), sqrt_domain,
                    false},
      Approximation{ApproxName::kSqrtUpper, sqrt_upper_body(), sqrt_domain,
                    false},
  };
}

VerifyReport validate_approximation(const Approximation& a,
                                    std::size_t budget) {
  const RationalInterval& dom = a.validity_domain;
  const Box dom_box(std::vector<RationalInterval>{dom});
  VerifyOptions opts;
  opts.budget = budget;

  switch (a.name) {
    case ApproxName::kSqrtUpper: {
      // sqrt(t) <= body(t) on the domain, via t <= body(t)^2 for
      // body >= 0. body^2 - t is rational: sqrt2 squares away.
      const SymPoly sq = a.body * a.body;
      auto sq_rat = sq.to_rational_poly();
      if (!sq_rat) return failed_report();
      SparsePoly q = *sq_rat;
      q.add_term({1}, Rational(-1));  // body^2 - t
      VerifyReport r =
          verify_lower(*q.to_expr(), dom_box, Rational(0), opts);
      // Positivity of the bound itself on the domain.
      const Interval body_range = Interval::hull(
          a.body.eval({dom.lo}).enclosure(), a.body.eval({dom.hi}).enclosure());
      if (body_range.lo().sign() <= 0) return failed_report();
      return r;
    }
    case ApproxName::kSqrtLower: {
      // body(t) <= sqrt(t): body(128)^2 = 128 exactly, and
      // d/dt (t - body^2) > 0 on the domain, so t - body^2 >= 0;
      // body >= 0 then gives body <= sqrt t.
      const SymCoeff at128 = a.body.eval({Rational(128)});
      if (!(at128 == SymCoeff::sqrt2(Rational(8)))) return failed_report();
      // q'(t) = 1 - 2 body(t) body'(t); body' is the constant slope.
      const ExprPtr body = sqrt_lower_expr();
      const ExprPtr big_t =
          Expr::sub(Expr::constant(ConstantName::kPi),
                    Expr::mul(Expr::rational(Rational(4)),
                              Expr::constant(ConstantName::kAtanSqrt2Over5)));
      const ExprPtr slope =
          Expr::div(Expr::rational(Rational(3, 64)), big_t);
      const ExprPtr qprime = Expr::sub(
          Expr::rational(Rational(1)),
          Expr::mul(Expr::mul(Expr::rational(Rational(2)), body), slope));
      VerifyReport r = verify_lower(*qprime, dom_box, Rational(0), opts);
      // body positive on the domain (slope > 0 and body(128) = 8 sqrt2).
      const Interval slope_range = eval_point(
          *slope, {Rational(0)});
      if (slope_range.lo().sign() <= 0) return failed_report();
      return r;
    }
    case ApproxName::kRcpUpper: {
      // 1/t <= body(t) on the domain (t > 0), via
      // q(t) = t body(t) - 1 >= 0. q is tangent to zero at the two
      // interpolation nodes t = 20 and t = 40; deflating both double
      // roots leaves a cofactor that must be positive on the domain.
      if (dom.lo <= 0) return failed_report();
      auto body_rat = a.body.to_rational_poly();
      if (!body_rat) return failed_report();
      SparsePoly t = SparsePoly::variable(1, 0);
      SparsePoly q = t * *body_rat;
      q.add_term({0}, Rational(-1));
      SparsePoly cofactor = q;
      for (const long node : {40L, 40L, 20L, 20L}) {
        SparsePoly root(1);
        root.add_term({0}, Rational(-node));
        root.add_term({1}, Rational(1));
        auto divided = univariate_exact_divide(cofactor, root);
        if (!divided) return failed_report();
        cofactor = std::move(*divided);
      }
      auto range = range_enclosure(cofactor, dom_box, Rational(1, 100000),
                                   budget);
      VerifyReport r;
      r.boxes_examined = range.boxes_examined;
      r.verdict = (!range.budget_exhausted && range.range.lo > 0)
                      ? Verdict::kProven
                      : Verdict::kBudgetExhausted;
      return r;
    }
    case ApproxName::kAtanUpper: {
      // body is the tangent line to arctan at m = sqrt2/5. With
      // e(t) = body(t) - arctan(t):
      //   e(m) = 0                    (ring identity: body(m) = A),
      //   e'(t) = 25/27 - 1/(1+t^2),  whose sign is that of t^2 - 2/25,
      // so e decreases up to m and increases after it; hence e >= 0 on
      // [0, inf). Machine checks: the two ring identities, the rational
      // bracketing t1 < m < t2, domain positivity, and interval
      // verification of the derivative sign on both flanks (which pins
      // the slope against arctan's actual derivative).
      if (dom.lo <= 0) return failed_report();
      SymCoeff slope, c0;
      for (const auto& [m, c] : a.body.terms()) {
        if (m[0] == 1) slope = slope + c;
        else if (m[0] == 0) c0 = c0 + c;
        else return failed_report();
      }
      if (!(slope == SymCoeff(Rational(25, 27)))) return failed_report();
      // slope must be arctan'(m): 1/(1 + m^2) with m^2 = 2/25.
      if (!(Rational(25, 27) * (1 + Rational(2, 25)) == 1)) {
        return failed_report();
      }
      // body(m) = c0 + slope m must equal A = arctan(m).
      const SymCoeff at_anchor =
          c0 + slope * SymCoeff::sqrt2(Rational(1, 5));
      if (!(at_anchor == SymCoeff::atn())) return failed_report();
      const Rational t1(28284, 100000), t2(28285, 100000);
      if (!(t1 * t1 < Rational(2, 25) && Rational(2, 25) < t2 * t2)) {
        return failed_report();
      }
      // e'(t) = 25/27 - 1/(1+t^2).
      const ExprPtr eprime = Expr::sub(
          Expr::rational(Rational(25, 27)),
          Expr::div(Expr::rational(Rational(1)),
                    Expr::add(Expr::rational(Rational(1)),
                              Expr::pow(t_var(), 2))));
      VerifyReport r = proven_report();
      if (dom.lo < t1) {
        const Box left(
            std::vector<RationalInterval>{RationalInterval{dom.lo, t1}});
        r = merge(r, verify_upper(*eprime, left, Rational(0), opts));
      }
      if (dom.hi > t2) {
        const Box right(
            std::vector<RationalInterval>{RationalInterval{t2, dom.hi}});
        r = merge(r, verify_lower(*eprime, right, Rational(0), opts));
      }
      return r;
    }
  }
  return failed_report();
}

}  // namespace rigorkit::kepler
