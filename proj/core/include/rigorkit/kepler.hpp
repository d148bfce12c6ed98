#pragma once

#include <array>

#include "rigorkit/bernstein.hpp"
#include "rigorkit/dihedral.hpp"
#include "rigorkit/symbolic.hpp"
#include "rigorkit/verify.hpp"

namespace rigorkit::kepler {

/// The domain box of the main inequality, [2, 2.51]^6.
Box main_box();

/// Cayley-Menger quantity of the six edge lengths as an exact polynomial
/// of arity 6 (expanded 5x5 determinant over squared lengths, halved).
/// Normalization fixed by delta(2,...,2) = 128. Per-variable degree 4.
const SparsePoly& delta_poly();

/// The same quantity as a determinant-structured expression tree, kept
/// separate for interval evaluation; equality with delta_poly is
/// property-tested.
ExprPtr delta_det_expr();

/// d(delta)/d(x4) with x_i = y_i^2, as an exact polynomial in y.
/// Drives the closed dihedral form pi/2 + arctan(-delta4/sqrt(4 x1 delta)).
const SparsePoly& delta4_poly();

/// Rigorous rational dihedral bound from a squared certificate: if
/// 4 c^2 x1 delta - delta4^2 >= 0 on a box (c > 0), the dihedral lies in
/// [pi/2 - arctan(c), pi/2 + arctan(c)]; this returns outward rational
/// bounds of that interval at the given precision.
RationalInterval dihedral_band(const Rational& c, unsigned precision = 96);

/// a_i, i = 0..3: the vertex-solid-angle denominators. a1..a3 are the
/// fixed variable permutations of a0.
const SparsePoly& a_poly(int i);

/// The scoring function
///   gamma(y) = -delta_oct/12 sqrt(delta) + 2/3 sum_i arctan(sqrt(delta)/(2 a_i))
/// as an expression tree over y1..y6.
ExprPtr gamma_expr();

enum class ApproxName { kAtanUpper, kRcpUpper, kSqrtLower, kSqrtUpper };

/// One-sided polynomial approximation with coefficients in the ring
/// generated by rationals, sqrt 2, pi and arctan(sqrt2/5).
struct Approximation {
  ApproxName name;
  SymPoly body;  // univariate, variable t
  RationalInterval validity_domain;
  bool domain_reconstructed = false;
};

/// The four approximations with their validity domains. The sqrt domains
/// are the stated [128, 501]; the rcp/arctan domains are reconstructed
/// in-run from certified ranges of a_i and of the sqrt-rcp composition.
std::array<Approximation, 4> approximations(std::size_t budget = 1u << 14);

/// Machine verification that an approximation bounds its target on its
/// validity domain.
VerifyReport validate_approximation(const Approximation& a,
                                    std::size_t budget = 1u << 14);

/// The surrogate upper bound g of gamma: gamma's definition with sqrt,
/// reciprocal and arctan replaced by their one-sided approximations.
/// Polynomial in y with coefficients in the extension ring.
const SymPoly& surrogate_g();

/// p(y) = sqrt(2) (g(y) - pt). The transcendental parts cancel by
/// construction; throws ConstructionError if any symbolic part survives.
/// 12945 monomials, total degree 18.
const SparsePoly& build_p();

/// Closed forms of the scoring constants as ring elements.
SymCoeff pt_sym();

}  // namespace rigorkit::kepler
