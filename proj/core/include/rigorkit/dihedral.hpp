#pragma once

#include <array>

#include "rigorkit/expr.hpp"
#include "rigorkit/interval.hpp"

namespace rigorkit {

/// Expression for the Cayley-Menger quantity of a simplex with edge
/// lengths (y1..y6): vertices (0, v1, v2, v3), y1=|v1|, y2=|v2|, y3=|v3|,
/// y4=|v2-v3|, y5=|v1-v3|, y6=|v1-v2|. Positive exactly on nondegenerate
/// simplices; equals 288 vol^2.
ExprPtr cayley_menger_expr();

/// d(CM)/d(x4) with x_i = y_i^2, as an expression in y.
ExprPtr cayley_menger_d4_expr();

/// Dihedral angle along the edge {0, v1}, in radians, as an expression in
/// the six edge lengths: pi/2 + arctan(-CM4 / sqrt(4 y1^2 CM)).
ExprPtr dihedral_expr();

/// Enclosure of the dihedral angle along {0, v1} for edge lengths within
/// the six given intervals. The lengths must admit a nondegenerate
/// simplex everywhere; this is checked rigorously (bounded subdivision)
/// and DegenerateSimplex is thrown when positivity of the Cayley-Menger
/// quantity cannot be certified.
Interval dihedral_from_edges(const std::array<Interval, 6>& edges,
                             unsigned precision = kDefaultPrecisionBits,
                             std::size_t budget = 4096);

}  // namespace rigorkit
