#pragma once

#include <functional>
#include <string>

#include <json.hpp>

#include "rigorkit/expr.hpp"
#include "rigorkit/sparse_poly.hpp"

namespace rigorkit {

using Json = nlohmann::json;

/// Resolves "fn" nodes ({"op":"fn","name":...}) to built-in expression
/// bodies during parsing; returns nullptr for unknown names.
using FnResolver = std::function<ExprPtr(const std::string&)>;

/// Node-tagged tree encoding:
///   {"op":"var","index":0}
///   {"op":"const","value":"3/4"}           exact rational, string form
///   {"op":"const","name":"pi"}             named constant
///   {"op":"add"|"sub"|"mul"|"div","args":[a,b]}
///   {"op":"pow","exp":n,"args":[a]}
///   {"op":"sqrt"|"arctan"|"neg","args":[a]}
///   {"op":"fn","name":"kepler.p"}          registry reference
Json expr_to_json(const Expr& e);
ExprPtr expr_from_json(const Json& j, const FnResolver& resolver = {});

/// {"arity":n,"terms":[[[e1..en],"num","den"],...]}
Json poly_to_json(const SparsePoly& p);
SparsePoly poly_from_json(const Json& j);

/// [["lo","hi"],...] with exact rational strings.
Json box_to_json(const Box& b);
Box box_from_json(const Json& j);

std::string rational_to_exact_string(const Rational& q);
Rational rational_from_string(const std::string& s);

}  // namespace rigorkit
