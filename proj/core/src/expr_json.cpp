#include "rigorkit/serialize.hpp"

namespace rigorkit {

std::string rational_to_exact_string(const Rational& q) {
  return q.get_str();
}

Rational rational_from_string(const std::string& s) {
  auto q = parse_rational(s);
  if (!q) throw ParseError("malformed rational: " + s);
  return *q;
}

Json expr_to_json(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::kVariable:
      return Json{{"op", "var"}, {"index", e.variable_index()}};
    case Expr::Kind::kRational:
      return Json{{"op", "const"},
                  {"value", rational_to_exact_string(e.rational_value())}};
    case Expr::Kind::kConstant:
      return Json{{"op", "const"},
                  {"name", constant_name_string(e.constant_name())}};
    default:
      break;
  }
  const char* op = nullptr;
  switch (e.kind()) {
    case Expr::Kind::kAdd: op = "add"; break;
    case Expr::Kind::kSub: op = "sub"; break;
    case Expr::Kind::kMul: op = "mul"; break;
    case Expr::Kind::kDiv: op = "div"; break;
    case Expr::Kind::kPow: op = "pow"; break;
    case Expr::Kind::kSqrt: op = "sqrt"; break;
    case Expr::Kind::kArctan: op = "arctan"; break;
    case Expr::Kind::kNeg: op = "neg"; break;
    default: throw std::logic_error("unreachable");
  }
  Json args = Json::array();
  for (const auto& c : e.children()) args.push_back(expr_to_json(*c));
  Json j{{"op", op}, {"args", std::move(args)}};
  if (e.kind() == Expr::Kind::kPow) j["exp"] = e.pow_exponent();
  return j;
}

ExprPtr expr_from_json(const Json& j, const FnResolver& resolver) {
  if (!j.is_object() || !j.contains("op")) {
    throw ParseError("expression node must be an object with an 'op' tag");
  }
  const std::string op = j.at("op").get<std::string>();
  if (op == "var") {
    return Expr::variable(j.at("index").get<std::size_t>());
  }
  if (op == "const") {
    if (j.contains("name")) {
      ConstantName name;
      const std::string text = j.at("name").get<std::string>();
      if (!parse_constant_name(text, &name)) {
        throw ParseError("unknown constant name: " + text);
      }
      return Expr::constant(name);
    }
    return Expr::rational(
        rational_from_string(j.at("value").get<std::string>()));
  }
  if (op == "fn") {
    const std::string name = j.at("name").get<std::string>();
    ExprPtr body = resolver ? resolver(name) : nullptr;
    if (!body) throw ParseError("unresolved function reference: " + name);
    return body;
  }
  auto arg = [&](std::size_t i) {
    const auto& args = j.at("args");
    if (!args.is_array() || args.size() <= i) {
      throw ParseError("missing argument " + std::to_string(i) + " for " + op);
    }
    return expr_from_json(args[i], resolver);
  };
  if (op == "add") return Expr::add(arg(0), arg(1));
  if (op == "sub") return Expr::sub(arg(0), arg(1));
  if (op == "mul") return Expr::mul(arg(0), arg(1));
  if (op == "div") return Expr::div(arg(0), arg(1));
  if (op == "pow") return Expr::pow(arg(0), j.at("exp").get<unsigned>());
  if (op == "sqrt") return Expr::sqrt(arg(0));
  if (op == "arctan") return Expr::arctan(arg(0));
  if (op == "neg") return Expr::neg(arg(0));
  throw ParseError("unknown expression op: " + op);
}

Json poly_to_json(const SparsePoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json exps = Json::array();
    for (auto e : m) exps.push_back(e);
    terms.push_back(Json::array({std::move(exps), c.get_num().get_str(),
                                 c.get_den().get_str()}));
  }
  return Json{{"arity", p.arity()}, {"terms", std::move(terms)}};
}

SparsePoly poly_from_json(const Json& j) {
  const std::size_t arity = j.at("arity").get<std::size_t>();
  SparsePoly p(arity);
  for (const auto& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 3) {
      throw ParseError("polynomial term must be [exponents, num, den]");
    }
    Monomial m;
    for (const auto& e : t[0]) m.push_back(e.get<std::uint32_t>());
    if (m.size() != arity) throw ParseError("exponent vector arity mismatch");
    const Integer num(t[1].get<std::string>());
    const Integer den(t[2].get<std::string>());
    if (den <= 0) throw ParseError("nonpositive denominator");
    Rational c(num, den);
    c.canonicalize();
    p.add_term(m, c);
  }
  return p;
}

Json box_to_json(const Box& b) {
  Json j = Json::array();
  for (const auto& c : b.coords()) {
    j.push_back(Json::array(
        {rational_to_exact_string(c.lo), rational_to_exact_string(c.hi)}));
  }
  return j;
}

Box box_from_json(const Json& j) {
  std::vector<RationalInterval> coords;
  for (const auto& c : j) {
    if (!c.is_array() || c.size() != 2) {
      throw ParseError("box coordinate must be [lo, hi]");
    }
    coords.push_back(
        RationalInterval{rational_from_string(c[0].get<std::string>()),
                         rational_from_string(c[1].get<std::string>())});
  }
  return Box(std::move(coords));
}

}  // namespace rigorkit
