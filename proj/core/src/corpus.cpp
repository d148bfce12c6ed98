#include "rigorkit/corpus.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <thread>

namespace rigorkit::kepler {

const char* relation_to_string(Relation r) {
  switch (r) {
    case Relation::kLe: return "le";
    case Relation::kGe: return "ge";
    case Relation::kLt: return "lt";
  }
  return "?";
}

const char* provenance_to_string(Provenance p) {
  return p == Provenance::kStated ? "stated" : "reconstructed";
}

const char* corpus_method_to_string(CorpusMethod m) {
  return m == CorpusMethod::kBernstein ? "bernstein" : "interval_bb";
}

ExprPtr resolve_builtin_fn(const std::string& name) {
  if (name == "kepler.delta") return delta_poly().to_expr();
  if (name == "kepler.delta_det") return delta_det_expr();
  if (name == "kepler.gamma") return gamma_expr();
  if (name == "kepler.p") return build_p().to_expr();
  if (name == "kepler.a0") return a_poly(0).to_expr();
  if (name == "kepler.a1") return a_poly(1).to_expr();
  if (name == "kepler.a2") return a_poly(2).to_expr();
  if (name == "kepler.a3") return a_poly(3).to_expr();
  if (name == "simplex.dih") return dihedral_expr();
  if (name == "simplex.cm") return cayley_menger_expr();
  return nullptr;
}

namespace {

Rational q(long num, long den = 1) { return Rational(num, den); }

// --- Triangle-diameter vertex functions --------------------------------
//
// Fixed triangle v = (0,0), w = (2,0), |u - v| = 251/100, |u - w| = t.
// The admissible region (points of the hull at distance >= 6/5 from all
// three vertices) has a polygonal-arc boundary whose vertices are
// algebraic in t; its diameter is the largest pairwise distance.

struct Point {
  ExprPtr x, y;
};

ExprPtr rat(const Rational& v) { return Expr::rational(v); }

ExprPtr tvar() { return Expr::variable(0); }

Point scale_point(const Rational& c, const Point& p) {
  return {Expr::mul(rat(c), p.x), Expr::mul(rat(c), p.y)};
}

ExprPtr dist2(const Point& a, const Point& b) {
  return Expr::add(Expr::pow(Expr::sub(a.x, b.x), 2),
                   Expr::pow(Expr::sub(a.y, b.y), 2));
}

struct DiamPoints {
  Point u, q1, q2, pvw, puw, r1, r2;
};

DiamPoints diam_points() {
  DiamPoints d;
  // u = ((103001/10000 - t^2)/4, sqrt(63001/10000 - ux^2))
  const ExprPtr ux = Expr::mul(
      rat(q(1, 4)), Expr::sub(rat(q(103001, 10000)), Expr::pow(tvar(), 2)));
  const ExprPtr uy =
      Expr::sqrt(Expr::sub(rat(q(63001, 10000)), Expr::pow(ux, 2)));
  d.u = {ux, uy};
  d.q1 = scale_point(q(120, 251), d.u);
  d.q2 = scale_point(q(131, 251), d.u);
  d.pvw = {rat(q(1)), Expr::sqrt(rat(q(11, 25)))};
  // Circle-circle vertex between u and w (present for t <= 12/5):
  // midpoint of u,w minus the half-chord along the inward normal.
  const ExprPtr h =
      Expr::sqrt(Expr::sub(rat(q(36, 25)),
                           Expr::mul(rat(q(1, 4)), Expr::pow(tvar(), 2))));
  const ExprPtr two_minus_ux = Expr::sub(rat(q(2)), ux);
  d.puw = {Expr::sub(Expr::mul(rat(q(1, 2)), Expr::add(ux, rat(q(2)))),
                     Expr::div(Expr::mul(h, uy), tvar())),
           Expr::sub(Expr::mul(rat(q(1, 2)), uy),
                     Expr::div(Expr::mul(h, two_minus_ux), tvar()))};
  // Edge vertices on u-w (present for t >= 12/5): 6/5 from u resp. w.
  const ExprPtr f = Expr::div(rat(q(6, 5)), tvar());
  d.r1 = {Expr::add(ux, Expr::mul(f, two_minus_ux)),
          Expr::sub(uy, Expr::mul(f, uy))};
  d.r2 = {Expr::add(rat(q(2)), Expr::mul(f, Expr::sub(ux, rat(q(2))))),
          Expr::mul(f, uy)};
  return d;
}

NamedInequality diam_entry(const std::string& suffix, const Point& a,
                           const Point& b, bool low_case) {
  NamedInequality e;
  e.id = "diam-1044-" + std::string(low_case ? "lo-" : "hi-") + suffix;
  e.description =
      "squared distance of boundary vertices " + suffix +
      " of the admissible region in the 2/2.51/t triangle stays below "
      "1.044^2 (" +
      (low_case ? std::string("t in [2, 2.4]") : std::string("t in [2.4, 2.51]")) +
      ")";
  e.provenance = Provenance::kStated;
  e.expr = dist2(a, b);
  e.box = Box(std::vector<RationalInterval>{
      low_case ? RationalInterval{q(2), q(12, 5)}
               : RationalInterval{q(12, 5), q(251, 100)}});
  e.relation = Relation::kLt;
  e.bound_value = q(1044, 1000) * q(1044, 1000);
  e.method = CorpusMethod::kIntervalBB;
  e.budget = 1u << 16;
  e.strict_margin = q(1, 10000);
  return e;
}

// Dihedral bounds are certified through their squared reformulation:
// with x_i = y_i^2, dih = pi/2 + arctan(-delta4 / sqrt(4 x1 delta)), so
//   4 c^2 x1 delta - delta4^2 >= 0        gives dih in
//     [pi/2 - arctan(c), pi/2 + arctan(c)]  (lower bounds, c <= cot b),
//   delta4 >= 0 and delta4^2 - 4 c^2 x1 delta >= 0   gives
//     dih <= pi/2 - arctan(c)               (upper bounds, c >= cot B).
// dihedral_band() turns a proven certificate back into rational dihedral
// bounds rigorously.
SparsePoly dih_cert_poly(const Rational& c, bool lower) {
  const SparsePoly x1 =
      SparsePoly::variable(6, 0) * SparsePoly::variable(6, 0);
  const SparsePoly lhs = (x1 * delta_poly()).scaled(4 * c * c);
  const SparsePoly d4sq = delta4_poly() * delta4_poly();
  return lower ? lhs - d4sq : d4sq - lhs;
}

NamedInequality dih_entry(const std::string& id, const std::string& desc,
                          const Rational& c, bool lower,
                          std::vector<RationalInterval> box) {
  NamedInequality e;
  e.id = id;
  e.description = desc;
  e.provenance = Provenance::kReconstructed;
  e.expr = dih_cert_poly(c, lower).to_expr();
  e.box = Box(std::move(box));
  e.relation = Relation::kGe;
  e.bound_value = Rational(0);
  e.method = CorpusMethod::kBernstein;
  e.budget = 1u << 14;
  return e;
}

NamedInequality d4_pos_entry(const std::string& id, const std::string& desc,
                             std::vector<RationalInterval> box) {
  NamedInequality e;
  e.id = id;
  e.description = desc;
  e.provenance = Provenance::kReconstructed;
  e.expr = delta4_poly().to_expr();
  e.box = Box(std::move(box));
  e.relation = Relation::kGe;
  e.bound_value = Rational(0);
  e.method = CorpusMethod::kBernstein;
  e.budget = 1u << 14;
  return e;
}

RationalInterval ri(const Rational& lo, const Rational& hi) {
  return RationalInterval{lo, hi};
}

std::vector<NamedInequality> make_builtin() {
  std::vector<NamedInequality> all;

  {
    NamedInequality e;
    e.id = "586468779";
    e.description =
        "main scoring inequality: p = sqrt2 (g - pt) is nonpositive on "
        "[2, 2.51]^6, certifying gamma <= pt through the surrogate chain";
    e.provenance = Provenance::kStated;
    e.expr = resolve_builtin_fn("kepler.p");
    e.box = main_box();
    e.relation = Relation::kLe;
    e.bound_value = q(0);
    e.method = CorpusMethod::kBernstein;
    e.budget = 64;
    all.push_back(std::move(e));
  }
  {
    NamedInequality e;
    e.id = "delta-range-upper";
    e.description = "delta <= 501 on [2, 2.51]^6";
    e.provenance = Provenance::kStated;
    e.expr = resolve_builtin_fn("kepler.delta");
    e.box = main_box();
    e.relation = Relation::kLe;
    e.bound_value = q(501);
    e.method = CorpusMethod::kBernstein;
    e.budget = 1u << 14;
    all.push_back(std::move(e));
  }
  {
    NamedInequality e;
    e.id = "delta-range-lower";
    e.description = "delta >= 128 on [2, 2.51]^6";
    e.provenance = Provenance::kStated;
    e.expr = resolve_builtin_fn("kepler.delta");
    e.box = main_box();
    e.relation = Relation::kGe;
    e.bound_value = q(128);
    e.method = CorpusMethod::kBernstein;
    e.budget = 1u << 14;
    all.push_back(std::move(e));
  }
  {
    NamedInequality e;
    e.id = "a0-range-lower";
    e.description =
        "a0 >= 13 on [2, 2.51]^6 (positivity backing the reciprocal "
        "approximation domain)";
    e.provenance = Provenance::kReconstructed;
    e.expr = resolve_builtin_fn("kepler.a0");
    e.box = main_box();
    e.relation = Relation::kGe;
    e.bound_value = q(13);
    e.method = CorpusMethod::kBernstein;
    e.budget = 1u << 14;
    all.push_back(std::move(e));
  }

  // Triangle-diameter family (both structural cases of the boundary).
  const DiamPoints d = diam_points();
  all.push_back(diam_entry("q1q2", d.q1, d.q2, true));
  all.push_back(diam_entry("q1pvw", d.q1, d.pvw, true));
  all.push_back(diam_entry("q1puw", d.q1, d.puw, true));
  all.push_back(diam_entry("q2pvw", d.q2, d.pvw, true));
  all.push_back(diam_entry("q2puw", d.q2, d.puw, true));
  all.push_back(diam_entry("pvwpuw", d.pvw, d.puw, true));
  all.push_back(diam_entry("q1q2", d.q1, d.q2, false));
  all.push_back(diam_entry("q1r1", d.q1, d.r1, false));
  all.push_back(diam_entry("q1r2", d.q1, d.r2, false));
  all.push_back(diam_entry("q1pvw", d.q1, d.pvw, false));
  all.push_back(diam_entry("q2r1", d.q2, d.r1, false));
  all.push_back(diam_entry("q2r2", d.q2, d.r2, false));
  all.push_back(diam_entry("q2pvw", d.q2, d.pvw, false));
  all.push_back(diam_entry("r1r2", d.r1, d.r2, false));
  all.push_back(diam_entry("r1pvw", d.r1, d.pvw, false));
  all.push_back(diam_entry("r2pvw", d.r2, d.pvw, false));

  // Dihedral family, via the squared certificates (see dih_cert_poly).
  // Domains are reconstructed readings of the crossing configurations,
  // narrowed so the whole box is rigorously nondegenerate; see each
  // description. The chosen rational slopes c translate back into
  // dihedral bounds through dihedral_band():
  //   59/50  -> dih >= 0.70316...   (claim: >= 0.7)
  //   9/5    -> dih >= 0.50709...   (claim: >= 0.5)
  //   93/100 -> dih >= 0.82153...   (claim: >= 0.8)
  //   99     -> dih >= 0.01010...   (claim: >  0)
  //   7/40   -> dih <= 1.39755...   (claim: <  1.4)
  //   281/1000 -> dih <= 1.29720... (claim: <  1.3)
  const Rational lo2 = q(2), hi251 = q(251, 100), hi223 = q(223, 100),
                 hi32 = q(16, 5);
  const std::vector<RationalInterval> box_07 = {
      ri(lo2, hi251), ri(lo2, hi251), ri(lo2, hi251),
      ri(lo2, hi251), ri(lo2, hi251), ri(lo2, hi251)};
  const std::vector<RationalInterval> box_14 = {
      ri(lo2, hi251), ri(lo2, hi251), ri(lo2, hi251),
      ri(lo2, lo2),   ri(lo2, hi251), ri(lo2, hi251)};
  const std::vector<RationalInterval> box_13 = {
      ri(lo2, hi223), ri(lo2, hi251), ri(lo2, hi251),
      ri(lo2, lo2),   ri(lo2, hi251), ri(lo2, hi251)};
  all.push_back(dih_entry(
      "2799256461",
      "dihedral along {0,u2} between consecutive crossing edges is at "
      "least 0.7; certified via 4 c^2 x1 delta >= delta4^2 with c = 59/50 "
      "(dih >= pi/2 - arctan c > 0.7031); all norms and separations read "
      "into [2, 2.51]",
      q(59, 50), true, box_07));
  all.push_back(dih_entry(
      "5470795818",
      "dihedral spanned by the pivoted pair v, w with |v - w| = 2 stays "
      "below 1.4; certified via delta4^2 >= 4 c^2 x1 delta with c = 7/40 "
      "(dih <= pi/2 - arctan c < 1.3976) together with 5470795818-d4pos",
      q(7, 40), false, box_14));
  all.push_back(d4_pos_entry(
      "5470795818-d4pos",
      "delta4 >= 0 on the 5470795818 domain (upper-bound companion)",
      box_14));
  all.push_back(dih_entry(
      "7431506800",
      "dihedral d(1,4) spanned by v, w over the stretched double-crossing "
      "configuration (|u2| <= 2.23) stays below 1.3; certified via "
      "delta4^2 >= 4 c^2 x1 delta with c = 281/1000 "
      "(dih <= pi/2 - arctan c < 1.2973) together with 7431506800-d4pos",
      q(281, 1000), false, box_13));
  all.push_back(d4_pos_entry(
      "7431506800-d4pos",
      "delta4 >= 0 on the 7431506800 domain (upper-bound companion)",
      box_13));
  all.push_back(dih_entry(
      "5568465464",
      "dihedral d(1,2) between v and the stretched crossing edge "
      "(|u2 - u1'| = 3.2) is at least 0.5; separation read into "
      "[2.51, 3.2]; certified with c = 9/5 (dih >= 0.5070)",
      q(9, 5), true,
      {ri(lo2, hi223), ri(lo2, hi223), ri(lo2, hi223), ri(q(251, 100), hi32),
       ri(hi32, hi32), ri(lo2, hi223)}));
  all.push_back(dih_entry(
      "4741571261",
      "dihedral d(2,3) between the two stretched crossing edges "
      "(both at 3.2 from u2) is at least 0.8; certified with c = 93/100 "
      "(dih >= 0.8215)",
      q(93, 100), true,
      {ri(lo2, hi223), ri(lo2, hi223), ri(lo2, hi251), ri(lo2, hi32),
       ri(hi32, hi32), ri(hi32, hi32)}));
  all.push_back(dih_entry(
      "6915275259",
      "dihedral d(3,4) between the stretched crossing edge and w is "
      "positive; certified with c = 99 (dih >= 0.0101) on a "
      "nondegenerate reading",
      q(99), true,
      {ri(lo2, hi223), ri(lo2, hi251), ri(lo2, hi251), ri(hi223, hi32),
       ri(hi223, hi251), ri(hi32, hi32)}));

  return all;
}

}  // namespace

const std::vector<NamedInequality>& builtin_corpus() {
  static const std::vector<NamedInequality> all = make_builtin();
  return all;
}

Json inequality_to_json(const NamedInequality& e) {
  Json j;
  j["schema"] = "rigorkit-inequality/1";
  j["id"] = e.id;
  j["description"] = e.description;
  j["provenance"] = provenance_to_string(e.provenance);
  j["expr"] = expr_to_json(*e.expr);
  j["box"] = box_to_json(e.box);
  j["relation"] = relation_to_string(e.relation);
  if (e.bound_value) {
    j["bound"] = rational_to_exact_string(*e.bound_value);
  } else if (e.bound_constant) {
    j["bound"] = Json{{"name", constant_name_string(*e.bound_constant)}};
  }
  j["method"] = corpus_method_to_string(e.method);
  j["budget"] = e.budget;
  if (e.strict_margin != 0) {
    j["strict_margin"] = rational_to_exact_string(e.strict_margin);
  }
  return j;
}

NamedInequality inequality_from_json(const Json& j) {
  if (j.value("schema", "") != "rigorkit-inequality/1") {
    throw ParseError("unknown or missing corpus schema tag");
  }
  NamedInequality e;
  e.id = j.at("id").get<std::string>();
  e.description = j.value("description", "");
  const std::string prov = j.value("provenance", "stated");
  if (prov == "stated") e.provenance = Provenance::kStated;
  else if (prov == "reconstructed") e.provenance = Provenance::kReconstructed;
  else throw ParseError("unknown provenance: " + prov);
  e.expr = expr_from_json(j.at("expr"), resolve_builtin_fn);
  e.box = box_from_json(j.at("box"));
  const std::string rel = j.at("relation").get<std::string>();
  if (rel == "le") e.relation = Relation::kLe;
  else if (rel == "ge") e.relation = Relation::kGe;
  else if (rel == "lt") e.relation = Relation::kLt;
  else throw ParseError("unknown relation: " + rel);
  const auto& bound = j.at("bound");
  if (bound.is_object()) {
    ConstantName name;
    if (!parse_constant_name(bound.at("name").get<std::string>(), &name)) {
      throw ParseError("unknown bound constant");
    }
    e.bound_constant = name;
  } else {
    e.bound_value = rational_from_string(bound.get<std::string>());
  }
  const std::string method = j.value("method", "interval_bb");
  if (method == "bernstein") e.method = CorpusMethod::kBernstein;
  else if (method == "interval_bb") e.method = CorpusMethod::kIntervalBB;
  else throw ParseError("unknown method: " + method);
  e.budget = j.value("budget", std::size_t{1} << 16);
  if (j.contains("strict_margin")) {
    e.strict_margin =
        rational_from_string(j.at("strict_margin").get<std::string>());
  }
  if (e.expr->min_arity() > e.box.arity()) {
    throw ParseError("inequality box does not cover expression variables");
  }
  return e;
}

std::vector<NamedInequality> load_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open corpus file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& ex) {
    throw ParseError(path + ": " + ex.what());
  }
  std::vector<NamedInequality> out;
  try {
    if (j.is_array()) {
      for (const auto& item : j) out.push_back(inequality_from_json(item));
    } else {
      out.push_back(inequality_from_json(j));
    }
  } catch (const Json::exception& ex) {
    throw ParseError(path + ": " + ex.what());
  }
  return out;
}

std::vector<NamedInequality> load_corpus_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path().string());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<NamedInequality> out;
  for (const auto& f : files) {
    auto batch = load_corpus_file(f);
    out.insert(out.end(), std::make_move_iterator(batch.begin()),
               std::make_move_iterator(batch.end()));
  }
  return out;
}

bool id_matches(const std::string& id, const std::string& glob) {
  // Greedy wildcard match, '*' only.
  std::size_t i = 0, g = 0, star = std::string::npos, mark = 0;
  while (i < id.size()) {
    if (g < glob.size() && (glob[g] == id[i])) {
      ++i;
      ++g;
    } else if (g < glob.size() && glob[g] == '*') {
      star = g++;
      mark = i;
    } else if (star != std::string::npos) {
      g = star + 1;
      i = ++mark;
    } else {
      return false;
    }
  }
  while (g < glob.size() && glob[g] == '*') ++g;
  return g == glob.size();
}

CorpusOutcome run_inequality(const NamedInequality& e) {
  CorpusOutcome out;
  out.id = e.id;
  out.provenance = e.provenance;
  out.method = e.method;
  const auto start = std::chrono::steady_clock::now();

  Rational target;
  if (e.bound_constant) {
    const Interval c = enclose_constant(*e.bound_constant, 96);
    target = (e.relation == Relation::kGe) ? c.hi_q() : c.lo_q();
  } else if (e.bound_value) {
    target = *e.bound_value;
  } else {
    out.note = "entry has no bound";
    return out;
  }
  if (e.relation == Relation::kLt) {
    if (e.strict_margin <= 0) {
      out.note = "strict relation requires a positive strict_margin";
      return out;
    }
    target -= e.strict_margin;
  }

  VerifyOptions opts;
  opts.budget = e.budget;
  opts.method = (e.method == CorpusMethod::kIntervalBB)
                    ? VerifyMethod::kIntervalBB
                    : VerifyMethod::kAuto;
  VerifyReport r;
  try {
    r = (e.relation == Relation::kGe)
            ? verify_lower(*e.expr, e.box, target, opts)
            : verify_upper(*e.expr, e.box, target, opts);
  } catch (const std::exception& ex) {
    out.note = ex.what();
    out.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return out;
  }
  out.verdict = r.verdict;
  out.boxes_examined = r.boxes_examined;
  out.max_depth = r.max_depth;
  if (r.verdict != Verdict::kProven &&
      e.provenance == Provenance::kReconstructed) {
    out.note = "warning: reconstructed entry not proven";
  }
  if (r.verdict == Verdict::kCounterexampleBox && r.witness) {
    out.note += (out.note.empty() ? "" : "; ");
    out.note += "counterexample box " + r.witness->to_string();
  }
  out.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return out;
}

std::vector<CorpusOutcome> run_corpus(const std::vector<NamedInequality>& all,
                                      const RunCorpusOptions& opts) {
  std::vector<const NamedInequality*> selected;
  for (const auto& e : all) {
    if (id_matches(e.id, opts.filter)) selected.push_back(&e);
  }
  std::sort(selected.begin(), selected.end(),
            [](const auto* a, const auto* b) { return a->id < b->id; });

  std::vector<CorpusOutcome> results(selected.size());
  const std::size_t jobs =
      std::max<std::size_t>(1, std::min(opts.jobs, selected.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= selected.size()) return;
      NamedInequality entry = *selected[i];
      if (opts.budget_override) entry.budget = *opts.budget_override;
      results[i] = run_inequality(entry);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return results;
}

}  // namespace rigorkit::kepler
