#include "rigorkit/verify.hpp"

#include <deque>

#include "rigorkit/bernstein.hpp"
#include "rigorkit/sparse_poly.hpp"

namespace rigorkit {

std::string verdict_to_string(Verdict v) {
  switch (v) {
    case Verdict::kProven: return "Proven";
    case Verdict::kCounterexampleBox: return "CounterexampleBox";
    case Verdict::kBudgetExhausted: return "BudgetExhausted";
  }
  return "?";
}

namespace {

struct WorkItem {
  Box box;
  std::size_t depth;
};

// Fixes zero-width coordinates of `box` to their exact values inside p,
// returning the reduced polynomial and the positive-width sub-box.
std::pair<SparsePoly, Box> collapse_point_axes(const SparsePoly& p,
                                               const Box& box) {
  std::vector<RationalInterval> coords;
  std::size_t live = 0;
  for (std::size_t i = 0; i < box.arity(); ++i) {
    if (box[i].width() != 0) ++live;
  }
  if (live == box.arity()) return {p, box};
  std::vector<SparsePoly> args;
  args.reserve(box.arity());
  std::size_t next = 0;
  for (std::size_t i = 0; i < box.arity(); ++i) {
    if (box[i].width() == 0) {
      args.push_back(SparsePoly::constant(live, box[i].lo));
    } else {
      args.push_back(SparsePoly::variable(live, next++));
      coords.push_back(box[i]);
    }
  }
  return {p.compose(args), Box(std::move(coords))};
}

// Certification of p <=/>= bound over `box` through Bernstein
// coefficient bounds with de Casteljau subdivision. Corner coefficients
// are exact values of p, so violations there are rigorous witnesses.
VerifyReport bernstein_verify(const SparsePoly& poly, const Box& start_box,
                              const Rational& bound,
                              const VerifyOptions& opts, bool upper) {
  VerifyReport report;
  auto [p, box] = collapse_point_axes(poly, start_box);
  if (box.arity() == 0 || p.monomial_count() == 0 ||
      p.total_degree() == 0) {
    // Constant polynomial: compare exactly.
    const Rational v = p.eval_exact(std::vector<Rational>(box.arity(),
                                                          Rational(0)));
    report.boxes_examined = 1;
    const bool ok = upper ? (v <= bound) : (v >= bound);
    report.verdict = ok ? Verdict::kProven : Verdict::kCounterexampleBox;
    if (!ok) report.witness = start_box.midpoint_box();
    return report;
  }

  struct Node {
    BernsteinTensor tensor;
    Box box;
    std::size_t depth;
  };
  std::deque<Node> queue;
  queue.push_back({to_bernstein_on_box(p, box), box, 0});

  while (!queue.empty()) {
    if (report.boxes_examined >= opts.budget) {
      report.verdict = Verdict::kBudgetExhausted;
      return report;
    }
    Node node = std::move(queue.front());
    queue.pop_front();
    ++report.boxes_examined;
    report.max_depth = std::max(report.max_depth, node.depth);

    const Rational reach =
        upper ? node.tensor.bound_max() : node.tensor.bound_min();
    if (upper ? (reach <= bound) : (reach >= bound)) continue;

    // Corner coefficients are exact values of p at box corners.
    const auto& degs = node.tensor.degrees();
    std::vector<std::uint32_t> idx(degs.size(), 0);
    for (std::size_t mask = 0; mask < (std::size_t{1} << degs.size());
         ++mask) {
      std::vector<RationalInterval> pt(node.box.coords());
      for (std::size_t i = 0; i < degs.size(); ++i) {
        const bool high = (mask >> i) & 1;
        idx[i] = high ? degs[i] : 0;
        const Rational c = high ? node.box[i].hi : node.box[i].lo;
        pt[i] = RationalInterval{c, c};
      }
      const Rational v = node.tensor.coefficient(idx);
      if (upper ? (v > bound) : (v < bound)) {
        report.verdict = Verdict::kCounterexampleBox;
        report.witness = Box(std::move(pt));
        return report;
      }
    }

    const std::size_t axis = node.tensor.widest_spread_axis();
    auto halves = node.tensor.subdivide(axis);
    auto boxes = node.box.split(axis);
    queue.push_back(
        {std::move(halves.first), std::move(boxes.first), node.depth + 1});
    queue.push_back(
        {std::move(halves.second), std::move(boxes.second), node.depth + 1});
  }
  report.verdict = Verdict::kProven;
  return report;
}

// Unified driver; `upper` selects e <= bound, otherwise e >= bound.
VerifyReport run(const Expr& e, const Box& b, const Rational& bound,
                 const VerifyOptions& opts, bool upper) {
  VerifyReport report;
  std::deque<WorkItem> queue;
  queue.push_back({b, 0});
  const EvalOptions eval_opts{opts.precision, true};

  while (!queue.empty()) {
    if (report.boxes_examined >= opts.budget) {
      report.verdict = Verdict::kBudgetExhausted;
      return report;
    }
    WorkItem item = std::move(queue.front());
    queue.pop_front();
    ++report.boxes_examined;
    report.max_depth = std::max(report.max_depth, item.depth);

    bool settled = false;
    try {
      const Interval v = eval_interval(e, item.box, eval_opts);
      if (upper ? (v.hi_q() <= bound) : (v.lo_q() >= bound)) {
        settled = true;
      }
    } catch (const DomainError& err) {
      // A violation certain on the whole subbox cannot be refined away.
      if (err.certain()) throw;
    }

    if (settled) continue;

    // Check the midpoint rigorously before splitting further. A witness
    // box must violate the bound at its midpoint via a point enclosure.
    try {
      const Box mid = item.box.midpoint_box();
      const Interval vm = eval_interval(e, mid, eval_opts);
      if (upper ? (vm.lo_q() > bound) : (vm.hi_q() < bound)) {
        report.verdict = Verdict::kCounterexampleBox;
        report.witness = item.box;
        return report;
      }
    } catch (const DomainError&) {
      // Midpoint outside the domain: keep subdividing.
    }
    if (item.box.max_width() == 0) {
      // Point box that can neither be proven nor refuted at this
      // precision: treat as exhaustion of refinement.
      report.verdict = Verdict::kBudgetExhausted;
      return report;
    }
    auto [lo_half, hi_half] = item.box.split(item.box.widest_axis());
    queue.push_back({std::move(lo_half), item.depth + 1});
    queue.push_back({std::move(hi_half), item.depth + 1});
  }
  report.verdict = Verdict::kProven;
  return report;
}

}  // namespace

namespace {

VerifyReport dispatch(const Expr& e, const Box& b, const Rational& bound,
                      const VerifyOptions& opts, bool upper) {
  if (opts.budget < 1) {
    throw std::invalid_argument("verification budget must be >= 1");
  }
  // Polynomial inputs go through Bernstein coefficient bounds, which
  // are immune to the dependency problem; everything else uses interval
  // branch-and-bound.
  if (opts.method != VerifyMethod::kIntervalBB && e.is_rational_expr()) {
    if (auto poly = expr_to_poly(e, b.arity())) {
      try {
        return bernstein_verify(*poly, b, bound, opts, upper);
      } catch (const std::length_error&) {
        // Tensor too large; fall back to interval subdivision.
      }
    }
  }
  if (opts.method == VerifyMethod::kBernstein) {
    throw std::invalid_argument(
        "Bernstein verification requires an exact polynomial expression");
  }
  return run(e, b, bound, opts, upper);
}

}  // namespace

VerifyReport verify_upper(const Expr& e, const Box& b, const Rational& bound,
                          const VerifyOptions& opts) {
  return dispatch(e, b, bound, opts, true);
}

VerifyReport verify_lower(const Expr& e, const Box& b, const Rational& bound,
                          const VerifyOptions& opts) {
  return dispatch(e, b, bound, opts, false);
}

}  // namespace rigorkit
