#pragma once

#include <optional>
#include <string>

#include "rigorkit/expr.hpp"

namespace rigorkit {

enum class Verdict { kProven, kCounterexampleBox, kBudgetExhausted };

struct VerifyReport {
  Verdict verdict = Verdict::kBudgetExhausted;
  std::size_t boxes_examined = 0;
  std::size_t max_depth = 0;
  std::optional<Box> witness;

  bool proven() const { return verdict == Verdict::kProven; }
};

std::string verdict_to_string(Verdict v);

enum class VerifyMethod { kAuto, kIntervalBB, kBernstein };

struct VerifyOptions {
  std::size_t budget = 1u << 16;  // hard cap on examined boxes
  unsigned precision = kDefaultPrecisionBits;
  // kAuto routes exact polynomial inputs through Bernstein coefficient
  // bounds and everything else through interval branch-and-bound.
  VerifyMethod method = VerifyMethod::kAuto;
};

/// Certifies e(x) <= bound for all x in b by bisection on the widest
/// coordinate. Proven is unconditionally sound. A counterexample is
/// only reported when a point enclosure at a box midpoint rigorously
/// exceeds the bound. Subboxes whose evaluation hits an uncertain
/// domain condition are subdivided further; a certain violation on the
/// initial box propagates as DomainError.
VerifyReport verify_upper(const Expr& e, const Box& b, const Rational& bound,
                          const VerifyOptions& opts = {});

/// Dual: certifies e(x) >= bound.
VerifyReport verify_lower(const Expr& e, const Box& b, const Rational& bound,
                          const VerifyOptions& opts = {});

}  // namespace rigorkit
