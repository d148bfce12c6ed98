#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rigorkit/kepler.hpp"
#include "rigorkit/serialize.hpp"
#include "rigorkit/verify.hpp"

namespace rigorkit::kepler {

enum class Relation { kLe, kGe, kLt };
/// kStated: the inequality appears explicitly in the source material.
/// kReconstructed: the domain is our reading of contextual hypotheses;
/// a failure is reported as a warning, not a corpus failure.
enum class Provenance { kStated, kReconstructed };
enum class CorpusMethod { kIntervalBB, kBernstein };

/// A named, runnable, self-contained inequality.
struct NamedInequality {
  std::string id;
  std::string description;
  Provenance provenance = Provenance::kStated;
  ExprPtr expr;
  Box box;
  Relation relation = Relation::kLe;
  std::optional<Rational> bound_value;        // exactly one of the two
  std::optional<ConstantName> bound_constant;
  CorpusMethod method = CorpusMethod::kIntervalBB;
  std::size_t budget = 1u << 16;
  // Strict relations are proven as <= bound - strict_margin.
  Rational strict_margin = Rational(0);
};

struct CorpusOutcome {
  std::string id;
  Provenance provenance = Provenance::kStated;
  CorpusMethod method = CorpusMethod::kIntervalBB;
  Verdict verdict = Verdict::kBudgetExhausted;
  std::size_t boxes_examined = 0;
  std::size_t max_depth = 0;
  double seconds = 0;
  std::string note;

  bool passed() const { return verdict == Verdict::kProven; }
};

/// Expression bodies addressable from corpus files via
/// {"op":"fn","name":...}: kepler.delta, kepler.gamma, kepler.p,
/// kepler.a0..kepler.a3, simplex.dih, simplex.cm.
ExprPtr resolve_builtin_fn(const std::string& name);

/// The built-in corpus: the main surrogate inequality, the delta range
/// bounds, and the triangle-diameter and dihedral families.
const std::vector<NamedInequality>& builtin_corpus();

Json inequality_to_json(const NamedInequality& q);
NamedInequality inequality_from_json(const Json& j);
std::vector<NamedInequality> load_corpus_file(const std::string& path);
std::vector<NamedInequality> load_corpus_dir(const std::string& dir);

CorpusOutcome run_inequality(const NamedInequality& q);

struct RunCorpusOptions {
  std::string filter = "*";  // glob over ids ('*' wildcard)
  std::size_t jobs = 1;
  std::optional<std::size_t> budget_override;
};

/// Runs all matching entries; results ordered by id.
std::vector<CorpusOutcome> run_corpus(const std::vector<NamedInequality>& all,
                                      const RunCorpusOptions& opts = {});

bool id_matches(const std::string& id, const std::string& glob);
const char* relation_to_string(Relation r);
const char* provenance_to_string(Provenance p);
const char* corpus_method_to_string(CorpusMethod m);

}  // namespace rigorkit::kepler
