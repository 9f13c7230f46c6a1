#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphsat/model.hpp"
#include "graphsat/saturate.hpp"
#include "graphsat/term.hpp"
#include "graphsat/translate.hpp"

namespace graphsat {

inline constexpr std::uint64_t kDefaultBudget = 100000;

struct ConsistencyVerdict {
  enum class Kind { Consistent, Inconsistent, Unknown };
  Kind kind;
  std::optional<StandardModel> model;  // Consistent only
  std::optional<Edge> conflict;        // Inconsistent only
  ChainState final_state;
};

/// One direction of an entailment run, kept for tracing.
struct EntailmentRun {
  std::string direction;  // "e1 <= e2"
  ChainState state;
};

struct EntailmentVerdict {
  enum class Kind { Entailed, NotEntailed, Unknown };
  Kind kind;
  std::optional<StandardModel> countermodel;                     // NotEntailed only
  std::optional<std::pair<std::string, std::string>> witness;    // model vertex names
  std::vector<EntailmentRun> runs;
};

/// Compiles the theory and saturates from the empty graph. A conflict means
/// no model exists; a fixpoint yields a standard model; running out of
/// budget is reported as Unknown.
ConsistencyVerdict check_consistency(const Theory& t, std::uint64_t budget = kDefaultBudget);

/// For a goal e1 <= e2: saturates the theory extended with
/// {$goal <= e1, e2 & $goal <= bot} from a single $goal edge. A conflict
/// proves entailment; a fixpoint yields a countermodel (goal edges stripped)
/// together with the witness pair. An equality goal runs both directions on
/// half the budget each.
EntailmentVerdict check_entailment(const Theory& t, const Sentence& goal,
                                   std::uint64_t budget = kDefaultBudget);

/// Cross-check: when both check_consistency(t) and
/// check_entailment(t, top <= bot) decide within the budget, consistency
/// must coincide with non-entailment. Returns nullopt when undecided,
/// otherwise whether the two verdicts agree.
std::optional<bool> self_check_lemma2(const Theory& t, std::uint64_t budget = kDefaultBudget);

}  // namespace graphsat
