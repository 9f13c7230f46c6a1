#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphsat/graph.hpp"
#include "graphsat/translate.hpp"

namespace graphsat {

struct StepRecord {
  std::uint64_t step_index = 0;  // 1-based
  std::string rule_origin;
  std::size_t rule_index = 0;
  VertexMap f;
  std::vector<VertexId> fresh_vertices;  // ascending
  std::vector<Edge> added_edges;         // (label, src, dst) order
};

/// State of one saturation run. The vertex set is always {0,...,n-1} where n
/// is the next fresh vertex id; each applied step extends the graph, so the
/// states of a run form a chain.
struct ChainState {
  Graph graph;
  VertexId next_vertex = 0;
  std::uint64_t steps_applied = 0;
  std::vector<StepRecord> trace;

  /// Wraps a graph whose vertices are exactly {0,...,n-1}; throws otherwise.
  static ChainState from_graph(Graph g);
  static ChainState empty() { return ChainState{}; }
};

/// A rule violation: an embedding f of the rule's lhs with no rhs extension.
/// max_vertex is the largest value of f (0 for the empty embedding); the
/// fairness ordering treats it as the priority N.
struct WorkItem {
  VertexId max_vertex = 0;
  std::size_t rule_index = 0;
  VertexMap f;
};

/// Every violation, ordered by ascending max_vertex, then rule index, then
/// lexicographic f. Recomputed from scratch; holds no state between calls.
std::vector<WorkItem> find_violations(const ChainState& state, const RuleSet& rules);

/// First element of find_violations without materializing the rest.
/// Candidate pruning keeps the scan cheap; the result is identical.
std::optional<WorkItem> select_first_violation(const ChainState& state, const RuleSet& rules);

/// One weak-pushout step for the first minimal violation: the rhs is copied
/// over the match, with the rhs-only vertices mapped injectively onto fresh
/// ids n, n+1, ... in ascending rhs-vertex order. Returns nullopt when every
/// rule is maintained.
std::optional<ChainState> step(const ChainState& state, const RuleSet& rules);

enum class Outcome { Fixpoint, Conflict, BudgetExhausted };

struct SaturationResult {
  Outcome outcome;
  ChainState final_state;
  std::optional<Edge> conflict_witness;  // Conflict only
};

/// Iterates steps until the worklist empties (Fixpoint), a bot edge appears
/// (Conflict, checked eagerly on the edges each step adds), or `budget`
/// steps have been applied (BudgetExhausted). An initial graph that already
/// carries a conflict reports Conflict immediately.
SaturationResult saturate(ChainState initial, const RuleSet& rules, std::uint64_t budget);

/// Stable one-line rendering used by --trace and the golden tests.
std::string format_step_line(const StepRecord& rec);

}  // namespace graphsat
