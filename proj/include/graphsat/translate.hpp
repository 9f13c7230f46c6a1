#pragma once

#include <set>
#include <string>
#include <vector>

#include "graphsat/graph.hpp"
#include "graphsat/term.hpp"

namespace graphsat {

/// A pair of graphs with lhs a subgraph of rhs; both vertex sets are initial
/// segments {0,...,k-1} of the naturals.
struct GraphRule {
  Graph lhs;
  Graph rhs;
  std::string origin;     // source subsumption or standard-rule name
  std::size_t index = 0;  // position in the owning rule set
};

struct RuleSet {
  std::vector<GraphRule> rules;
  std::set<Label> labels;
  std::set<std::string> constants;
};

/// Term-to-graph translation. Vertices 0 and 1 are the endpoints of the
/// denoted pairs; the vertex set is always {0,...,k-1}.
Graph translate_term(const Term& e);

/// (translation of eL, translation of eL & eR). Throws std::logic_error if
/// the subgraph invariant fails, which would signal a translation bug.
GraphRule translate_subsumption(const Term& el, const Term& er);

/// Top-rule, nonempty-rule, identity-rules (reflexivity, converse,
/// transitivity, one congruence instance per label), then constant-rules
/// (witness, cross-product, below-identity, disjointness per ordered pair of
/// distinct constants), in that fixed order.
/// `labels` must contain id, top, bot and one Const label per constant.
std::vector<GraphRule> standard_rules(const std::set<Label>& labels,
                                      const std::set<std::string>& constants);

/// Standard rules for all labels of the theory (plus the goal label when in
/// use), followed by one rule per normalized subsumption, indices assigned.
/// Rejects theories that mention the reserved goal label when it is not in
/// use.
RuleSet compile_theory(const Theory& t, bool goal_label_in_use);

}  // namespace graphsat
