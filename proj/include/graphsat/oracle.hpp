#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphsat/graph.hpp"
#include "graphsat/translate.hpp"

namespace graphsat {
namespace oracle {

struct OracleReport {
  bool verdict = true;
  /// Present when verdict is false: offending rule origin and embedding.
  std::optional<std::pair<std::string, VertexMap>> counterexample;
};

/// Exhaustive check that every embedding of the rule's lhs extends to an
/// embedding of its rhs. Enumerates total maps directly and shares no
/// matching code with the engine. Exponential; intended for tests and small
/// graphs.
OracleReport is_maintained(const GraphRule& rule, const Graph& g);

/// Conjunction of is_maintained over all rules; first failure reported.
OracleReport is_consequence_graph(const Graph& g, const RuleSet& rules);

/// All embeddings of pattern into host, in lexicographic order over the
/// pattern vertices ascending. Used to cross-check the engine's matcher.
std::vector<VertexMap> all_embeddings(const Graph& pattern, const Graph& host);

}  // namespace oracle
}  // namespace graphsat
