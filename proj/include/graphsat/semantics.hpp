#pragma once

#include <set>
#include <utility>
#include <vector>

#include "graphsat/graph.hpp"
#include "graphsat/term.hpp"

namespace graphsat {

using PairSet = std::set<std::pair<VertexId, VertexId>>;

/// Direct denotation of a term over a graph: label lookup, intersection,
/// converse flip, composition with an existential middle vertex.
PairSet eval_semantics(const Term& e, const Graph& g);

/// Equalities compare both denotations; subsumptions test containment.
bool holds(const Sentence& s, const Graph& g);

/// Eq(a,b) becomes the pairs (a,b) and (b,a); Sub(a,b) stays (a,b).
/// Source order is preserved.
std::vector<std::pair<Term, Term>> normalize_to_subsumptions(const Theory& t);

}  // namespace graphsat
