#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "graphsat/graph.hpp"

namespace graphsat {

/// A graph with named vertices in which id is the diagonal, top is the full
/// relation, bot is empty and each constant denotes its own single vertex.
/// Vertices of `graph` are 0..k-1; `names[i]` is the display name of vertex
/// i ("'Liz'" for constants, decimal digits for fresh vertices).
struct StandardModel {
  Graph graph;
  std::vector<std::string> names;
  std::set<std::string> constants;
  /// Original saturation vertex -> model vertex index.
  std::map<VertexId, VertexId> class_map;

  std::string name_of_original(VertexId v) const { return names.at(class_map.at(v)); }
};

/// Collapses the id-equivalence classes of g onto their minimal vertex.
/// Returns the image graph and the idempotent class map. Requires id to be
/// an equivalence relation on g's vertices; throws std::runtime_error naming
/// the failing vertex or pair otherwise.
std::pair<Graph, VertexMap> quotient_by_identity(const Graph& g);

/// Quotients g, names each constant's witness class after the constant and
/// the remaining classes 0, 1, ... in ascending class-representative order.
/// g must be conflict free and maintain the standard rules; violations
/// surface as std::runtime_error (conflict edge, missing constant witness,
/// one constant on several classes, two constants sharing a class).
StandardModel extract_standard_model(const Graph& g, const std::set<std::string>& constants);

/// Direct enumeration of the four standardness clauses plus nonemptiness.
bool check_standard(const StandardModel& m);

}  // namespace graphsat
