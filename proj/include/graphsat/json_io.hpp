#pragma once

#include <string>

#include <json.hpp>

#include "graphsat/graph.hpp"
#include "graphsat/model.hpp"
#include "graphsat/translate.hpp"

namespace graphsat {

/// Graph text format: {"vertices": [naturals], "edges": [[label, src, dst]]}
/// with labels rendered as "id", "top", "bot", "'Name'" or bare identifiers.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);
Graph load_graph_file(const std::string& path);

/// Model format: vertex names instead of numbers, e.g.
/// {"vertices": ["'Liz'", "'Jon'", "0"], "edges": [["i", "'Liz'", "0"]]}.
nlohmann::json model_to_json(const StandardModel& m);

/// DOT rendering: all vertices as labeled nodes; id and top edges and the
/// constants' self-loops are omitted.
std::string model_to_dot(const StandardModel& m);

nlohmann::json rules_to_json(const RuleSet& rules);

}  // namespace graphsat
