#include "graphsat/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphsat {

std::pair<Graph, VertexMap> quotient_by_identity(const Graph& g) {
  const Label id = Label::id();
  for (VertexId v : g.vertices())
    if (!g.has_edge(id, v, v))
      throw std::runtime_error("identity relation is not reflexive at vertex " +
                               std::to_string(v));
  for (const auto& [x, y] : g.label_pairs(id)) {
    if (!g.has_edge(id, y, x))
      throw std::runtime_error("identity relation is not symmetric at pair (" +
                               std::to_string(x) + "," + std::to_string(y) + ")");
    for (VertexId z : g.out_neighbors(id, y))
      if (!g.has_edge(id, x, z))
        throw std::runtime_error("identity relation is not transitive at pair (" +
                                 std::to_string(x) + "," + std::to_string(z) + ")");
  }

  // With reflexivity, symmetry and transitivity established, the class of v
  // is exactly its id-out-neighborhood; the canonical element is its minimum.
  VertexMap f;
  for (VertexId v : g.vertices()) f[v] = g.out_neighbors(id, v).front();
  return {relabel(f, g), std::move(f)};
}

StandardModel extract_standard_model(const Graph& g, const std::set<std::string>& constants) {
  if (std::optional<Edge> witness = has_conflict(g))
    throw std::runtime_error("cannot extract a model from a graph with conflict " +
                             witness->to_string());

  auto [quotient, class_of] = quotient_by_identity(g);

  std::map<VertexId, std::string> rep_names;  // class representative -> constant name
  for (const std::string& c : constants) {
    std::set<VertexId> witnesses;
    for (const auto& [x, y] : quotient.label_pairs(Label::constant(c))) {
      if (x != y)
        throw std::runtime_error("constant '" + c + "' relates two distinct classes " +
                                 std::to_string(x) + " and " + std::to_string(y));
      witnesses.insert(x);
    }
    if (witnesses.empty())
      throw std::runtime_error("no witness class for constant '" + c + "'");
    if (witnesses.size() > 1)
      throw std::runtime_error("constant '" + c + "' occupies several classes");
    VertexId rep = *witnesses.begin();
    auto [it, inserted] = rep_names.emplace(rep, c);
    if (!inserted)
      throw std::runtime_error("constants '" + it->second + "' and '" + c +
                               "' share one class");
  }

  StandardModel model;
  model.constants = constants;
  VertexMap to_index;
  VertexId fresh_name = 0;
  VertexId index = 0;
  for (VertexId rep : quotient.vertices()) {
    auto it = rep_names.find(rep);
    if (it != rep_names.end()) {
      model.names.push_back("'" + it->second + "'");
    } else {
      model.names.push_back(std::to_string(fresh_name++));
    }
    to_index[rep] = index++;
  }
  model.graph = relabel(to_index, quotient);
  for (const auto& [v, rep] : class_of) model.class_map[v] = to_index.at(rep);
  return model;
}

bool check_standard(const StandardModel& m) {
  const Graph& g = m.graph;
  if (g.vertices().empty()) return false;

  for (VertexId x : g.vertices()) {
    for (VertexId y : g.vertices()) {
      if (g.has_edge(Label::id(), x, y) != (x == y)) return false;
      if (!g.has_edge(Label::top(), x, y)) return false;
      if (g.has_edge(Label::bot(), x, y)) return false;
    }
  }

  for (const std::string& c : m.constants) {
    auto it = std::find(m.names.begin(), m.names.end(), "'" + c + "'");
    if (it == m.names.end()) return false;
    VertexId cv = static_cast<VertexId>(it - m.names.begin());
    auto pairs = g.label_pairs(Label::constant(c));
    if (pairs.size() != 1 || pairs.front() != std::make_pair(cv, cv)) return false;
  }
  return true;
}

}  // namespace graphsat
