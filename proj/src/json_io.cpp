#include "graphsat/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace graphsat {

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (VertexId v : g.vertices()) j["vertices"].push_back(v);
  j["edges"] = nlohmann::json::array();
  g.for_each_edge([&](const Edge& e) {
    j["edges"].push_back({e.label.to_string(), e.src, e.dst});
  });
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw std::invalid_argument("graph json must carry 'vertices' and 'edges'");
  Graph g;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_number_unsigned())
      throw std::invalid_argument("graph vertices must be naturals");
    g.add_vertex(v.get<VertexId>());
  }
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3)
      throw std::invalid_argument("graph edge must be [label, src, dst]");
    g.add_edge(Label::from_string(e.at(0).get<std::string>()), e.at(1).get<VertexId>(),
               e.at(2).get<VertexId>());
  }
  return g;
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  nlohmann::json j;
  in >> j;
  return graph_from_json(j);
}

nlohmann::json model_to_json(const StandardModel& m) {
  nlohmann::json j;
  j["vertices"] = m.names;
  j["edges"] = nlohmann::json::array();
  m.graph.for_each_edge([&](const Edge& e) {
    j["edges"].push_back({e.label.to_string(), m.names.at(e.src), m.names.at(e.dst)});
  });
  return j;
}

std::string model_to_dot(const StandardModel& m) {
  std::ostringstream out;
  out << "digraph model {\n";
  for (const std::string& name : m.names)
    out << "  \"" << name << "\" [label=\"" << name << "\"];\n";
  m.graph.for_each_edge([&](const Edge& e) {
    if (e.label.kind() == LabelKind::Id || e.label.kind() == LabelKind::Top) return;
    if (e.label.kind() == LabelKind::Const) return;  // shown as the node itself
    out << "  \"" << m.names.at(e.src) << "\" -> \"" << m.names.at(e.dst) << "\" [label=\""
        << e.label.to_string() << "\"];\n";
  });
  out << "}\n";
  return out.str();
}

nlohmann::json rules_to_json(const RuleSet& rules) {
  nlohmann::json j = nlohmann::json::array();
  for (const GraphRule& r : rules.rules) {
    j.push_back({{"origin", r.origin}, {"lhs", graph_to_json(r.lhs)}, {"rhs", graph_to_json(r.rhs)}});
  }
  return j;
}

}  // namespace graphsat
