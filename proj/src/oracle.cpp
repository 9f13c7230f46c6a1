#include "graphsat/oracle.hpp"

#include <algorithm>
#include <set>

namespace graphsat {
namespace oracle {

namespace {

// Self-contained view of a host graph: sorted vertex list plus an ordered
// edge set. Deliberately rebuilt from the public accessors so the oracle
// stays independent of the engine's internal storage and matcher.
struct HostView {
  std::vector<VertexId> vertices;
  std::set<Edge> edges;

  explicit HostView(const Graph& g)
      : vertices(g.vertices().begin(), g.vertices().end()) {
    for (const Edge& e : g.edges()) edges.insert(e);
  }

  bool has(const Label& l, VertexId s, VertexId d) const {
    return edges.count(Edge{l, s, d}) != 0;
  }
};

// Enumerates total maps over `order` (candidate values tried ascending),
// rejecting a partial map as soon as some pattern edge with both endpoints
// assigned is absent from the host. `fixed` pre-assigns vertices.
// Returns false when `visit` stopped the enumeration.
bool for_each_total_map(const std::vector<VertexId>& order, const std::vector<Edge>& pattern_edges,
                        const HostView& host, VertexMap& assignment, std::size_t depth,
                        const std::function<bool(const VertexMap&)>& visit) {
  if (depth == order.size()) return visit(assignment);
  VertexId v = order[depth];
  for (VertexId candidate : host.vertices) {
    assignment[v] = candidate;
    bool ok = true;
    for (const Edge& e : pattern_edges) {
      auto s = assignment.find(e.src);
      auto d = assignment.find(e.dst);
      if (s != assignment.end() && d != assignment.end() &&
          !host.has(e.label, s->second, d->second)) {
        ok = false;
        break;
      }
    }
    if (ok && !for_each_total_map(order, pattern_edges, host, assignment, depth + 1, visit))
      return false;
  }
  assignment.erase(v);
  return true;
}

bool enumerate_maps(const Graph& pattern, const HostView& host, const VertexMap& fixed,
                    const std::function<bool(const VertexMap&)>& visit) {
  std::vector<VertexId> order;
  for (VertexId v : pattern.vertices())
    if (fixed.find(v) == fixed.end()) order.push_back(v);
  std::vector<Edge> pattern_edges = pattern.edges();
  VertexMap assignment = fixed;
  for (const Edge& e : pattern_edges) {
    auto s = assignment.find(e.src);
    auto d = assignment.find(e.dst);
    if (s != assignment.end() && d != assignment.end() &&
        !host.has(e.label, s->second, d->second))
      return true;  // no map extends `fixed`
  }
  return for_each_total_map(order, pattern_edges, host, assignment, 0, visit);
}

}  // namespace

std::vector<VertexMap> all_embeddings(const Graph& pattern, const Graph& host) {
  HostView view(host);
  std::vector<VertexMap> out;
  enumerate_maps(pattern, view, {}, [&](const VertexMap& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

OracleReport is_maintained(const GraphRule& rule, const Graph& g) {
  HostView view(g);
  OracleReport report;
  enumerate_maps(rule.lhs, view, {}, [&](const VertexMap& f) {
    bool extendable = false;
    enumerate_maps(rule.rhs, view, f, [&](const VertexMap&) {
      extendable = true;
      return false;
    });
    if (!extendable) {
      report.verdict = false;
      report.counterexample = {rule.origin, f};
      return false;
    }
    return true;
  });
  return report;
}

OracleReport is_consequence_graph(const Graph& g, const RuleSet& rules) {
  for (const GraphRule& rule : rules.rules) {
    OracleReport r = is_maintained(rule, g);
    if (!r.verdict) return r;
  }
  return {};
}

}  // namespace oracle
}  // namespace graphsat
