#include "graphsat/saturate.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace graphsat {

namespace {

constexpr VertexId kNoBound = std::numeric_limits<VertexId>::max();

VertexId max_value(const std::vector<VertexId>& assignment) {
  VertexId n = 0;
  for (VertexId v : assignment) n = std::max(n, v);
  return n;
}

VertexMap to_map(const std::vector<VertexId>& vs, const std::vector<VertexId>& assignment) {
  VertexMap f;
  for (std::size_t i = 0; i < vs.size(); ++i) f[vs[i]] = assignment[i];
  return f;
}

bool has_extension(const GraphRule& rule, const VertexMap& f, const Graph& host) {
  bool found = false;
  detail::match_embeddings(rule.rhs, host, f, nullptr,
                           [&](const std::vector<VertexId>&, const std::vector<VertexId>&) {
                             found = true;
                             return false;
                           });
  return found;
}

/// Applies the chosen item; shared by step() and saturate().
ChainState apply_item(ChainState state, const GraphRule& rule, const WorkItem& item) {
  StepRecord rec;
  rec.step_index = state.steps_applied + 1;
  rec.rule_origin = rule.origin;
  rec.rule_index = item.rule_index;
  rec.f = item.f;

  VertexMap g = item.f;
  for (VertexId v : rule.rhs.vertices()) {
    if (g.find(v) != g.end()) continue;
    g[v] = state.next_vertex;
    rec.fresh_vertices.push_back(state.next_vertex);
    state.graph.add_vertex(state.next_vertex);
    ++state.next_vertex;
  }
  rule.rhs.for_each_edge([&](const Edge& e) {
    Edge mapped{e.label, g.at(e.src), g.at(e.dst)};
    if (state.graph.add_edge(mapped)) rec.added_edges.push_back(mapped);
  });
  std::sort(rec.added_edges.begin(), rec.added_edges.end());

  if (rec.added_edges.empty() && rec.fresh_vertices.empty())
    throw std::logic_error("saturation step changed nothing; the item was not a violation");

  ++state.steps_applied;
  state.trace.push_back(std::move(rec));
  return state;
}

}  // namespace

ChainState ChainState::from_graph(Graph g) {
  VertexId n = static_cast<VertexId>(g.vertex_count());
  for (VertexId v = 0; v < n; ++v)
    if (!g.has_vertex(v))
      throw std::invalid_argument("chain state requires vertices {0,...,n-1}; missing " +
                                  std::to_string(v));
  ChainState state;
  state.graph = std::move(g);
  state.next_vertex = n;
  return state;
}

std::vector<WorkItem> find_violations(const ChainState& state, const RuleSet& rules) {
  std::vector<WorkItem> out;
  for (std::size_t ri = 0; ri < rules.rules.size(); ++ri) {
    const GraphRule& rule = rules.rules[ri];
    detail::match_embeddings(
        rule.lhs, state.graph, {}, nullptr,
        [&](const std::vector<VertexId>& vs, const std::vector<VertexId>& assignment) {
          VertexMap f = to_map(vs, assignment);
          if (!has_extension(rule, f, state.graph))
            out.push_back(WorkItem{max_value(assignment), ri, std::move(f)});
          return true;
        });
  }
  // Embeddings already arrive ordered by rule, then lexicographic f; a
  // stable sort by N yields the (N, rule, f) order.
  std::stable_sort(out.begin(), out.end(),
                   [](const WorkItem& a, const WorkItem& b) { return a.max_vertex < b.max_vertex; });
  return out;
}

std::optional<WorkItem> select_first_violation(const ChainState& state, const RuleSet& rules) {
  std::optional<WorkItem> best;
  VertexId bound = kNoBound;
  for (std::size_t ri = 0; ri < rules.rules.size(); ++ri) {
    const GraphRule& rule = rules.rules[ri];
    detail::match_embeddings(
        rule.lhs, state.graph, {}, &bound,
        [&](const std::vector<VertexId>& vs, const std::vector<VertexId>& assignment) {
          VertexId n = max_value(assignment);
          // Equal-N items lose to the earlier rule or earlier embedding, so
          // only a strict improvement can replace the current best.
          if (best && n >= best->max_vertex) return true;
          VertexMap f = to_map(vs, assignment);
          if (!has_extension(rule, f, state.graph)) {
            best = WorkItem{n, ri, std::move(f)};
            bound = n;
          }
          return true;
        });
  }
  return best;
}

std::optional<ChainState> step(const ChainState& state, const RuleSet& rules) {
  std::optional<WorkItem> item = select_first_violation(state, rules);
  if (!item) return std::nullopt;
  return apply_item(state, rules.rules[item->rule_index], *item);
}

SaturationResult saturate(ChainState initial, const RuleSet& rules, std::uint64_t budget) {
  if (std::optional<Edge> witness = has_conflict(initial.graph))
    return {Outcome::Conflict, std::move(initial), witness};

  ChainState state = std::move(initial);
  std::uint64_t applied = 0;
  for (;;) {
    std::optional<WorkItem> item = select_first_violation(state, rules);
    if (!item) return {Outcome::Fixpoint, std::move(state), std::nullopt};
    if (applied >= budget) return {Outcome::BudgetExhausted, std::move(state), std::nullopt};
    state = apply_item(std::move(state), rules.rules[item->rule_index], *item);
    ++applied;
    for (const Edge& e : state.trace.back().added_edges)
      if (e.label == Label::bot()) return {Outcome::Conflict, std::move(state), e};
  }
}

std::string format_step_line(const StepRecord& rec) {
  std::ostringstream out;
  out << "step " << rec.step_index << " rule=[" << rec.rule_origin << "] f={";
  bool first = true;
  for (const auto& [v, w] : rec.f) {
    if (!first) out << ",";
    out << v << "->" << w;
    first = false;
  }
  out << "} fresh=[";
  first = true;
  for (VertexId v : rec.fresh_vertices) {
    if (!first) out << ",";
    out << v;
    first = false;
  }
  out << "] added=[";
  first = true;
  for (const Edge& e : rec.added_edges) {
    if (!first) out << ",";
    out << e.to_string();
    first = false;
  }
  out << "]";
  return out.str();
}

}  // namespace graphsat
