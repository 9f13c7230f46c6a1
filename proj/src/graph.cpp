#include "graphsat/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace graphsat {

namespace {
const std::vector<VertexId> kNoNeighbors;

void insert_sorted(std::vector<VertexId>& v, VertexId x) {
  v.insert(std::lower_bound(v.begin(), v.end(), x), x);
}
}  // namespace

std::string Edge::to_string() const {
  return "(" + label.to_string() + "," + std::to_string(src) + "," + std::to_string(dst) + ")";
}

Graph::Graph(std::initializer_list<VertexId> vertices, std::initializer_list<Edge> edges) {
  for (VertexId v : vertices) add_vertex(v);
  for (const Edge& e : edges) add_edge(e);
}

void Graph::add_vertex(VertexId v) { vertices_.insert(v); }

bool Graph::add_edge(const Edge& e) {
  if (!has_vertex(e.src) || !has_vertex(e.dst))
    throw std::invalid_argument("edge endpoint outside vertex set: " + e.to_string());
  LabelEdges& bucket = edges_[e.label];
  if (!bucket.pairs.insert(pack(e.src, e.dst)).second) return false;
  insert_sorted(bucket.out[e.src], e.dst);
  insert_sorted(bucket.in[e.dst], e.src);
  ++edge_count_;
  return true;
}

bool Graph::has_edge(const Label& l, VertexId src, VertexId dst) const {
  auto it = edges_.find(l);
  return it != edges_.end() && it->second.pairs.count(pack(src, dst)) != 0;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for_each_edge([&](const Edge& e) { out.push_back(e); });
  return out;
}

std::vector<Label> Graph::edge_labels() const {
  std::vector<Label> out;
  for (const auto& [label, bucket] : edges_)
    if (!bucket.pairs.empty()) out.push_back(label);
  return out;
}

std::vector<std::pair<VertexId, VertexId>> Graph::label_pairs(const Label& l) const {
  std::vector<std::pair<VertexId, VertexId>> out;
  auto it = edges_.find(l);
  if (it == edges_.end()) return out;
  for (const auto& [src, dsts] : it->second.out)
    for (VertexId dst : dsts) out.emplace_back(src, dst);
  return out;
}

const std::vector<VertexId>& Graph::out_neighbors(const Label& l, VertexId src) const {
  auto it = edges_.find(l);
  if (it == edges_.end()) return kNoNeighbors;
  auto jt = it->second.out.find(src);
  return jt == it->second.out.end() ? kNoNeighbors : jt->second;
}

const std::vector<VertexId>& Graph::in_neighbors(const Label& l, VertexId dst) const {
  auto it = edges_.find(l);
  if (it == edges_.end()) return kNoNeighbors;
  auto jt = it->second.in.find(dst);
  return jt == it->second.in.end() ? kNoNeighbors : jt->second;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.vertices_ != b.vertices_ || a.edge_count_ != b.edge_count_) return false;
  for (const auto& [label, bucket] : a.edges_) {
    if (bucket.pairs.empty()) continue;
    auto it = b.edges_.find(label);
    if (it == b.edges_.end() || it->second.pairs != bucket.pairs) return false;
  }
  return true;
}

Graph graph_union(const Graph& g1, const Graph& g2) {
  Graph out = g1;
  for (VertexId v : g2.vertices()) out.add_vertex(v);
  g2.for_each_edge([&](const Edge& e) { out.add_edge(e); });
  return out;
}

Graph relabel(const std::function<VertexId(VertexId)>& f, const Graph& g) {
  Graph out;
  for (VertexId v : g.vertices()) out.add_vertex(f(v));
  g.for_each_edge([&](const Edge& e) { out.add_edge(e.label, f(e.src), f(e.dst)); });
  return out;
}

Graph relabel(const VertexMap& f, const Graph& g) {
  for (VertexId v : g.vertices())
    if (f.find(v) == f.end())
      throw std::invalid_argument("relabel: map is not total, missing vertex " + std::to_string(v));
  return relabel([&f](VertexId v) { return f.at(v); }, g);
}

bool is_subgraph(const Graph& g1, const Graph& g2) {
  for (VertexId v : g1.vertices())
    if (!g2.has_vertex(v)) return false;
  bool ok = true;
  g1.for_each_edge([&](const Edge& e) { ok = ok && g2.has_edge(e); });
  return ok;
}

namespace detail {

namespace {

constexpr VertexId kUnassigned = std::numeric_limits<VertexId>::max();

struct EdgeCheck {
  Label label;
  int src_pos;  // index into pattern vertex list, or -1 synthetic (never used)
  int dst_pos;
};

}  // namespace

void match_embeddings(
    const Graph& pattern, const Graph& host, const VertexMap& pinned, const VertexId* bound,
    const std::function<bool(const std::vector<VertexId>&, const std::vector<VertexId>&)>& emit) {
  std::vector<VertexId> pat_vertices(pattern.vertices().begin(), pattern.vertices().end());
  const std::size_t k = pat_vertices.size();

  auto pos_of = [&](VertexId v) -> int {
    auto it = std::lower_bound(pat_vertices.begin(), pat_vertices.end(), v);
    return static_cast<int>(it - pat_vertices.begin());
  };

  // place_time[i]: -1 when pinned, else the search depth at which pattern
  // vertex i gets a value.
  std::vector<int> place_time(k, 0);
  std::vector<VertexId> assignment(k, kUnassigned);
  std::vector<int> search_order;  // positions, ascending vertex id
  for (std::size_t i = 0; i < k; ++i) {
    auto it = pinned.find(pat_vertices[i]);
    if (it != pinned.end()) {
      place_time[i] = -1;
      assignment[i] = it->second;
      if (!host.has_vertex(it->second)) return;  // pinned outside the host
    } else {
      place_time[i] = static_cast<int>(search_order.size());
      search_order.push_back(static_cast<int>(i));
    }
  }

  // Group pattern edges by the depth at which both endpoints are known.
  std::vector<std::vector<EdgeCheck>> checks(search_order.size());
  bool pinned_ok = true;
  pattern.for_each_edge([&](const Edge& e) {
    if (!pinned_ok) return;
    EdgeCheck c{e.label, pos_of(e.src), pos_of(e.dst)};
    int t = std::max(place_time[c.src_pos], place_time[c.dst_pos]);
    if (t < 0) {
      if (!host.has_edge(e.label, assignment[c.src_pos], assignment[c.dst_pos])) pinned_ok = false;
    } else {
      checks[t].push_back(c);
    }
  });
  if (!pinned_ok) return;

  const std::size_t depth_count = search_order.size();
  if (depth_count == 0) {
    emit(pat_vertices, assignment);
    return;
  }

  std::vector<VertexId> all_vertices(host.vertices().begin(), host.vertices().end());

  // Recursive descent over search depths; at each depth the candidate list is
  // driven by the smallest adjacency list among the constraint edges whose
  // other endpoint is already placed, falling back to all host vertices.
  std::function<bool(std::size_t)> descend = [&](std::size_t depth) -> bool {
    const int vpos = search_order[depth];
    const std::vector<EdgeCheck>& cs = checks[depth];

    const std::vector<VertexId>* candidates = &all_vertices;
    for (const EdgeCheck& c : cs) {
      const std::vector<VertexId>* from = nullptr;
      if (c.dst_pos == vpos && c.src_pos != vpos && assignment[c.src_pos] != kUnassigned)
        from = &host.out_neighbors(c.label, assignment[c.src_pos]);
      else if (c.src_pos == vpos && c.dst_pos != vpos && assignment[c.dst_pos] != kUnassigned)
        from = &host.in_neighbors(c.label, assignment[c.dst_pos]);
      if (from && from->size() < candidates->size()) candidates = from;
    }

    for (VertexId cand : *candidates) {
      if (bound && cand >= *bound) break;  // candidates ascend, so nothing later fits
      assignment[vpos] = cand;
      bool ok = true;
      for (const EdgeCheck& c : cs) {
        if (!host.has_edge(c.label, assignment[c.src_pos], assignment[c.dst_pos])) {
          ok = false;
          break;
        }
      }
      if (ok) {
        if (depth + 1 == depth_count) {
          if (!emit(pat_vertices, assignment)) {
            assignment[vpos] = kUnassigned;
            return false;
          }
        } else if (!descend(depth + 1)) {
          assignment[vpos] = kUnassigned;
          return false;
        }
      }
    }
    assignment[vpos] = kUnassigned;
    return true;
  };

  descend(0);
}

}  // namespace detail

std::vector<VertexMap> enumerate_embeddings(const Graph& pattern, const Graph& host) {
  std::vector<VertexMap> out;
  detail::match_embeddings(
      pattern, host, {}, nullptr,
      [&](const std::vector<VertexId>& vs, const std::vector<VertexId>& assignment) {
        VertexMap f;
        for (std::size_t i = 0; i < vs.size(); ++i) f[vs[i]] = assignment[i];
        out.push_back(std::move(f));
        return true;
      });
  return out;
}

std::optional<VertexMap> extend_to_rhs(const Graph& rule_lhs, const Graph& rule_rhs,
                                       const VertexMap& f, const Graph& host) {
  for (VertexId v : rule_lhs.vertices())
    if (f.find(v) == f.end())
      throw std::invalid_argument("extend_to_rhs: embedding misses lhs vertex " +
                                  std::to_string(v));
  std::optional<VertexMap> result;
  detail::match_embeddings(
      rule_rhs, host, f, nullptr,
      [&](const std::vector<VertexId>& vs, const std::vector<VertexId>& assignment) {
        VertexMap g;
        for (std::size_t i = 0; i < vs.size(); ++i) g[vs[i]] = assignment[i];
        result = std::move(g);
        return false;  // first extension only
      });
  return result;
}

std::optional<Edge> has_conflict(const Graph& g) {
  auto pairs = g.label_pairs(Label::bot());
  if (pairs.empty()) return std::nullopt;
  return Edge{Label::bot(), pairs.front().first, pairs.front().second};
}

}  // namespace graphsat
