#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "graphsat/label.hpp"

namespace graphsat {

using VertexId = std::uint32_t;

struct Edge {
  Label label;
  VertexId src = 0;
  VertexId dst = 0;

  std::string to_string() const;
  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Total function from a pattern's vertices to a host's vertices.
/// Not required to be injective.
using VertexMap = std::map<VertexId, VertexId>;

/// Finite directed labeled graph: a set of vertices plus a set of labeled
/// edges whose endpoints lie in the vertex set. Values are treated as
/// immutable once built; the operations below return new graphs.
class Graph {
 public:
  Graph() = default;
  Graph(std::initializer_list<VertexId> vertices, std::initializer_list<Edge> edges);

  void add_vertex(VertexId v);
  /// Returns false when the edge was already present.
  /// Throws std::invalid_argument if an endpoint is missing.
  bool add_edge(const Edge& e);
  bool add_edge(const Label& l, VertexId src, VertexId dst) { return add_edge(Edge{l, src, dst}); }

  bool has_vertex(VertexId v) const { return vertices_.count(v) != 0; }
  bool has_edge(const Label& l, VertexId src, VertexId dst) const;
  bool has_edge(const Edge& e) const { return has_edge(e.label, e.src, e.dst); }

  bool empty() const { return vertices_.empty(); }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const std::set<VertexId>& vertices() const { return vertices_; }
  /// All edges in (label, src, dst) order.
  std::vector<Edge> edges() const;
  /// Labels that occur on at least one edge, ascending.
  std::vector<Label> edge_labels() const;
  /// (src, dst) pairs of the given label, ascending.
  std::vector<std::pair<VertexId, VertexId>> label_pairs(const Label& l) const;

  /// Sorted adjacency; a shared empty vector when there is none.
  const std::vector<VertexId>& out_neighbors(const Label& l, VertexId src) const;
  const std::vector<VertexId>& in_neighbors(const Label& l, VertexId dst) const;

  template <typename F>
  void for_each_edge(F&& f) const {
    for (const auto& [label, bucket] : edges_)
      for (const auto& [src, dsts] : bucket.out)
        for (VertexId dst : dsts) f(Edge{label, src, dst});
  }

  friend bool operator==(const Graph& a, const Graph& b);
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

 private:
  struct LabelEdges {
    std::unordered_set<std::uint64_t> pairs;  // packed (src << 32) | dst
    std::map<VertexId, std::vector<VertexId>> out;
    std::map<VertexId, std::vector<VertexId>> in;
  };

  static std::uint64_t pack(VertexId src, VertexId dst) {
    return (static_cast<std::uint64_t>(src) << 32) | dst;
  }

  std::set<VertexId> vertices_;
  std::map<Label, LabelEdges> edges_;
  std::size_t edge_count_ = 0;
};

/// Vertex-set union and edge-set union.
Graph graph_union(const Graph& g1, const Graph& g2);

/// Image graph under a total vertex function.
/// The map overload throws std::invalid_argument when f misses a vertex.
Graph relabel(const VertexMap& f, const Graph& g);
Graph relabel(const std::function<VertexId(VertexId)>& f, const Graph& g);

/// True iff graph_union(g1, g2) == g2.
bool is_subgraph(const Graph& g1, const Graph& g2);

/// Every total map f from pattern vertices to host vertices such that the
/// image of the pattern is a subgraph of the host. Ordered lexicographically
/// over the pattern vertices ascending, candidate host vertices ascending.
/// Non-injective maps are included; the empty pattern yields one empty map.
std::vector<VertexMap> enumerate_embeddings(const Graph& pattern, const Graph& host);

/// Given f embedding rule_lhs into host, the first embedding of rule_rhs
/// into host that agrees with f on the lhs vertices, if one exists.
std::optional<VertexMap> extend_to_rhs(const Graph& rule_lhs, const Graph& rule_rhs,
                                       const VertexMap& f, const Graph& host);

/// First bot-labeled edge in (src, dst) order, if any.
std::optional<Edge> has_conflict(const Graph& g);

namespace detail {

/// Backtracking core shared by the embedding operations. Enumerates, in
/// lexicographic order over the non-pinned pattern vertices ascending, every
/// assignment extending `pinned` whose image of `pattern` lies in `host`.
/// Candidates >= *bound are skipped when bound is non-null (the caller may
/// tighten *bound from inside the callback). The callback receives the
/// pattern vertices (ascending) and the parallel assignment; returning false
/// stops the enumeration.
void match_embeddings(
    const Graph& pattern, const Graph& host, const VertexMap& pinned, const VertexId* bound,
    const std::function<bool(const std::vector<VertexId>&, const std::vector<VertexId>&)>& emit);

}  // namespace detail

}  // namespace graphsat
