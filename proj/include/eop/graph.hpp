#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace eop {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr Vertex kNoVertex = -1;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Edge with its endpoints ordered so that u < v.
constexpr Edge make_edge(Vertex a, Vertex b) noexcept {
  return a < b ? Edge{a, b} : Edge{b, a};
}

/// Simple undirected graph on the dense vertex ids 0..n-1.
///
/// The edge list keeps the caller's order (edge ids are positions in it);
/// every edge is stored once, normalized to u < v. Adjacency is kept in
/// compressed rows sorted by neighbor id, with the id of the connecting edge
/// stored alongside each neighbor. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Throws Error{InvalidGraph} on self-loops, duplicate edges or endpoints
  /// outside 0..n-1.
  Graph(Vertex n, std::vector<Edge> edges);

  Vertex order() const noexcept { return n_; }
  EdgeId size() const noexcept { return static_cast<EdgeId>(edges_.size()); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[static_cast<std::size_t>(id)]; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  /// Edge ids aligned with neighbors(v).
  std::span<const EdgeId> incident_edges(Vertex v) const noexcept {
    return {adj_edge_.data() + offsets_[v], adj_edge_.data() + offsets_[v + 1]};
  }
  Vertex degree(Vertex v) const noexcept {
    return static_cast<Vertex>(offsets_[v + 1] - offsets_[v]);
  }

  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }
  bool adjacent(Vertex a, Vertex b) const noexcept { return find_edge(a, b).has_value(); }
  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const noexcept;

  /// 0 for the null graph.
  Vertex min_degree() const noexcept;
  Vertex max_degree() const noexcept;

  /// Same order and the same edge list in the same order.
  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adj_;
  std::vector<EdgeId> adj_edge_;
};

/// G - e on the same vertex set. Edge ids above `id` shift down by one.
Graph remove_edge(const Graph& g, EdgeId id);

/// A set of edges of some host graph, held as sorted, distinct edge ids.
class EopSet {
 public:
  EopSet() = default;
  explicit EopSet(std::vector<EdgeId> ids);

  std::span<const EdgeId> ids() const noexcept { return ids_; }
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  bool contains(EdgeId id) const noexcept;

  friend bool operator==(const EopSet&, const EopSet&) = default;

 private:
  std::vector<EdgeId> ids_;
};

/// A pair of packed edges together with the edge that joins them.
struct Conflict {
  EdgeId first;
  EdgeId second;
  Edge common;
};

/// An edge e of g, distinct from e1 and e2, joining an endpoint of e1 to an
/// endpoint of e2; the lexicographically smallest one when several exist.
/// Throws when e1 or e2 is not an edge of g or when e1 == e2.
std::optional<Edge> common_edge(const Graph& g, Edge e1, Edge e2);
std::optional<EdgeId> common_edge(const Graph& g, EdgeId e1, EdgeId e2);

/// First conflict of b in g, scanning the joining edge in edge-id order.
/// Linear in |V| + |E|. Throws Error{InvalidArgument} on ids out of range.
std::optional<Conflict> find_conflict(const Graph& g, const EopSet& b);

bool is_eop_set(const Graph& g, const EopSet& b);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // new id -> id in the host graph
};

/// Subgraph induced by the endpoints of the edges in b, relabeled in
/// increasing order of the host ids.
InducedSubgraph induced_subgraph_by_edges(const Graph& g, const EopSet& b);

/// Every component is a star K_{1,s}, s >= 0.
bool is_star_forest(const Graph& g);

}  // namespace eop
