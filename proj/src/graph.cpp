#include "eop/graph.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "eop/error.hpp"
#include "eop/predicates.hpp"

namespace eop {

Graph::Graph(Vertex n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw Error(ErrorKind::InvalidGraph, "negative vertex count");
  std::vector<std::size_t> deg(static_cast<std::size_t>(n_) + 1, 0);
  for (Edge& e : edges_) {
    if (!contains(e.u) || !contains(e.v)) {
      throw Error(ErrorKind::InvalidGraph,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") has an endpoint outside 0.." + std::to_string(n_ - 1));
    }
    if (e.u == e.v) {
      throw Error(ErrorKind::InvalidGraph, "self-loop on vertex " + std::to_string(e.u));
    }
    e = make_edge(e.u, e.v);
    ++deg[e.u];
    ++deg[e.v];
  }

  offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (Vertex v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];

  std::vector<std::pair<Vertex, EdgeId>> slots(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < size(); ++id) {
    const Edge e = edges_[id];
    slots[fill[e.u]++] = {e.v, id};
    slots[fill[e.v]++] = {e.u, id};
  }

  adj_.resize(slots.size());
  adj_edge_.resize(slots.size());
  for (Vertex v = 0; v < n_; ++v) {
    auto first = slots.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = slots.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last);
    auto dup = std::adjacent_find(first, last, [](const auto& a, const auto& b) {
      return a.first == b.first;
    });
    if (dup != last) {
      throw Error(ErrorKind::InvalidGraph, "duplicate edge (" + std::to_string(v) + "," +
                                               std::to_string(dup->first) + ")");
    }
  }
  for (std::size_t i = 0; i < slots.size(); ++i) {
    adj_[i] = slots[i].first;
    adj_edge_[i] = slots[i].second;
  }
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const noexcept {
  if (!contains(a) || !contains(b) || a == b) return std::nullopt;
  if (degree(a) > degree(b)) std::swap(a, b);
  const auto nbrs = neighbors(a);
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b);
  if (it == nbrs.end() || *it != b) return std::nullopt;
  return incident_edges(a)[static_cast<std::size_t>(it - nbrs.begin())];
}

Vertex Graph::min_degree() const noexcept {
  if (n_ == 0) return 0;
  Vertex best = degree(0);
  for (Vertex v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

Vertex Graph::max_degree() const noexcept {
  Vertex best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

Graph remove_edge(const Graph& g, EdgeId id) {
  if (id < 0 || id >= g.size()) {
    throw Error(ErrorKind::InvalidArgument, "edge id " + std::to_string(id) + " out of range");
  }
  std::vector<Edge> kept;
  kept.reserve(static_cast<std::size_t>(g.size()) - 1);
  for (EdgeId i = 0; i < g.size(); ++i) {
    if (i != id) kept.push_back(g.edge(i));
  }
  return Graph(g.order(), std::move(kept));
}

EopSet::EopSet(std::vector<EdgeId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool EopSet::contains(EdgeId id) const noexcept {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

namespace {

EdgeId require_edge(const Graph& g, Edge e) {
  const auto id = g.find_edge(e.u, e.v);
  if (!id) {
    throw Error(ErrorKind::InvalidArgument,
                "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
  }
  return *id;
}

void require_ids(const Graph& g, const EopSet& b) {
  if (!b.empty() && (b.ids().front() < 0 || b.ids().back() >= g.size())) {
    throw Error(ErrorKind::InvalidArgument, "edge id out of range for the host graph");
  }
}

}  // namespace

std::optional<EdgeId> common_edge(const Graph& g, EdgeId e1, EdgeId e2) {
  if (e1 < 0 || e1 >= g.size() || e2 < 0 || e2 >= g.size()) {
    throw Error(ErrorKind::InvalidArgument, "edge id out of range");
  }
  if (e1 == e2) throw Error(ErrorKind::InvalidArgument, "common_edge needs two distinct edges");
  const Edge a = g.edge(e1);
  const Edge b = g.edge(e2);
  std::optional<EdgeId> best;
  for (Vertex x : {a.u, a.v}) {
    for (Vertex y : {b.u, b.v}) {
      const auto id = g.find_edge(x, y);
      if (!id || *id == e1 || *id == e2) continue;
      if (!best || g.edge(*id) < g.edge(*best)) best = id;
    }
  }
  return best;
}

std::optional<Edge> common_edge(const Graph& g, Edge e1, Edge e2) {
  const EdgeId a = require_edge(g, make_edge(e1.u, e1.v));
  const EdgeId b = require_edge(g, make_edge(e2.u, e2.v));
  const auto id = common_edge(g, a, b);
  if (!id) return std::nullopt;
  return g.edge(*id);
}

// An edge xy joins two packed edges iff, after discounting xy itself, some
// packed edge sits at x and some packed edge sits at y. Those two are then
// necessarily distinct, so one pass over the edges decides the whole set.
std::optional<Conflict> find_conflict(const Graph& g, const EopSet& b) {
  require_ids(g, b);
  std::vector<Vertex> packed_at(static_cast<std::size_t>(g.order()), 0);
  std::vector<char> in_set(static_cast<std::size_t>(g.size()), 0);
  for (EdgeId id : b.ids()) {
    in_set[id] = 1;
    ++packed_at[g.edge(id).u];
    ++packed_at[g.edge(id).v];
  }
  for (EdgeId id = 0; id < g.size(); ++id) {
    const Edge e = g.edge(id);
    const Vertex self = in_set[id];
    if (packed_at[e.u] - self == 0 || packed_at[e.v] - self == 0) continue;
    auto packed_other = [&](Vertex x) {
      for (EdgeId f : g.incident_edges(x)) {
        if (f != id && in_set[f]) return f;
      }
      return EdgeId{-1};
    };
    EdgeId first = packed_other(e.u);
    EdgeId second = packed_other(e.v);
    if (first > second) std::swap(first, second);
    return Conflict{first, second, e};
  }
  return std::nullopt;
}

bool is_eop_set(const Graph& g, const EopSet& b) { return !find_conflict(g, b).has_value(); }

InducedSubgraph induced_subgraph_by_edges(const Graph& g, const EopSet& b) {
  require_ids(g, b);
  std::vector<Vertex> relabel(static_cast<std::size_t>(g.order()), kNoVertex);
  for (EdgeId id : b.ids()) {
    relabel[g.edge(id).u] = 0;
    relabel[g.edge(id).v] = 0;
  }
  InducedSubgraph out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (relabel[v] == kNoVertex) continue;
    relabel[v] = static_cast<Vertex>(out.original.size());
    out.original.push_back(v);
  }
  std::vector<Edge> edges;
  for (Vertex v : out.original) {
    for (Vertex w : g.neighbors(v)) {
      if (w > v && relabel[w] != kNoVertex) edges.push_back({relabel[v], relabel[w]});
    }
  }
  out.graph = Graph(static_cast<Vertex>(out.original.size()), std::move(edges));
  return out;
}

bool is_star_forest(const Graph& g) {
  const Components comps = connected_components(g);
  std::vector<std::int64_t> edge_count(comps.count, 0);
  std::vector<Vertex> vertex_count(comps.count, 0);
  std::vector<Vertex> top_degree(comps.count, 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto c = static_cast<std::size_t>(comps.label[v]);
    ++vertex_count[c];
    edge_count[c] += g.degree(v);
    top_degree[c] = std::max(top_degree[c], g.degree(v));
  }
  for (std::size_t c = 0; c < comps.count; ++c) {
    const Vertex k = vertex_count[c];
    if (edge_count[c] / 2 != k - 1) return false;
    if (k > 2 && top_degree[c] != k - 1) return false;
  }
  return true;
}

}  // namespace eop
