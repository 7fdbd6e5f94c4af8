#include "eop/conflict.hpp"

#include <algorithm>

namespace eop {

namespace {

// Conflicts of edge i = ab: for each endpoint x of i and each other edge
// e = xy at x, every edge at y except e itself.
void conflict_row(const Graph& g, EdgeId i, std::vector<EdgeId>& row) {
  row.clear();
  const Edge ei = g.edge(i);
  for (Vertex x : {ei.u, ei.v}) {
    const auto nbrs = g.neighbors(x);
    const auto via = g.incident_edges(x);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      if (via[k] == i) continue;
      for (EdgeId j : g.incident_edges(nbrs[k])) {
        if (j != via[k]) row.push_back(j);
      }
    }
  }
  std::sort(row.begin(), row.end());
  row.erase(std::unique(row.begin(), row.end()), row.end());
}

void distance_two_row(const Graph& g, EdgeId i, std::vector<EdgeId>& row) {
  row.clear();
  const Edge ei = g.edge(i);
  for (Vertex x : {ei.u, ei.v}) {
    for (EdgeId j : g.incident_edges(x)) row.push_back(j);
    for (Vertex y : g.neighbors(x)) {
      for (EdgeId j : g.incident_edges(y)) row.push_back(j);
    }
  }
  std::sort(row.begin(), row.end());
  row.erase(std::unique(row.begin(), row.end()), row.end());
  row.erase(std::remove(row.begin(), row.end(), i), row.end());
}

constexpr EdgeId kParallelRows = 512;

template <class RowFn>
Graph assemble_rows(const Graph& g, RowFn&& row_fn) {
  const EdgeId m = g.size();
  std::vector<std::vector<EdgeId>> rows(static_cast<std::size_t>(m));
#pragma omp parallel if (m >= kParallelRows)
  {
    std::vector<EdgeId> scratch;
#pragma omp for schedule(dynamic, 64)
    for (EdgeId i = 0; i < m; ++i) {
      row_fn(g, i, scratch);
      auto& row = rows[static_cast<std::size_t>(i)];
      for (EdgeId j : scratch) {
        if (j > i) row.push_back(j);
      }
    }
  }
  std::vector<Edge> edges;
  for (EdgeId i = 0; i < m; ++i) {
    for (EdgeId j : rows[static_cast<std::size_t>(i)]) edges.push_back({i, j});
  }
  return Graph(m, std::move(edges));
}

}  // namespace

Graph conflict_graph(const Graph& g) { return assemble_rows(g, conflict_row); }

Graph conflict_graph_reference(const Graph& g) {
  std::vector<Edge> edges;
  for (EdgeId i = 0; i < g.size(); ++i) {
    for (EdgeId j = i + 1; j < g.size(); ++j) {
      if (common_edge(g, i, j)) edges.push_back({i, j});
    }
  }
  return Graph(g.size(), std::move(edges));
}

Graph distance_two_edge_graph(const Graph& g) { return assemble_rows(g, distance_two_row); }

}  // namespace eop
