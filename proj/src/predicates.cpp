#include "eop/predicates.hpp"

#include <algorithm>
#include <queue>

namespace eop {

Components connected_components(const Graph& g) {
  Components out;
  out.label.assign(static_cast<std::size_t>(g.order()), kNoVertex);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (out.label[s] != kNoVertex) continue;
    const auto c = static_cast<Vertex>(out.count++);
    out.label[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (out.label[w] == kNoVertex) {
          out.label[w] = c;
          stack.push_back(w);
        }
      }
    }
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).count == 1; }

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  std::queue<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          queue.push(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

std::optional<Vertex> diameter(const Graph& g) {
  if (!is_connected(g)) return std::nullopt;
  Vertex best = 0;
  std::vector<Vertex> dist(static_cast<std::size_t>(g.order()));
  std::queue<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    std::fill(dist.begin(), dist.end(), kNoVertex);
    dist[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop();
      best = std::max(best, dist[v]);
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] == kNoVertex) {
          dist[w] = dist[v] + 1;
          queue.push(w);
        }
      }
    }
  }
  return best;
}

bool is_claw_free(const Graph& g) {
  for (Vertex c = 0; c < g.order(); ++c) {
    const auto nbrs = g.neighbors(c);
    const std::size_t d = nbrs.size();
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) {
        if (g.adjacent(nbrs[i], nbrs[j])) continue;
        for (std::size_t k = j + 1; k < d; ++k) {
          if (!g.adjacent(nbrs[i], nbrs[k]) && !g.adjacent(nbrs[j], nbrs[k])) return false;
        }
      }
    }
  }
  return true;
}

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::int64_t>(g.order());
  return static_cast<std::int64_t>(g.size()) == n * (n - 1) / 2;
}

StructuralReport structural_predicates(const Graph& g) {
  StructuralReport r;
  r.connected = is_connected(g);
  r.bipartition = bipartition(g);
  r.tree = r.connected && g.size() == g.order() - 1;
  r.eulerian = r.connected;
  for (Vertex v = 0; v < g.order() && r.eulerian; ++v) r.eulerian = g.degree(v) % 2 == 0;
  r.diameter = diameter(g);
  r.claw_free = is_claw_free(g);
  r.min_degree = g.min_degree();
  r.max_degree = g.max_degree();
  return r;
}

}  // namespace eop
