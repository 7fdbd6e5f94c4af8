#include "eop/generators.hpp"

#include <string>

#include "eop/error.hpp"

namespace eop {

Graph path_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(Vertex n) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, std::move(edges));
}

Graph complete_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, std::move(edges));
}

Graph complete_minus_edge(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (!(i == 0 && j == 1)) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

Graph star_graph(Vertex t) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= t; ++i) edges.push_back({0, i});
  return Graph(t + 1, std::move(edges));
}

Graph complete_bipartite(Vertex a, Vertex b) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < a; ++i) {
    for (Vertex j = 0; j < b; ++j) edges.push_back({i, a + j});
  }
  return Graph(a + b, std::move(edges));
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back(make_edge(i, (i + 1) % 5));          // outer cycle
    edges.push_back(make_edge(i, i + 5));                // spokes
    edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));  // inner pentagram
  }
  return Graph(10, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  for (const Edge& e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order()});
  return Graph(a.order() + b.order(), std::move(edges));
}

Graph decode_pruefer(std::span<const Vertex> seq) {
  const auto n = static_cast<Vertex>(seq.size() + 2);
  std::vector<Vertex> degree(static_cast<std::size_t>(n), 1);
  for (Vertex x : seq) {
    if (x < 0 || x >= n) {
      throw Error(ErrorKind::InvalidArgument,
                  "Pruefer entry " + std::to_string(x) + " outside 0.." + std::to_string(n - 1));
    }
    ++degree[x];
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  Vertex ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  Vertex leaf = ptr;
  for (Vertex x : seq) {
    edges.push_back(make_edge(leaf, x));
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.push_back(make_edge(leaf, n - 1));
  return Graph(n, std::move(edges));
}

Graph random_tree(Vertex n, Rng& rng) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "a tree needs at least one vertex");
  if (n == 1) return Graph(1, {});
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  std::vector<Vertex> seq(static_cast<std::size_t>(n - 2));
  for (Vertex& x : seq) x = pick(rng);
  return decode_pruefer(seq);
}

void for_each_labeled_tree(Vertex n, const std::function<void(const Graph&)>& fn) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "a tree needs at least one vertex");
  if (n == 1) {
    fn(Graph(1, {}));
    return;
  }
  std::vector<Vertex> seq(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    fn(decode_pruefer(seq));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
}

Graph random_graph(Vertex n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

void for_each_graph(Vertex n, const std::function<void(const Graph&)>& fn) {
  std::vector<Edge> all;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) all.push_back({i, j});
  }
  if (all.size() >= 63) throw Error(ErrorKind::InvalidArgument, "too many edge subsets");
  const std::uint64_t total = std::uint64_t{1} << all.size();
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    edges.clear();
    for (std::size_t k = 0; k < all.size(); ++k) {
      if ((mask >> k) & 1U) edges.push_back(all[k]);
    }
    fn(Graph(n, edges));
  }
}

}  // namespace eop
