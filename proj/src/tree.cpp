#include "eop/tree.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "eop/error.hpp"

namespace eop {

RootedTree root_tree(const Graph& g, Vertex root) {
  const Vertex n = g.order();
  if (n < 1) throw Error(ErrorKind::NotATree, "the null graph is not a tree");
  if (!g.contains(root)) {
    throw Error(ErrorKind::BadRoot, "root " + std::to_string(root) + " is not a vertex");
  }
  if (g.size() != n - 1) {
    throw Error(ErrorKind::NotATree, "a tree on " + std::to_string(n) + " vertices has " +
                                         std::to_string(n - 1) + " edges, got " +
                                         std::to_string(g.size()));
  }

  const auto un = static_cast<std::size_t>(n);
  RootedTree t;
  t.root_ = root;
  t.parent_.assign(un, kNoVertex);
  t.parent_edge_.assign(un, -1);
  t.child_begin_.assign(un, 0);
  t.child_count_.assign(un, 0);
  t.bfs_.reserve(un);
  std::vector<Vertex> depth(un, kNoVertex);

  depth[root] = 0;
  t.bfs_.push_back(root);
  for (std::size_t head = 0; head < t.bfs_.size(); ++head) {
    const Vertex v = t.bfs_[head];
    t.child_begin_[v] = t.bfs_.size();
    const auto nbrs = g.neighbors(v);
    const auto via = g.incident_edges(v);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      const Vertex w = nbrs[k];
      if (w == t.parent_[v]) continue;
      if (depth[w] != kNoVertex) throw Error(ErrorKind::NotATree, "graph has a cycle");
      depth[w] = depth[v] + 1;
      t.parent_[w] = v;
      t.parent_edge_[w] = via[k];
      t.bfs_.push_back(w);
    }
    t.child_count_[v] = static_cast<Vertex>(t.bfs_.size() - t.child_begin_[v]);
  }
  if (t.bfs_.size() != un) throw Error(ErrorKind::NotATree, "graph is disconnected");

  t.reverse_bfs_.assign(t.bfs_.rbegin(), t.bfs_.rend());
  t.level_begin_.push_back(0);
  for (std::size_t i = 1; i < un; ++i) {
    if (depth[t.bfs_[i]] != depth[t.bfs_[i - 1]]) t.level_begin_.push_back(i);
  }
  t.level_begin_.push_back(un);
  return t;
}

namespace {

// One step of the recurrences: the record of v from the records of its
// children. Children are visited in ascending id, and strict comparisons keep
// the smallest child on ties.
DpRecord combine(std::span<const Vertex> kids, const std::vector<DpRecord>& rec) {
  DpRecord r;
  if (kids.empty()) return r;

  std::int32_t sum_prime = 0;
  std::int32_t sum_rho = 0;
  for (Vertex u : kids) {
    sum_prime += rec[u].rho_prime;
    sum_rho += rec[u].rho;
  }
  r.rho_dprime = sum_prime;
  r.rho_prime = sum_rho;
  r.type = r.rho_dprime + 1 >= r.rho_prime ? VertexType::One : VertexType::Two;

  r.rho_ell = std::numeric_limits<std::int32_t>::min();
  for (Vertex u : kids) {
    const std::int32_t m =
        std::max(rec[u].rho_c, rec[u].rho_dprime) + 1 + sum_prime - rec[u].rho_prime;
    if (m > r.rho_ell) {
      r.rho_ell = m;
      r.leaf_center = u;
    }
  }

  bool some_type_one = false;
  std::int32_t mixed = 0;
  std::int32_t min_gap = std::numeric_limits<std::int32_t>::max();
  Vertex argmin = kNoVertex;
  for (Vertex u : kids) {
    if (rec[u].type == VertexType::One) {
      some_type_one = true;
      mixed += rec[u].rho_dprime + 1;
    } else {
      mixed += rec[u].rho_prime;
    }
    const std::int32_t gap = rec[u].rho_dprime + 1 - rec[u].rho_prime;
    if (gap < min_gap) {
      min_gap = gap;
      argmin = u;
    }
  }
  if (some_type_one) {
    r.rho_c = mixed;
  } else {
    r.rho_c = sum_prime + min_gap;
    r.lone_star_leaf = argmin;
  }

  r.rho = std::max({r.rho_c, r.rho_ell, r.rho_prime});
  if (r.rho_c == r.rho) {
    r.best = Branch::Center;
  } else if (r.rho_ell == r.rho) {
    r.best = Branch::Leaf;
  } else {
    r.best = Branch::Free;
  }
  return r;
}

}  // namespace

std::vector<DpRecord> dp_pass(const RootedTree& t) {
  std::vector<DpRecord> rec(static_cast<std::size_t>(t.order()));
  for (Vertex v : t.order_leaves_first()) rec[v] = combine(t.children(v), rec);
  return rec;
}

std::vector<DpRecord> dp_pass_parallel(const RootedTree& t) {
  std::vector<DpRecord> rec(static_cast<std::size_t>(t.order()));
  for (std::size_t d = t.depth_count(); d-- > 0;) {
    const auto level = t.level(d);
    const auto width = static_cast<std::ptrdiff_t>(level.size());
#pragma omp parallel for schedule(static) if (width > 4096)
    for (std::ptrdiff_t i = 0; i < width; ++i) {
      const Vertex v = level[static_cast<std::size_t>(i)];
      rec[v] = combine(t.children(v), rec);
    }
  }
  return rec;
}

namespace {

// Which optimum of T_v the expansion must realize.
enum class Want : std::uint8_t { Any, Center, Leaf, Prime, DoublePrime };

}  // namespace

EopSet reconstruct(const RootedTree& t, std::span<const DpRecord> rec) {
  std::vector<EdgeId> picked;
  std::vector<std::pair<Vertex, Want>> stack{{t.root(), Want::Any}};
  while (!stack.empty()) {
    auto [v, want] = stack.back();
    stack.pop_back();
    const auto kids = t.children(v);
    if (kids.empty()) continue;

    if (want == Want::Any) {
      switch (rec[v].best) {
        case Branch::Center: want = Want::Center; break;
        case Branch::Leaf: want = Want::Leaf; break;
        case Branch::Free: want = Want::Prime; break;
      }
    }

    switch (want) {
      case Want::Center: {
        // Leaves of the star keep their whole closed neighborhood free below.
        const Vertex lone = rec[v].lone_star_leaf;
        for (Vertex u : kids) {
          const bool leaf =
              lone == kNoVertex ? rec[u].type == VertexType::One : u == lone;
          if (leaf) {
            picked.push_back(t.parent_edge(u));
            stack.emplace_back(u, Want::DoublePrime);
          } else {
            stack.emplace_back(u, Want::Prime);
          }
        }
        break;
      }
      case Want::Leaf: {
        const Vertex center = rec[v].leaf_center;
        for (Vertex u : kids) {
          if (u != center) {
            stack.emplace_back(u, Want::Prime);
            continue;
          }
          picked.push_back(t.parent_edge(u));
          const bool grows = !t.children(u).empty() && rec[u].rho_c >= rec[u].rho_dprime;
          stack.emplace_back(u, grows ? Want::Center : Want::DoublePrime);
        }
        break;
      }
      case Want::Prime:
        for (Vertex u : kids) stack.emplace_back(u, Want::Any);
        break;
      case Want::DoublePrime:
        for (Vertex u : kids) stack.emplace_back(u, Want::Prime);
        break;
      case Want::Any:
        break;
    }
  }
  return EopSet(std::move(picked));
}

std::int32_t tree_eop_number(const Graph& g) {
  const RootedTree t = root_tree(g, 0);
  return dp_pass(t)[static_cast<std::size_t>(t.root())].rho;
}

EopSet tree_eop_set(const Graph& g) {
  const RootedTree t = root_tree(g, 0);
  return reconstruct(t, dp_pass(t));
}

}  // namespace eop
