#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "eop/graph.hpp"

namespace eop {

/// A tree rooted at `root`, laid out by a breadth-first traversal.
///
/// The children of every vertex occupy a contiguous run of the BFS order
/// (ascending vertex id within the run), and vertices of equal depth form
/// contiguous levels.
class RootedTree {
 public:
  Vertex root() const noexcept { return root_; }
  Vertex order() const noexcept { return static_cast<Vertex>(bfs_.size()); }

  std::optional<Vertex> parent(Vertex v) const noexcept {
    if (parent_[v] == kNoVertex) return std::nullopt;
    return parent_[v];
  }
  /// Id, in the host graph, of the edge from v to its parent (-1 at the root).
  EdgeId parent_edge(Vertex v) const noexcept { return parent_edge_[v]; }

  std::span<const Vertex> children(Vertex v) const noexcept {
    return std::span<const Vertex>(bfs_).subspan(child_begin_[v], child_count_[v]);
  }

  /// Vertices leaves-to-root: the reverse of the BFS visiting order, root last.
  std::span<const Vertex> order_leaves_first() const noexcept { return reverse_bfs_; }
  std::span<const Vertex> bfs_order() const noexcept { return bfs_; }

  std::size_t depth_count() const noexcept { return level_begin_.size() - 1; }
  /// Vertices at distance `depth` from the root.
  std::span<const Vertex> level(std::size_t depth) const noexcept {
    return std::span<const Vertex>(bfs_).subspan(level_begin_[depth],
                                                 level_begin_[depth + 1] - level_begin_[depth]);
  }

 private:
  friend RootedTree root_tree(const Graph& g, Vertex root);

  Vertex root_ = 0;
  std::vector<Vertex> parent_;
  std::vector<EdgeId> parent_edge_;
  std::vector<std::size_t> child_begin_;
  std::vector<Vertex> child_count_;
  std::vector<Vertex> bfs_;
  std::vector<Vertex> reverse_bfs_;
  std::vector<std::size_t> level_begin_;
};

/// Throws Error{NotATree} unless g is connected with |E| = n - 1 and n >= 1,
/// Error{BadRoot} if root is not a vertex.
RootedTree root_tree(const Graph& g, Vertex root);

enum class VertexType : std::uint8_t { One = 1, Two = 2 };

/// Which of the three disjoint cases attains rho at a vertex: the vertex is a
/// star center, a star leaf, or untouched by the packing.
enum class Branch : std::uint8_t { Center, Leaf, Free };

/// Optimal packing sizes inside the subtree T_v of a vertex v.
struct DpRecord {
  std::int32_t rho = 0;         // any EOP set of T_v
  std::int32_t rho_c = 0;       // v is the center of a star of T_v[S]
  std::int32_t rho_ell = 0;     // v is a leaf of a star of T_v[S]
  std::int32_t rho_prime = 0;   // v is not incident with S
  std::int32_t rho_dprime = 0;  // neither v nor any child of v is incident with S
  VertexType type = VertexType::One;
  Branch best = Branch::Free;
  Vertex leaf_center = kNoVertex;     // child chosen as star center for rho_ell
  Vertex lone_star_leaf = kNoVertex;  // u* when every child is of Type 2

  friend bool operator==(const DpRecord&, const DpRecord&) = default;
};

/// Bottom-up sweep over order_leaves_first(); records are indexed by vertex.
std::vector<DpRecord> dp_pass(const RootedTree& t);

/// Same records, computed level by level from the deepest level up with the
/// vertices of one level processed in parallel.
std::vector<DpRecord> dp_pass_parallel(const RootedTree& t);

/// Top-down expansion of the root's optimal case into a maximum EOP set
/// (edge ids of the graph t was rooted from).
EopSet reconstruct(const RootedTree& t, std::span<const DpRecord> records);

/// EOP number of a tree, rooted at vertex 0. Linear time.
std::int32_t tree_eop_number(const Graph& g);

/// A maximum EOP set of a tree, rooted at vertex 0.
EopSet tree_eop_set(const Graph& g);

}  // namespace eop
