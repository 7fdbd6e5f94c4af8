#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "eop/graph.hpp"

namespace eop {

struct Components {
  std::size_t count = 0;
  std::vector<Vertex> label;  // component index per vertex, in order of smallest member
};

Components connected_components(const Graph& g);

/// False for the null graph.
bool is_connected(const Graph& g);

/// Side (0 or 1) per vertex with the smallest vertex of each component on
/// side 0; nullopt when g has an odd cycle.
std::optional<std::vector<int>> bipartition(const Graph& g);

/// nullopt stands for an infinite diameter (disconnected or null graph).
std::optional<Vertex> diameter(const Graph& g);

/// No induced K_{1,3}.
bool is_claw_free(const Graph& g);

bool is_complete(const Graph& g);

struct StructuralReport {
  bool connected = false;
  std::optional<std::vector<int>> bipartition;
  bool tree = false;
  bool eulerian = false;             // connected and every degree even
  std::optional<Vertex> diameter;    // nullopt = infinite
  bool claw_free = false;
  Vertex min_degree = 0;
  Vertex max_degree = 0;

  bool bipartite() const noexcept { return bipartition.has_value(); }
};

StructuralReport structural_predicates(const Graph& g);

}  // namespace eop
