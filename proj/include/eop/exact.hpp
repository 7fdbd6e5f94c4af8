#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "eop/graph.hpp"

namespace eop {

struct SolverOptions {
  /// Search nodes allowed before the solver gives up with
  /// Error{BudgetExceeded}.
  std::uint64_t node_budget = 100'000'000;
};

template <class Witness>
struct SolveResult {
  std::int64_t value = 0;
  Witness witness{};
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// Witness is a sorted vertex list.
using MisResult = SolveResult<std::vector<Vertex>>;
/// Witness holds edge ids of the input graph.
using EdgeSetResult = SolveResult<EopSet>;

/// Exact independence number by branch and bound: degree-0/1 vertices are
/// taken greedily, connected components are solved separately, and the search
/// branches on a vertex of maximum residual degree (smallest id on ties). The
/// bound is the residual vertex count. Deterministic.
MisResult max_independent_set(const Graph& g, const SolverOptions& options = {});

/// Exact EOP number: independence number of the conflict graph.
EdgeSetResult eop_number_exact(const Graph& g, const SolverOptions& options = {});

/// Exact induced matching number: independence number of the distance-two
/// edge graph.
EdgeSetResult induced_matching_number(const Graph& g, const SolverOptions& options = {});

bool is_independent_set(const Graph& g, const std::vector<Vertex>& set);

}  // namespace eop
