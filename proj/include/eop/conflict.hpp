#pragma once

#include "eop/graph.hpp"

namespace eop {

/// One vertex per edge of g (vertex i is g.edge(i)); i and j adjacent iff the
/// two edges have a common edge. EOP sets of g are exactly the independent
/// sets of this graph. Rows are built in parallel with OpenMP.
Graph conflict_graph(const Graph& g);

/// Same graph, built by testing common_edge on every pair of edges. Quadratic
/// in |E|; kept as the reference for the parallel kernel.
Graph conflict_graph_reference(const Graph& g);

/// Edges i and j adjacent iff they share an endpoint or some edge joins them.
/// Independent sets here are the induced matchings of g.
Graph distance_two_edge_graph(const Graph& g);

}  // namespace eop
