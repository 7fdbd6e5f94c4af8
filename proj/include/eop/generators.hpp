#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "eop/graph.hpp"

namespace eop {

using Rng = std::mt19937_64;

Graph path_graph(Vertex n);
Graph cycle_graph(Vertex n);
Graph complete_graph(Vertex n);
/// K_n minus the edge {0, 1}.
Graph complete_minus_edge(Vertex n);
/// K_{1,t} with center 0.
Graph star_graph(Vertex t);
/// K_{a,b}; vertices 0..a-1 on one side.
Graph complete_bipartite(Vertex a, Vertex b);
Graph petersen_graph();
/// Vertex-disjoint union; b's vertices are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Tree on seq.size() + 2 vertices encoded by a Pruefer sequence over
/// 0..seq.size()+1. Linear time.
Graph decode_pruefer(std::span<const Vertex> seq);

/// Uniformly random labeled tree on n >= 1 vertices.
Graph random_tree(Vertex n, Rng& rng);

/// Calls fn on every labeled tree on n >= 1 vertices (n^(n-2) of them).
void for_each_labeled_tree(Vertex n, const std::function<void(const Graph&)>& fn);

/// Erdos-Renyi G(n, p).
Graph random_graph(Vertex n, double p, Rng& rng);

/// Calls fn on every graph whose edge set is a subset of E(K_n), isomorphic
/// copies included (2^(n(n-1)/2) graphs).
void for_each_graph(Vertex n, const std::function<void(const Graph&)>& fn);

}  // namespace eop
