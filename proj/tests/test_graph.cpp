#include <gtest/gtest.h>

#include <random>

#include "eop/error.hpp"
#include "eop/generators.hpp"
#include "eop/graph.hpp"
#include "oracle.hpp"

using namespace eop;

namespace {

Graph p4() { return path_graph(4); }

EdgeId id_of(const Graph& g, Vertex a, Vertex b) { return *g.find_edge(a, b); }

}  // namespace

TEST(Graph, BuildsSortedAdjacency) {
  const Graph g(4, {{2, 0}, {0, 1}, {3, 0}});
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 3);
  const auto nb = g.neighbors(0);
  ASSERT_EQ(nb.size(), 3u);
  EXPECT_EQ(nb[0], 1);
  EXPECT_EQ(nb[1], 2);
  EXPECT_EQ(nb[2], 3);
  for (std::size_t k = 0; k < nb.size(); ++k) {
    const Edge e = g.edge(g.incident_edges(0)[k]);
    EXPECT_TRUE((e.u == 0 && e.v == nb[k]) || (e.v == 0 && e.u == nb[k]));
  }
  EXPECT_EQ(g.degree(0), 3);
  EXPECT_EQ(g.min_degree(), 1);
  EXPECT_EQ(g.max_degree(), 3);
  EXPECT_TRUE(g.adjacent(3, 0));
  EXPECT_FALSE(g.adjacent(1, 2));
  EXPECT_FALSE(g.find_edge(1, 3).has_value());
}

TEST(Graph, RejectsMalformedInput) {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::OutOfRange;
  };
  EXPECT_EQ(kind_of([] { Graph(2, {{0, 0}}); }), ErrorKind::InvalidGraph);
  EXPECT_EQ(kind_of([] { Graph(2, {{0, 1}, {1, 0}}); }), ErrorKind::InvalidGraph);
  EXPECT_EQ(kind_of([] { Graph(2, {{0, 2}}); }), ErrorKind::InvalidGraph);
  EXPECT_EQ(kind_of([] { Graph(-1, {}); }), ErrorKind::InvalidGraph);
}

TEST(Graph, NullAndEdgelessGraphs) {
  const Graph null;
  EXPECT_EQ(null.order(), 0);
  EXPECT_EQ(null.size(), 0);
  const Graph three(3, {});
  EXPECT_EQ(three.min_degree(), 0);
  EXPECT_EQ(three.max_degree(), 0);
}

TEST(Graph, RemoveEdgeKeepsVertices) {
  const Graph g = complete_graph(4);
  const Graph h = remove_edge(g, id_of(g, 1, 2));
  EXPECT_EQ(h.order(), 4);
  EXPECT_EQ(h.size(), 5);
  EXPECT_FALSE(h.adjacent(1, 2));
  EXPECT_TRUE(h.adjacent(0, 3));
}

TEST(EopSetType, SortsAndDeduplicates) {
  const EopSet s({4, 1, 4, 2});
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s.ids()[0], 1);
  EXPECT_EQ(s.ids()[2], 4);
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(3));
}

TEST(CommonEdge, MiddleEdgeOfPath) {
  const Graph g = p4();
  const auto c = common_edge(g, Edge{0, 1}, Edge{2, 3});
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, (Edge{1, 2}));
}

TEST(CommonEdge, StarEdgesNeverConflict) {
  const Graph g = star_graph(3);
  EXPECT_FALSE(common_edge(g, Edge{0, 1}, Edge{0, 2}).has_value());
}

TEST(CommonEdge, TriangleThirdEdge) {
  const Graph g = complete_graph(3);
  const auto c = common_edge(g, id_of(g, 0, 1), id_of(g, 1, 2));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(g.edge(*c), (Edge{0, 2}));
}

TEST(CommonEdge, RejectsNonEdgesAndEqualEdges) {
  const Graph g = p4();
  EXPECT_THROW(common_edge(g, Edge{0, 2}, Edge{2, 3}), Error);
  EXPECT_THROW(common_edge(g, Edge{0, 1}, Edge{0, 1}), Error);
}

TEST(CommonEdge, MatchesOracleOnRandomGraphs) {
  Rng rng(11);
  for (int round = 0; round < 60; ++round) {
    const Graph g = random_graph(7, 0.45, rng);
    const oracle::Matrix m(g);
    for (EdgeId i = 0; i < g.size(); ++i) {
      for (EdgeId j = 0; j < g.size(); ++j) {
        if (i == j) continue;
        EXPECT_EQ(common_edge(g, i, j).has_value(),
                  oracle::have_common_edge(m, g.edge(i), g.edge(j)));
      }
    }
  }
}

TEST(Verifier, OppositeEdgesOfC4Conflict) {
  const Graph g = cycle_graph(4);
  const EopSet b({id_of(g, 0, 1), id_of(g, 2, 3)});
  EXPECT_FALSE(is_eop_set(g, b));
  const auto c = find_conflict(g, b);
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(c->common == (Edge{1, 2}) || c->common == (Edge{0, 3}));
}

TEST(Verifier, SmallCases) {
  const Graph star = star_graph(3);
  EXPECT_TRUE(is_eop_set(star, EopSet({0, 1, 2})));
  EXPECT_TRUE(is_eop_set(p4(), EopSet({1})));
  EXPECT_TRUE(is_eop_set(p4(), EopSet{}));
}

TEST(Verifier, MatchesPairwiseOracleOnRandomSubsets) {
  Rng rng(5);
  std::bernoulli_distribution coin(0.35);
  for (int round = 0; round < 400; ++round) {
    const Graph g = random_graph(8, 0.4, rng);
    std::vector<EdgeId> ids;
    std::vector<Edge> edges;
    for (EdgeId i = 0; i < g.size(); ++i) {
      if (coin(rng)) {
        ids.push_back(i);
        edges.push_back(g.edge(i));
      }
    }
    EXPECT_EQ(is_eop_set(g, EopSet(ids)), oracle::is_eop_set(g, edges));
  }
}

TEST(InducedSubgraph, EdgeSets) {
  EXPECT_EQ(induced_subgraph_by_edges(p4(), EopSet{}).graph.order(), 0);
  const auto one = induced_subgraph_by_edges(p4(), EopSet({0}));
  EXPECT_EQ(one.graph.order(), 2);
  EXPECT_EQ(one.graph.size(), 1);
  const Graph c4 = cycle_graph(4);
  const auto two = induced_subgraph_by_edges(c4, EopSet({id_of(c4, 0, 1), id_of(c4, 1, 2)}));
  EXPECT_EQ(two.graph.order(), 3);
  EXPECT_EQ(two.graph.size(), 2);
  EXPECT_EQ(two.original, (std::vector<Vertex>{0, 1, 2}));
}

TEST(StarForest, Recognition) {
  EXPECT_TRUE(is_star_forest(star_graph(5)));
  EXPECT_FALSE(is_star_forest(p4()));
  EXPECT_TRUE(is_star_forest(disjoint_union(path_graph(3), path_graph(2))));
  EXPECT_FALSE(is_star_forest(complete_graph(3)));
}

TEST(StarForest, InducedGraphOfEopSetIsStarForest) {
  Rng rng(17);
  std::bernoulli_distribution coin(0.3);
  int checked = 0;
  for (int round = 0; round < 500; ++round) {
    const Graph g = random_graph(8, 0.4, rng);
    std::vector<EdgeId> ids;
    for (EdgeId i = 0; i < g.size(); ++i) {
      if (coin(rng)) ids.push_back(i);
    }
    const EopSet b(ids);
    if (!is_eop_set(g, b)) continue;
    ++checked;
    EXPECT_TRUE(is_star_forest(induced_subgraph_by_edges(g, b).graph));
  }
  EXPECT_GT(checked, 50);
}
