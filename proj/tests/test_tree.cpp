#include <gtest/gtest.h>

#include <algorithm>

#include "eop/error.hpp"
#include "eop/exact.hpp"
#include "eop/generators.hpp"
#include "eop/tree.hpp"
#include "oracle.hpp"

using namespace eop;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::OutOfRange;
}

}  // namespace

TEST(RootedTreeShape, SmallTrees) {
  const RootedTree k2 = root_tree(path_graph(2), 0);
  ASSERT_EQ(k2.children(0).size(), 1u);
  EXPECT_EQ(k2.children(0)[0], 1);
  EXPECT_EQ(k2.order_leaves_first()[0], 1);
  EXPECT_EQ(k2.order_leaves_first()[1], 0);
  EXPECT_EQ(k2.parent(1), std::optional<Vertex>(0));
  EXPECT_FALSE(k2.parent(0).has_value());

  const RootedTree p3 = root_tree(path_graph(3), 1);
  const auto ch = p3.children(1);
  EXPECT_EQ(std::vector<Vertex>(ch.begin(), ch.end()), (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(p3.depth_count(), 2u);

  const RootedTree one = root_tree(complete_graph(1), 0);
  EXPECT_EQ(one.order(), 1);
  EXPECT_TRUE(one.children(0).empty());
}

TEST(RootedTreeShape, RejectsNonTrees) {
  EXPECT_EQ(kind_of([] { root_tree(cycle_graph(4), 0); }), ErrorKind::NotATree);
  EXPECT_EQ(kind_of([] { root_tree(disjoint_union(path_graph(3), complete_graph(3)), 0); }),
            ErrorKind::NotATree);
  EXPECT_EQ(kind_of([] { root_tree(Graph(2, {}), 0); }), ErrorKind::NotATree);
  EXPECT_EQ(kind_of([] { root_tree(path_graph(3), 3); }), ErrorKind::BadRoot);
  EXPECT_EQ(kind_of([] { root_tree(Graph{}, 0); }), ErrorKind::NotATree);
}

TEST(TreeDp, StarCenter) {
  for (Vertex t = 1; t <= 8; ++t) {
    const DpRecord r = dp_pass(root_tree(star_graph(t), 0))[0];
    EXPECT_EQ(r.rho_c, t);
    EXPECT_EQ(r.rho_ell, 1);
    EXPECT_EQ(r.rho_prime, 0);
    EXPECT_EQ(r.rho_dprime, 0);
    EXPECT_EQ(r.rho, t);
  }
}

TEST(TreeDp, KnownNumbers) {
  EXPECT_EQ(tree_eop_number(star_graph(7)), 7);
  EXPECT_EQ(tree_eop_number(path_graph(2)), 1);
  EXPECT_EQ(tree_eop_number(complete_graph(1)), 0);
  EXPECT_EQ(tree_eop_number(path_graph(4)), 2);
}

TEST(TreeDp, WitnessSets) {
  EXPECT_EQ(tree_eop_set(star_graph(3)).size(), 3u);
  EXPECT_TRUE(tree_eop_set(complete_graph(1)).empty());
  const Graph p4 = path_graph(4);
  const EopSet s = tree_eop_set(p4);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_TRUE(is_eop_set(p4, s));
}

TEST(TreeDp, AllTreesUpToSevenMatchOracleFromEveryRoot) {
  for (Vertex n = 1; n <= 7; ++n) {
    for_each_labeled_tree(n, [&](const Graph& g) {
      const std::int64_t want = oracle::eop_number(g);
      for (Vertex root = 0; root < n; ++root) {
        const RootedTree t = root_tree(g, root);
        const auto recs = dp_pass(t);
        ASSERT_EQ(recs[static_cast<std::size_t>(root)].rho, want);
        const EopSet s = reconstruct(t, recs);
        ASSERT_EQ(static_cast<std::int64_t>(s.size()), want);
        ASSERT_TRUE(is_eop_set(g, s));
      }
    });
  }
}

TEST(TreeDp, RecordInvariants) {
  Rng rng(61);
  for (int round = 0; round < 300; ++round) {
    const Graph g = random_tree(1 + round % 40, rng);
    for (const DpRecord& r : dp_pass(root_tree(g, 0))) {
      EXPECT_GE(r.rho_prime, r.rho_dprime);
      EXPECT_EQ(r.rho, std::max({r.rho_c, r.rho_ell, r.rho_prime}));
    }
  }
}

TEST(TreeDp, ParallelPassMatchesSerial) {
  Rng rng(67);
  for (Vertex n : {1, 2, 50, 20000, 200000}) {
    const Graph g = random_tree(n, rng);
    const RootedTree t = root_tree(g, 0);
    EXPECT_EQ(dp_pass(t), dp_pass_parallel(t)) << "n = " << n;
  }
  // Wide levels: a star of paths exercises the parallel branch.
  std::vector<Edge> edges;
  const Vertex arms = 10000;
  for (Vertex i = 0; i < arms; ++i) {
    edges.push_back({0, 1 + 2 * i});
    edges.push_back({1 + 2 * i, 2 + 2 * i});
  }
  const RootedTree spider = root_tree(Graph(2 * arms + 1, edges), 0);
  EXPECT_EQ(dp_pass(spider), dp_pass_parallel(spider));
}

TEST(TreeDp, LargeRandomTreeWitnessValid) {
  Rng rng(71);
  const Graph g = random_tree(100000, rng);
  const RootedTree t = root_tree(g, 0);
  const auto recs = dp_pass(t);
  const EopSet s = reconstruct(t, recs);
  EXPECT_EQ(static_cast<std::int32_t>(s.size()), recs[0].rho);
  EXPECT_TRUE(is_eop_set(g, s));
}

TEST(TreeDp, AgreesWithExactSolverOnMidSizeTrees) {
  Rng rng(73);
  for (int round = 0; round < 200; ++round) {
    const Graph g = random_tree(10 + round % 21, rng);
    EXPECT_EQ(tree_eop_number(g), eop_number_exact(g).value);
  }
}
