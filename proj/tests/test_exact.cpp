#include <gtest/gtest.h>

#include "eop/error.hpp"
#include "eop/exact.hpp"
#include "eop/generators.hpp"
#include "oracle.hpp"

using namespace eop;

TEST(Mis, KnownValues) {
  EXPECT_EQ(max_independent_set(cycle_graph(5)).value, 2);
  EXPECT_EQ(max_independent_set(complete_graph(6)).value, 1);
  EXPECT_EQ(max_independent_set(complete_graph(1)).value, 1);
  EXPECT_EQ(max_independent_set(petersen_graph()).value, 4);
  EXPECT_EQ(max_independent_set(Graph{}).value, 0);
  EXPECT_EQ(max_independent_set(Graph(5, {})).value, 5);
}

TEST(Mis, MatchesOracleAndWitnessIsIndependent) {
  Rng rng(41);
  for (int round = 0; round < 150; ++round) {
    const Graph g = random_graph(3 + round % 12, 0.4, rng);
    const MisResult r = max_independent_set(g);
    EXPECT_EQ(r.value, oracle::independence_number(g));
    EXPECT_EQ(static_cast<std::int64_t>(r.witness.size()), r.value);
    EXPECT_TRUE(is_independent_set(g, r.witness));
  }
}

TEST(Mis, WideGraphUsesDynamicSets) {
  // 40 disjoint triangles: 120 vertices, past the single-word representation.
  Graph g = complete_graph(3);
  for (int i = 1; i < 40; ++i) g = disjoint_union(g, complete_graph(3));
  const MisResult r = max_independent_set(g);
  EXPECT_EQ(r.value, 40);
  EXPECT_TRUE(is_independent_set(g, r.witness));
}

TEST(Mis, BudgetExceededThrows) {
  Rng rng(43);
  const Graph g = random_graph(60, 0.3, rng);
  try {
    max_independent_set(g, SolverOptions{5});
    FAIL() << "expected budget error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
}

TEST(Eop, KnownValues) {
  EXPECT_EQ(eop_number_exact(cycle_graph(10)).value, 4);
  for (Vertex n = 2; n <= 7; ++n) EXPECT_EQ(eop_number_exact(complete_graph(n)).value, 1);
  for (Vertex n = 3; n <= 7; ++n) EXPECT_EQ(eop_number_exact(complete_minus_edge(n)).value, 2);
  EXPECT_EQ(eop_number_exact(star_graph(7)).value, 7);
  EXPECT_EQ(eop_number_exact(path_graph(4)).value, 2);
  EXPECT_EQ(eop_number_exact(Graph(3, {})).value, 0);
}

TEST(Eop, PetersenMatchesOracle) {
  const Graph g = petersen_graph();
  EXPECT_EQ(eop_number_exact(g).value, oracle::eop_number(g));
}

TEST(Eop, MatchesOracleOnRandomGraphs) {
  Rng rng(47);
  for (int round = 0; round < 200; ++round) {
    const Graph g = random_graph(3 + round % 7, 0.25 + 0.05 * (round % 10), rng);
    const EdgeSetResult r = eop_number_exact(g);
    EXPECT_EQ(r.value, oracle::eop_number(g));
    EXPECT_TRUE(is_eop_set(g, r.witness));
    EXPECT_EQ(static_cast<std::int64_t>(r.witness.size()), r.value);
  }
}

TEST(InducedMatching, KnownValues) {
  EXPECT_EQ(induced_matching_number(path_graph(4)).value, 1);
  EXPECT_EQ(induced_matching_number(path_graph(5)).value, 2);
  for (Vertex t = 1; t <= 5; ++t) EXPECT_EQ(induced_matching_number(star_graph(t)).value, 1);
}

TEST(InducedMatching, MatchesOracleAndBoundsEop) {
  Rng rng(53);
  for (int round = 0; round < 150; ++round) {
    const Graph g = random_graph(4 + round % 6, 0.4, rng);
    const EdgeSetResult im = induced_matching_number(g);
    EXPECT_EQ(im.value, oracle::induced_matching_number(g));
    // An induced matching is itself an EOP set.
    EXPECT_TRUE(is_eop_set(g, im.witness));
    EXPECT_LE(im.value, eop_number_exact(g).value);
  }
}
