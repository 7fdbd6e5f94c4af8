// Serial reference vs OpenMP kernel for the three parallel paths.

#include <benchmark/benchmark.h>

#include <map>

#include "eop/bounds.hpp"
#include "eop/conflict.hpp"
#include "eop/generators.hpp"
#include "eop/tree.hpp"

namespace {

using namespace eop;

const RootedTree& tree_of(Vertex n) {
  static std::map<Vertex, RootedTree> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    Rng rng(static_cast<std::uint64_t>(n));
    it = cache.emplace(n, root_tree(random_tree(n, rng), 0)).first;
  }
  return it->second;
}

// Spider with wide levels, so the per-level loop actually splits.
const RootedTree& spider_of(Vertex arms) {
  static std::map<Vertex, RootedTree> cache;
  auto it = cache.find(arms);
  if (it == cache.end()) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < arms; ++i) {
      for (Vertex d = 0; d < 4; ++d) {
        const Vertex from = d == 0 ? 0 : 1 + 4 * i + d - 1;
        edges.push_back({from, 1 + 4 * i + d});
      }
    }
    it = cache.emplace(arms, root_tree(Graph(4 * arms + 1, std::move(edges)), 0)).first;
  }
  return it->second;
}

Graph dense_graph(Vertex n) {
  Rng rng(static_cast<std::uint64_t>(n) * 7);
  return random_graph(n, 0.1, rng);
}

void BM_TreeDpSerial(benchmark::State& state) {
  const RootedTree& t = tree_of(static_cast<Vertex>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dp_pass(t));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_TreeDpParallel(benchmark::State& state) {
  const RootedTree& t = tree_of(static_cast<Vertex>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dp_pass_parallel(t));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SpiderDpSerial(benchmark::State& state) {
  const RootedTree& t = spider_of(static_cast<Vertex>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dp_pass(t));
}

void BM_SpiderDpParallel(benchmark::State& state) {
  const RootedTree& t = spider_of(static_cast<Vertex>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dp_pass_parallel(t));
}

void BM_ConflictReference(benchmark::State& state) {
  const Graph g = dense_graph(static_cast<Vertex>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(conflict_graph_reference(g));
  state.counters["edges"] = g.size();
}

void BM_ConflictParallel(benchmark::State& state) {
  const Graph g = dense_graph(static_cast<Vertex>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(conflict_graph(g));
  state.counters["edges"] = g.size();
}

Graph removal_input() {
  Rng rng(5);
  return random_graph(14, 0.45, rng);
}

void BM_RemovalSerial(benchmark::State& state) {
  const Graph g = removal_input();
  for (auto _ : state) benchmark::DoNotOptimize(edge_removal_profile_serial(g));
}

void BM_RemovalParallel(benchmark::State& state) {
  const Graph g = removal_input();
  for (auto _ : state) benchmark::DoNotOptimize(edge_removal_profile(g));
}

}  // namespace

BENCHMARK(BM_TreeDpSerial)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TreeDpParallel)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpiderDpSerial)->Arg(250000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpiderDpParallel)->Arg(250000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConflictReference)->Arg(150)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConflictParallel)->Arg(150)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RemovalSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RemovalParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
