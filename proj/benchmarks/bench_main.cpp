#include <benchmark/benchmark.h>

#include <vector>

#include "k4tri/atlas.hpp"
#include "k4tri/base_case.hpp"
#include "k4tri/canonical.hpp"
#include "k4tri/graph.hpp"
#include "k4tri/packing.hpp"
#include "k4tri/partition.hpp"
#include "k4tri/random_graph.hpp"

using namespace k4tri;

static void BM_TriangleCount(benchmark::State& state) {
  const Graph g = random_k4free(static_cast<int>(state.range(0)), 0.5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(triangle_count(g));
}
BENCHMARK(BM_TriangleCount)->Arg(16)->Arg(36)->Arg(64);

static void BM_GreedyPartition(benchmark::State& state) {
  const Graph g = random_k4free(static_cast<int>(state.range(0)), 0.5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_partition(g));
}
BENCHMARK(BM_GreedyPartition)->Arg(16)->Arg(36)->Arg(64);

static void BM_PartitionStats(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const AtlasEntry entry = blow_up({BaseGraphId::kF1, {k, k, k}});
  for (auto _ : state) benchmark::DoNotOptimize(partition_stats(entry.graph, entry.partition));
}
BENCHMARK(BM_PartitionStats)->DenseRange(1, 4);

static void BM_CanonicalForm(benchmark::State& state) {
  const Graph g = random_k4free(static_cast<int>(state.range(0)), 0.4, 11);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(12)->Arg(16);

static void BM_ExactPacking(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Graph g = blow_up({BaseGraphId::kF1, {1, 1, k}}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(max_edge_disjoint_triangles(g));
}
BENCHMARK(BM_ExactPacking)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_PackingCertificate(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const AtlasEntry entry = blow_up({BaseGraphId::kF2, {k, k, k}});
  const PartitionStats s = partition_stats(entry.graph, entry.partition);
  for (auto _ : state) {
    benchmark::DoNotOptimize(packing_at_least(entry.graph, conjecture_te_target(s)));
  }
}
BENCHMARK(BM_PackingCertificate)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_BaseCase(benchmark::State& state) {
  const BaseCaseSpec spec = kBaseCases[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_base_case(spec));
  state.SetLabel(spec.label());
}
BENCHMARK(BM_BaseCase)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
