#include <benchmark/benchmark.h>

#include <random>

#include "ordercraft/exact_search.hpp"
#include "ordercraft/family.hpp"
#include "ordercraft/rand_util.hpp"

using namespace ordercraft;

namespace {

Graph random_graph(std::uint64_t seed, int n, int density_pct) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (rand_int(rng, 0, 99) < density_pct) edges.emplace_back(a, b);
  return Graph::build(n, edges);
}

}  // namespace

static void BM_SubsetDpFill(benchmark::State& state) {
  Graph g = random_graph(99, static_cast<int>(state.range(0)), 30);
  for (auto _ : state) {
    ExactResult r = min_fill_exact(g);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_SubsetDpFill)->Arg(12)->Arg(16)->Arg(18)->Unit(benchmark::kMillisecond);

static void BM_SubsetDpFlopsFamily(benchmark::State& state) {
  Graph g = build_family({4, 4, 4});
  for (auto _ : state) {
    ExactResult r = min_flops_exact(g);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_SubsetDpFlopsFamily)->Unit(benchmark::kMillisecond);

static void BM_TriangulationCensus(benchmark::State& state) {
  Graph g = build_family({4, 4, 4});
  for (auto _ : state) {
    auto classes = enumerate_minimal_triangulations(g, static_cast<int>(state.range(0)), 7);
    benchmark::DoNotOptimize(classes.size());
  }
}
BENCHMARK(BM_TriangulationCensus)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
