#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "ordercraft/arrangement.hpp"
#include "ordercraft/rand_util.hpp"

using namespace ordercraft;

static void BM_QuadraticCostPadded(benchmark::State& state) {
  // cost evaluation is linear in edges even when the padding dominates
  Graph g = Graph::build(3, {{0, 1}, {1, 2}, {0, 2}});
  MaxCutReduction inst = maxcut_to_oqa(g, Int128(2), {}, Int128(state.range(0)));
  Ordering alpha = cut_to_arrangement(inst, {0});
  for (auto _ : state) {
    Int128 q = quadratic_cost(inst.padded, alpha, inst.c);
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(BM_QuadraticCostPadded)->Arg(243)->Arg(100000)->Arg(1000000);

static void BM_NormalizeArrangement(benchmark::State& state) {
  Graph g = Graph::build(3, {{0, 1}, {1, 2}});
  MaxCutReduction inst = maxcut_to_oqa(g, Int128(1), {}, Int128(state.range(0)));
  std::mt19937_64 rng(17);
  std::vector<Vertex> seq(static_cast<std::size_t>(inst.padded.vertex_count()));
  std::iota(seq.begin(), seq.end(), 0);
  fisher_yates(rng, seq);
  Ordering alpha = Ordering::from_sequence(seq);
  for (auto _ : state) {
    NormalizeResult res = normalize_arrangement(inst.padded, 3, alpha, inst.c);
    benchmark::DoNotOptimize(res.q_final);
  }
}
BENCHMARK(BM_NormalizeArrangement)->Arg(243)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_MaxCutExact(benchmark::State& state) {
  std::mt19937_64 rng(23);
  int n = static_cast<int>(state.range(0));
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (rand_int(rng, 0, 99) < 40) edges.emplace_back(a, b);
  Graph g = Graph::build(n, edges);
  for (auto _ : state) {
    MaxCutResult r = max_cut_exact(g);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_MaxCutExact)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
