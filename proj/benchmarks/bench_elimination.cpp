#include <benchmark/benchmark.h>

#include <random>

#include "ordercraft/elimination.hpp"
#include "ordercraft/family.hpp"
#include "ordercraft/heuristics.hpp"
#include "ordercraft/rand_util.hpp"

using namespace ordercraft;

namespace {

Graph grid(int rows, int cols) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  return Graph::build(rows * cols, edges);
}

}  // namespace

static void BM_EliminateFamily(benchmark::State& state) {
  long long s = state.range(0);
  FamilyParams p{s, s, s};
  Graph g = build_family(p);
  Ordering alpha = ordering_T1(p);
  for (auto _ : state) {
    auto res = eliminate(g, alpha);
    benchmark::DoNotOptimize(res.degrees.degs.data());
  }
}
BENCHMARK(BM_EliminateFamily)->Arg(8)->Arg(16)->Arg(32);

static void BM_EliminateGridMinDegree(benchmark::State& state) {
  int side = static_cast<int>(state.range(0));
  Graph g = grid(side, side);
  for (auto _ : state) {
    Ordering alpha = min_degree_order(g);
    auto res = eliminate(g, alpha);
    benchmark::DoNotOptimize(res.degrees.degs.data());
  }
}
BENCHMARK(BM_EliminateGridMinDegree)->Arg(8)->Arg(16)->Arg(24);

static void BM_MinDeficiencyGrid(benchmark::State& state) {
  int side = static_cast<int>(state.range(0));
  Graph g = grid(side, side);
  for (auto _ : state) {
    Ordering alpha = min_deficiency_order(g);
    benchmark::DoNotOptimize(alpha.sequence().data());
  }
}
BENCHMARK(BM_MinDeficiencyGrid)->Arg(8)->Arg(12)->Arg(16);

static void BM_FindPeo(benchmark::State& state) {
  int side = static_cast<int>(state.range(0));
  Graph g = grid(side, side);
  Graph chordal = g.with_edges(
      eliminate(g, min_degree_order(g)).triangulation.fill);
  for (auto _ : state) {
    auto peo = find_peo(chordal);
    benchmark::DoNotOptimize(peo);
  }
}
BENCHMARK(BM_FindPeo)->Arg(8)->Arg(16);
