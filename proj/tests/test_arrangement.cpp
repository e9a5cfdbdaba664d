#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "ordercraft/arrangement.hpp"
#include "ordercraft/errors.hpp"
#include "ordercraft/rand_util.hpp"

using namespace ordercraft;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, int density_pct) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (rand_int(rng, 0, 99) < density_pct) edges.emplace_back(a, b);
  return Graph::build(n, edges);
}

Ordering random_ordering(std::mt19937_64& rng, int n) {
  std::vector<Vertex> seq(static_cast<std::size_t>(n));
  std::iota(seq.begin(), seq.end(), 0);
  fisher_yates(rng, seq);
  return Ordering::from_sequence(std::move(seq));
}

// Exhaustive linear-arrangement minimum; only used as a test oracle.
Int128 ola_exact_min(const Graph& g) {
  std::vector<Vertex> seq(static_cast<std::size_t>(g.vertex_count()));
  std::iota(seq.begin(), seq.end(), 0);
  bool first = true;
  Int128 best(0);
  do {
    Int128 v = linear_cost(g, Ordering::from_sequence(seq));
    if (first || v < best) {
      best = v;
      first = false;
    }
  } while (std::next_permutation(seq.begin(), seq.end()));
  return best;
}

}  // namespace

TEST_CASE("linear cost") {
  CHECK(linear_cost(clique(3), Ordering::identity(3)) == Int128(4));
  Graph p3 = Graph::build(3, {{0, 1}, {1, 2}});
  CHECK(linear_cost(p3, Ordering::identity(3)) == Int128(2));

  std::mt19937_64 rng(101);
  for (int it = 0; it < 30; ++it) {
    Graph g = random_graph(rng, static_cast<int>(rand_int(rng, 1, 8)), 50);
    Ordering a = random_ordering(rng, g.vertex_count());
    CHECK(linear_cost(g, a.translated(static_cast<int>(rand_int(rng, 0, 9)))) ==
          linear_cost(g, a));
  }
}

TEST_CASE("quadratic cost") {
  CHECK(quadratic_cost(clique(3), Ordering::identity(3), {}) == Int128(16));
  Graph e1 = Graph::build(2, {{0, 1}});
  CHECK(quadratic_cost(e1, Ordering::identity(2), {}) == Int128(3));

  // the bundled four-vertex example: linear cost 5, quadratic cost 27
  Graph fig = Graph::build(4, {{0, 3}, {1, 2}, {2, 3}});
  CHECK(linear_cost(fig, Ordering::identity(4)) == Int128(5));
  CHECK(quadratic_cost(fig, Ordering::identity(4), {}) == Int128(27));
}

TEST_CASE("quadratic dominates linear at positive positions") {
  std::mt19937_64 rng(103);
  for (int it = 0; it < 40; ++it) {
    Graph g = random_graph(rng, static_cast<int>(rand_int(rng, 2, 8)), 60);
    Ordering a = random_ordering(rng, g.vertex_count());
    CostPolynomial c{0, 0, rand_int(rng, 0, 5)};
    CHECK(quadratic_cost(g, a, c) >= linear_cost(g, a));
  }
}

TEST_CASE("clique cost closed form") {
  CHECK(clique_cost(3, 0, Int128(0)) == Int128(16));
  CHECK(clique_cost(1, 7, Int128(9)) == Int128(0));
  std::mt19937_64 rng(107);
  for (long long s = 1; s <= 12; ++s)
    for (long long r = 0; r <= 5; ++r)
      for (long long cv : {0LL, 1LL, 7LL}) {
        Ordering alpha = random_ordering(rng, static_cast<int>(s));
        Int128 direct = quadratic_cost(clique(static_cast<int>(s)),
                                       alpha.translated(static_cast<int>(r)),
                                       CostPolynomial{0, 0, cv});
        CHECK(direct == clique_cost(s, r, Int128(cv)));
      }
}

TEST_CASE("translation changes quadratic cost linearly") {
  std::mt19937_64 rng(109);
  for (int it = 0; it < 100; ++it) {
    Graph g = random_graph(rng, static_cast<int>(rand_int(rng, 1, 8)), 55);
    Ordering a = random_ordering(rng, g.vertex_count());
    long long r = rand_int(rng, 0, 10);
    CostPolynomial c{rand_int(rng, 0, 2), rand_int(rng, 0, 2), rand_int(rng, 0, 2)};
    CHECK(quadratic_cost(g, a.translated(static_cast<int>(r)), c) ==
          quadratic_cost(g, a, c) + Int128(2 * r) * linear_cost(g, a));
  }
}

TEST_CASE("duality against the complement") {
  std::mt19937_64 rng(113);
  for (int it = 0; it < 60; ++it) {
    int n = static_cast<int>(rand_int(rng, 1, 5));
    Graph g = random_graph(rng, n, static_cast<int>(rand_int(rng, 0, 100)));
    CostPolynomial c{0, 0, rand_int(rng, 0, 3)};
    Ordering a = random_ordering(rng, n);
    Int128 total = quadratic_cost(g, a, c) + quadratic_cost(complement(g), a, c);
    CHECK(total == clique_cost(n, 0, c.eval(Int128(n))));
  }
  // K5's complement is edgeless, so the identity pins the clique cost
  OqaInstance inst = duality_complement(clique(5), Int128(0), {});
  CHECK(inst.graph.edge_count() == 0);
  CHECK(inst.threshold == clique_cost(5, 0, Int128(0)));
}

TEST_CASE("cut profiles") {
  CHECK(cut_profile(independent(3), Ordering::identity(3)) ==
        std::vector<long long>{0, 0, 0});
  Graph e13 = Graph::build(3, {{0, 2}});
  CHECK(cut_profile(e13, Ordering::identity(3)) == std::vector<long long>{1, 1, 0});
  CHECK(cut_profile(cycle(4), Ordering::identity(4)) ==
        std::vector<long long>{2, 2, 2, 0});
}

TEST_CASE("move_iso_right checks and applies") {
  // one isolated vertex (3) plus a path 0-1-2 arranged naturally
  Graph g = Graph::build(4, {{0, 1}, {1, 2}});
  Ordering a = Ordering::from_sequence({3, 0, 1, 2});
  // cuts: [0,1,1,0]; moving 3 to index 2 satisfies the condition
  Ordering moved = move_iso_right(g, a, 3, 2);
  CHECK(moved.vertex_at_index(2) == 3);
  CHECK(moved.vertex_at_index(0) == 0);
  // zero-distance move is the identity
  CHECK(move_iso_right(g, a, 3, 0) == a);
  // moving to index 3 crosses a larger cut on the way: refused
  CHECK_THROWS_AS(move_iso_right(g, a, 3, 3), input_error);
  // non-isolated vertices are refused
  CHECK_THROWS_AS(move_iso_right(g, a, 1, 3), input_error);
  // leftward targets are refused
  Ordering b = Ordering::from_sequence({0, 1, 2, 3});
  CHECK_THROWS_AS(move_iso_right(g, b, 3, 1), input_error);
}

TEST_CASE("move_iso_right never decreases cost when the cuts allow it") {
  std::mt19937_64 rng(127);
  int done = 0;
  while (done < 60) {
    Graph core = random_graph(rng, static_cast<int>(rand_int(rng, 2, 6)), 60);
    Graph g = graph_sum(core, independent(static_cast<int>(rand_int(rng, 1, 3))));
    int n = g.vertex_count();
    Ordering a = random_ordering(rng, n);
    auto prof = cut_profile(g, a);
    bool used = false;
    for (Vertex w = core.vertex_count(); w < n && !used; ++w) {
      int iw = a.position(w) - a.base();
      for (int j = iw + 1; j < n && !used; ++j) {
        bool ok = true;
        for (int k = iw; k <= j; ++k)
          if (prof[static_cast<std::size_t>(k)] > prof[static_cast<std::size_t>(j)]) {
            ok = false;
            break;
          }
        if (!ok) continue;
        Ordering moved = move_iso_right(g, a, w, j);
        CostPolynomial c{0, 0, rand_int(rng, 0, 4)};
        CHECK(quadratic_cost(g, moved, c) >= quadratic_cost(g, a, c));
        used = true;
      }
    }
    if (used) ++done;
  }
}

TEST_CASE("move_block_left boundaries") {
  Graph g = graph_sum(cycle(3), independent(2));
  Ordering a = Ordering::from_sequence({0, 1, 2, 3, 4});
  // f = 0 is the identity regardless of the rest
  CHECK(move_block_left(g, a, 1, 1, 0, Int128(0)) == a);
  // cuts [2,2,0,0,0]: prefix 1 has no strict decrease afterwards
  CHECK_THROWS_AS(move_block_left(g, a, 1, 1, 2, Int128(0)), input_error);
  // j=2: cuts drop 2 -> 0 strictly; s=1 always satisfies the balance
  Ordering moved = move_block_left(g, a, 2, 1, 2, Int128(0));
  CHECK(moved.vertex_at_index(2) == 3);
  CHECK(moved.vertex_at_index(4) == 2);
  // block must be isolated
  Ordering b = Ordering::from_sequence({3, 4, 0, 1, 2});
  CHECK_THROWS_AS(move_block_left(g, b, 1, 1, 2, Int128(0)), input_error);
}

TEST_CASE("maxcut reduction instance") {
  Graph e1 = Graph::build(2, {{0, 1}});
  MaxCutReduction r2 = maxcut_to_oqa(e1, Int128(1));
  CHECK(r2.padded.vertex_count() == 34);
  CHECK(r2.threshold == Int128(1024));
  CHECK(maxcut_to_oqa(e1, Int128(0)).threshold == Int128(0));

  MaxCutReduction r3 = maxcut_to_oqa(cycle(3), Int128(2));
  CHECK(r3.padded.vertex_count() == 246);
  CHECK(r3.threshold == Int128(118098));
  CHECK(r3.padded.edge_count() == 3);

  CHECK_THROWS_AS(maxcut_to_oqa(independent(40), Int128(1)), size_limit_error);
}

TEST_CASE("cut arrangements clear the threshold per cut edge") {
  Graph e1 = Graph::build(2, {{0, 1}});
  MaxCutReduction inst = maxcut_to_oqa(e1, Int128(1));
  Ordering alpha = cut_to_arrangement(inst, {0});
  // the single cut edge spans positions 1 and 34: phi = 34^2 - 1 = 1155
  CHECK(quadratic_cost(inst.padded, alpha, {}) == Int128(1155));
  CHECK(quadratic_cost(inst.padded, alpha, {}) >= inst.threshold);

  CHECK(quadratic_cost(inst.padded, cut_to_arrangement(inst, {}), {}) >= Int128(0));

  MaxCutReduction tri = maxcut_to_oqa(cycle(3), Int128(2));
  Ordering beta = cut_to_arrangement(tri, {0});
  CHECK(quadratic_cost(tri.padded, beta, {}) >= Int128(2) * int128_pow(Int128(3), 10));

  CHECK_THROWS_AS(cut_to_arrangement(inst, {5}), input_error);
  CHECK_THROWS_AS(cut_to_arrangement(inst, {0, 0}), input_error);
}

TEST_CASE("normalization leaves blocked arrangements alone") {
  Graph g = graph_sum(cycle(3), independent(4));
  // already normalized: the padding sits right behind the largest cut
  Ordering a = Ordering::from_sequence({0, 1, 3, 4, 5, 6, 2});
  NormalizeResult res = normalize_arrangement(g, 3, a, {});
  CHECK(res.trace.empty());
  CHECK(res.q_final == res.q_initial);
  CHECK(res.blocks.padding.front() == 4);
}

TEST_CASE("normalization packs padding without losing cost") {
  // padding generous relative to the core, as in the canonical reduction
  std::mt19937_64 rng(131);
  for (int it = 0; it < 25; ++it) {
    Graph core = random_graph(rng, static_cast<int>(rand_int(rng, 1, 3)), 60);
    int pad = static_cast<int>(rand_int(rng, 32, 64));
    Graph g = graph_sum(core, independent(pad));
    Ordering a = random_ordering(rng, g.vertex_count());
    NormalizeResult res = normalize_arrangement(g, core.vertex_count(), a, {});
    CHECK(res.q_final >= res.q_initial);
    for (std::size_t k = 1; k < res.blocks.padding.size(); ++k)
      CHECK(res.blocks.padding[k] == 0);
    // strictly decreasing boundary cuts, ending at zero
    for (std::size_t k = 1; k < res.blocks.boundary_cuts.size(); ++k)
      CHECK(res.blocks.boundary_cuts[k] < res.blocks.boundary_cuts[k - 1]);
    CHECK(res.blocks.boundary_cuts.back() == 0);
  }
}

TEST_CASE("oqa brute force") {
  for (int n : {2, 3, 5}) {
    CostPolynomial c{0, 0, 1};
    OqaExactResult mn = oqa_exact(clique(n), c, Direction::minimize);
    OqaExactResult mx = oqa_exact(clique(n), c, Direction::maximize);
    CHECK(mn.value == clique_cost(n, 0, Int128(1)));
    CHECK(mx.value == mn.value);  // all orderings tie on a clique
  }
  CHECK(oqa_exact(independent(4), {}, Direction::minimize).value == Int128(0));
  CHECK_THROWS_AS(oqa_exact(independent(11), {}, Direction::minimize), size_limit_error);
}

TEST_CASE("antenna arrangement closed forms") {
  // clique of size n with two pendant vertices; the all-right pattern costs
  // n(n^2-1)(c+n+1)/6 + 8n + 4c + 4 and the split pattern n(n^2-1)/6 + 2
  // linearly, for every n and c
  for (int n : {5, 6, 9}) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    edges.emplace_back(0, n);      // antenna x - u
    edges.emplace_back(1, n + 1);  // antenna y - v
    Graph g = Graph::build(n + 2, edges);

    std::vector<Vertex> right;  // clique with v,u last, then x, then y
    for (Vertex w = 2; w < n; ++w) right.push_back(w);
    right.push_back(1);
    right.push_back(0);
    right.push_back(n);
    right.push_back(n + 1);
    std::vector<Vertex> split;  // x, u ... v, y
    split.push_back(n);
    split.push_back(0);
    for (Vertex w = 2; w < n; ++w) split.push_back(w);
    split.push_back(1);
    split.push_back(n + 1);

    CHECK(linear_cost(g, Ordering::from_sequence(split)) ==
          Int128(n) * Int128(n * n - 1) / Int128(6) + Int128(2));
    for (long long cv : {0LL, 2LL, 5LL}) {
      CostPolynomial c{0, 0, cv};
      Int128 expect = Int128(n) * Int128(n * n - 1) *
                          Int128(cv + n + 1) / Int128(6) +
                      Int128(8 * n + 4 * cv + 4);
      CHECK(quadratic_cost(g, Ordering::from_sequence(right), c) == expect);
    }
  }
}

TEST_CASE("two antennas separate the linear and quadratic optima") {
  // clique of 5 with pendant vertices 5-0 and 6-1
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex a = 0; a < 5; ++a)
    for (Vertex b = a + 1; b < 5; ++b) edges.emplace_back(a, b);
  edges.emplace_back(0, 5);
  edges.emplace_back(1, 6);
  Graph g = Graph::build(7, edges);

  CHECK(ola_exact_min(g) == Int128(22));  // clique cost 20 plus both antennas at distance 1

  OqaExactResult best = oqa_exact(g, {}, Direction::minimize);
  CHECK(best.value == Int128(164));
  // the minimizer keeps both antennas on one side: clique first, then 5 and 6
  Ordering pattern = Ordering::from_sequence({2, 3, 4, 1, 0, 5, 6});
  CHECK(quadratic_cost(g, pattern, {}) == Int128(164));
  // while the linear optimum pattern costs more quadratically
  Ordering linear_pattern = Ordering::from_sequence({5, 0, 2, 3, 4, 1, 6});
  CHECK(linear_cost(g, linear_pattern) == Int128(22));
  CHECK(quadratic_cost(g, linear_pattern, {}) == Int128(176));
}

TEST_CASE("max cut brute force") {
  CHECK(max_cut_exact(clique(4)).value == 4);
  CHECK(max_cut_exact(cycle(5)).value == 4);
  CHECK(max_cut_exact(independent(6)).value == 0);
  MaxCutResult r = max_cut_exact(cycle(4));
  CHECK(r.value == 4);
  CHECK(cut_size(cycle(4), r.side) == 4);
  CHECK_THROWS_AS(max_cut_exact(independent(21)), size_limit_error);
}
