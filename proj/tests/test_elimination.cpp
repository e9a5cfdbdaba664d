#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "ordercraft/elimination.hpp"
#include "ordercraft/errors.hpp"
#include "ordercraft/family.hpp"
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
  for (int i = 0; i < n; ++i) seq[static_cast<std::size_t>(i)] = i;
  fisher_yates(rng, seq);
  return Ordering::from_sequence(std::move(seq));
}

}  // namespace

TEST_CASE("cliques never fill") {
  auto res = eliminate(clique(3), Ordering::identity(3));
  CHECK(res.triangulation.fill.empty());
  CHECK(res.degrees.degs == std::vector<int>{2, 1, 0});
}

TEST_CASE("a four-cycle fills one diagonal") {
  auto res = eliminate(cycle(4), Ordering::identity(4));
  CHECK(res.triangulation.fill.size() == 1);
  CHECK(res.triangulation.fill.contains(1, 3));
  CHECK(res.degrees.degs == std::vector<int>{2, 2, 1, 0});
}

TEST_CASE("family ordering reproduces the degree sequence") {
  FamilyParams p{4, 4, 4};
  auto res = eliminate(build_family(p), ordering_T1(p));
  CHECK(res.degrees.degs == std::vector<int>{4, 4, 4, 4, 7, 6, 5, 4, 3, 2, 1, 0});
}

TEST_CASE("metrics") {
  MetricsReport k3 = metrics(DegreeSequence{{2, 1, 0}});
  CHECK(k3.nnz == Int128(6));
  CHECK(k3.flops == Int128(14));
  CHECK(k3.omega == Int128(3));

  MetricsReport empty = metrics(DegreeSequence{{}});
  CHECK(empty.nnz == Int128(0));
  CHECK(empty.flops == Int128(0));
  CHECK(empty.omega == Int128(0));

  // complete graph on n vertices: degrees n-1 .. 0
  for (int n : {1, 4, 9}) {
    std::vector<int> degs;
    for (int d = n - 1; d >= 0; --d) degs.push_back(d);
    MetricsReport r = metrics(DegreeSequence{degs});
    CHECK(r.nnz == Int128(n * (n + 1) / 2));
    Int128 sq(0);
    for (int j = 1; j <= n; ++j) sq += Int128(j) * Int128(j);
    CHECK(r.flops == sq);
    CHECK(r.omega == Int128(n));
  }
}

TEST_CASE("ordering validation") {
  CHECK_THROWS_AS(eliminate(clique(3), Ordering::identity(4)), input_error);
  CHECK_THROWS_AS(Ordering::from_sequence({0, 0, 2}), input_error);
  CHECK_THROWS_AS(Ordering::from_positions({1, 1, 2}), input_error);
  CHECK_THROWS_AS(Ordering::from_positions({0, 1, 2}), input_error);  // base is 1
}

TEST_CASE("peo recognition") {
  CHECK(find_peo(clique(5)).has_value());
  CHECK_FALSE(find_peo(cycle(4)).has_value());
  CHECK(find_peo(Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}})).has_value());

  CHECK(is_peo(clique(4), Ordering::identity(4)));
  CHECK_FALSE(is_peo(cycle(4), Ordering::identity(4)));
  // path 0-1-2-3, endpoints first
  Graph p4 = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(is_peo(p4, Ordering::from_sequence({0, 3, 1, 2})));
}

TEST_CASE("chordality consistency") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 60; ++it) {
    Graph g = random_graph(rng, static_cast<int>(rand_int(rng, 1, 9)),
                           static_cast<int>(rand_int(rng, 10, 95)));
    auto peo = find_peo(g);
    if (peo) {
      CHECK(eliminate(g, *peo).triangulation.fill.empty());
    } else {
      // not chordal: every ordering fills something; spot-check a few
      for (int k = 0; k < 3; ++k)
        CHECK_FALSE(eliminate(g, random_ordering(rng, g.vertex_count()))
                        .triangulation.fill.empty());
    }
  }
}

TEST_CASE("eliminate output is chordal with the ordering as PEO") {
  std::mt19937_64 rng(37);
  for (int it = 0; it < 40; ++it) {
    Graph g = random_graph(rng, static_cast<int>(rand_int(rng, 1, 10)), 40);
    Ordering alpha = random_ordering(rng, g.vertex_count());
    auto res = eliminate(g, alpha);
    Graph filled = g.with_edges(res.triangulation.fill);
    CHECK(eliminate(filled, alpha).triangulation.fill.empty());
  }
}

TEST_CASE("degree multiset does not depend on the PEO") {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 25; ++it) {
    int n = static_cast<int>(rand_int(rng, 1, 10));
    Graph g = random_graph(rng, n, 50);
    Graph h = g.with_edges(eliminate(g, random_ordering(rng, n)).triangulation.fill);
    std::vector<int> ref;
    for (int k = 0; k < 5; ++k) {
      auto peo = find_peo_random(h, rng);
      REQUIRE(peo.has_value());
      auto degs = eliminate(h, *peo).degrees.degs;
      std::sort(degs.begin(), degs.end());
      if (k == 0) ref = degs;
      else CHECK(degs == ref);
    }
  }
}

TEST_CASE("minimalize") {
  // both diagonals of a four-cycle: exactly one survives
  Graph c4 = cycle(4);
  Triangulation t;
  t.base = c4;
  t.fill = EdgeSet::from_pairs({{0, 2}, {1, 3}});
  t.witness = *find_peo(c4.with_edges(t.fill));
  Triangulation m = minimalize(c4, t);
  CHECK(m.fill.size() == 1);

  // chordal graph with empty fill is a fixed point
  Graph k4 = clique(4);
  Triangulation t2;
  t2.base = k4;
  t2.fill = {};
  t2.witness = Ordering::identity(4);
  CHECK(minimalize(k4, t2).fill.empty());

  // the fan fill of a five-cycle is already minimal
  Graph c5 = cycle(5);
  auto res = eliminate(c5, Ordering::identity(5));
  CHECK(res.triangulation.fill.size() == 2);
  Triangulation m5 = minimalize(c5, res.triangulation);
  CHECK(m5.fill.size() == 2);
  CHECK(m5.fill == res.triangulation.fill);
}

TEST_CASE("minimalize yields inclusion-minimal fill") {
  std::mt19937_64 rng(43);
  for (int it = 0; it < 20; ++it) {
    int n = static_cast<int>(rand_int(rng, 4, 9));
    Graph g = random_graph(rng, n, 40);
    auto res = eliminate(g, random_ordering(rng, n));
    Triangulation m = minimalize(g, res.triangulation);
    Graph filled = g.with_edges(m.fill);
    CHECK(find_peo(filled).has_value());
    for (const Edge& e : m.fill) {
      EdgeSet smaller = m.fill;
      smaller.erase(e.u, e.v);
      CHECK_FALSE(find_peo(g.with_edges(smaller)).has_value());
    }
  }
}

TEST_CASE("minimalize rejects invalid input") {
  Triangulation bad;
  bad.base = cycle(5);
  bad.fill = EdgeSet::from_pairs({{0, 2}});  // not a triangulation of C5
  bad.witness = Ordering::identity(5);
  CHECK_THROWS_AS(minimalize(cycle(5), bad), input_error);
}

TEST_CASE("ordering file round trip") {
  Ordering o = Ordering::from_sequence({2, 0, 3, 1});
  std::ostringstream out;
  write_ordering(out, o);
  CHECK(out.str() == "3\n1\n4\n2\n");
  std::istringstream in(out.str());
  CHECK(read_ordering(in, 4) == o);

  std::istringstream rev("4\n3\n2\n1\n");
  CHECK(read_ordering(rev, 4) == Ordering::identity(4).reversed());

  std::istringstream dup("1\n1\n3\n");
  CHECK_THROWS_AS(read_ordering(dup, 3), input_error);
  std::istringstream range("1\n2\n5\n");
  CHECK_THROWS_AS(read_ordering(range, 3), input_error);
}

TEST_CASE("translated and reversed orderings") {
  Ordering o = Ordering::from_sequence({1, 0, 2});
  Ordering t = o.translated(3);
  CHECK(t.base() == 4);
  CHECK(t.position(1) == 4);
  CHECK(t.vertex_at_position(6) == 2);
  CHECK(o.translated(2).translated(3) == o.translated(5));

  Ordering r = o.reversed();
  CHECK(r.vertex_at_index(0) == 2);
  CHECK(r.vertex_at_index(2) == 1);
  CHECK(r.reversed() == o);
}
