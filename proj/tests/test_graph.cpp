#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "ordercraft/errors.hpp"
#include "ordercraft/graph.hpp"
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

}  // namespace

TEST_CASE("build validates input") {
  Graph k3 = Graph::build(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(k3.edge_count() == 3);
  CHECK(k3.has_edge(2, 0));

  Graph s4 = independent(4);
  CHECK(s4.edge_count() == 0);
  CHECK(s4.vertex_count() == 4);

  Graph c5 = cycle(5);
  for (Vertex v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

  CHECK_THROWS_AS(Graph::build(3, {{0, 3}}), input_error);
  CHECK_THROWS_AS(Graph::build(3, {{1, 1}}), input_error);
  CHECK_THROWS_AS(Graph::build(3, {{0, 1}, {1, 0}}), input_error);  // duplicate
}

TEST_CASE("sum shifts the second operand") {
  Graph g = graph_sum(independent(4), clique(4));
  CHECK(g.vertex_count() == 8);
  CHECK(g.edge_count() == 6);
  CHECK(g.has_edge(4, 5));
  CHECK_FALSE(g.has_edge(0, 4));

  CHECK(graph_sum(independent(2), independent(2)).edge_count() == 0);
  CHECK(graph_sum(clique(3), clique(3)).edge_count() == 6);
}

TEST_CASE("join adds all cross edges") {
  CHECK(is_isomorphic(graph_join(clique(1), clique(1)), clique(2)));

  Graph wheel = graph_join(cycle(4), clique(1));
  CHECK(wheel.vertex_count() == 5);
  CHECK(wheel.edge_count() == 8);

  Graph family = graph_join(cycle(4), graph_sum(independent(4), clique(4)));
  CHECK(family.vertex_count() == 12);
  CHECK(family.edge_count() == 42);
}

TEST_CASE("join edge count identity") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 40; ++it) {
    Graph a = random_graph(rng, static_cast<int>(rand_int(rng, 0, 6)), 50);
    Graph b = random_graph(rng, static_cast<int>(rand_int(rng, 0, 6)), 50);
    Graph j = graph_join(a, b);
    CHECK(j.edge_count() == a.edge_count() + b.edge_count() +
                                static_cast<std::size_t>(a.vertex_count()) *
                                    static_cast<std::size_t>(b.vertex_count()));
  }
}

TEST_CASE("complement") {
  CHECK(complement(clique(6)).edge_count() == 0);
  CHECK(is_isomorphic(complement(cycle(5)), cycle(5)));

  Graph p3 = Graph::build(3, {{0, 1}, {1, 2}});
  Graph cp3 = complement(p3);
  CHECK(cp3.edge_count() == 1);
  CHECK(cp3.has_edge(0, 2));
  CHECK(cp3.degree(1) == 0);

  std::mt19937_64 rng(11);
  for (int it = 0; it < 25; ++it) {
    Graph g = random_graph(rng, static_cast<int>(rand_int(rng, 1, 8)), 40);
    Graph cc = complement(complement(g));
    CHECK(cc.edge_set() == g.edge_set());
  }
}

TEST_CASE("named graphs") {
  CHECK(clique(4).edge_count() == 6);
  CHECK(independent(5).edge_count() == 0);
  CHECK_THROWS_AS(cycle(2), input_error);
}

TEST_CASE("induced subgraph relabels densely") {
  auto sub = induced_subgraph(clique(4), {0, 2, 3});
  CHECK(is_isomorphic(sub.graph, clique(3)));
  CHECK(sub.to_original == std::vector<Vertex>{0, 2, 3});

  auto path = induced_subgraph(cycle(5), {0, 1, 2});
  CHECK(path.graph.edge_count() == 2);

  auto pair = induced_subgraph(cycle(5), {0, 2});
  CHECK(pair.graph.edge_count() == 0);

  CHECK_THROWS_AS(induced_subgraph(cycle(5), {5}), input_error);
}

TEST_CASE("isomorphism") {
  CHECK(is_isomorphic(cycle(5), complement(cycle(5))));
  CHECK_FALSE(is_isomorphic(clique(4), cycle(4)));

  // the 5-wheel two ways
  Graph wheel = graph_join(cycle(4), clique(1));
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex a = 0; a < 5; ++a)
    for (Vertex b = a + 1; b < 5; ++b)
      if (!(a == 0 && b == 1) && !(a == 2 && b == 3)) edges.emplace_back(a, b);
  CHECK(is_isomorphic(wheel, Graph::build(5, edges)));
}

TEST_CASE("sum and join associate up to isomorphism") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 15; ++it) {
    Graph a = random_graph(rng, static_cast<int>(rand_int(rng, 1, 4)), 50);
    Graph b = random_graph(rng, static_cast<int>(rand_int(rng, 1, 4)), 50);
    Graph c = random_graph(rng, static_cast<int>(rand_int(rng, 1, 4)), 50);
    CHECK(is_isomorphic(graph_sum(graph_sum(a, b), c), graph_sum(a, graph_sum(b, c))));
    CHECK(is_isomorphic(graph_join(graph_join(a, b), c), graph_join(a, graph_join(b, c))));
  }
}

TEST_CASE("edge list round trip") {
  Graph g = graph_join(cycle(4), clique(1));
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream in(out.str());
  Graph back = read_edge_list(in);
  CHECK(back.edge_set() == g.edge_set());
  CHECK(back.vertex_count() == g.vertex_count());
}

TEST_CASE("edge list diagnostics carry line numbers") {
  {
    std::istringstream in("# only a comment\n");
    CHECK_THROWS_AS(read_edge_list(in), input_error);
  }
  {
    std::istringstream in("3 1\n4 1\n");
    CHECK_THROWS_WITH_AS(read_edge_list(in, "g.txt"),
                         doctest::Contains("g.txt:2"), input_error);
  }
  {
    std::istringstream in("3 2\n1 2\n");
    CHECK_THROWS_AS(read_edge_list(in), input_error);  // truncated
  }
  {
    std::istringstream in("2 1\n1 2\n1 2\n");
    CHECK_THROWS_AS(read_edge_list(in), input_error);  // trailing content
  }
}

TEST_CASE("bipartite graphs") {
  BipartiteGraph b = BipartiteGraph::build(2, 2, {{0, 0}, {1, 1}});
  CHECK(b.edge_count() == 2);
  CHECK(b.has_edge(0, 0));
  CHECK_FALSE(b.has_edge(0, 1));
  CHECK_THROWS_AS(BipartiteGraph::build(2, 2, {{0, 2}}), input_error);
  CHECK_THROWS_AS(BipartiteGraph::build(2, 2, {{0, 0}, {0, 0}}), input_error);

  BipartiteGraph t = b.transposed().transposed();
  CHECK(t.edge_set() == b.edge_set());

  std::ostringstream out;
  write_bipartite_list(out, b);
  std::istringstream in(out.str());
  BipartiteGraph back = read_bipartite_list(in);
  CHECK(back.p() == 2);
  CHECK(back.q() == 2);
  CHECK(back.edge_set() == b.edge_set());
}

TEST_CASE("edge sets") {
  EdgeSet s = EdgeSet::from_pairs({{3, 1}, {1, 3}, {0, 2}});
  CHECK(s.size() == 2);  // canonicalized and deduplicated
  CHECK(s.contains(1, 3));
  s.erase(1, 3);
  CHECK_FALSE(s.contains(3, 1));
  CHECK_THROWS_AS(EdgeSet::from_pairs({{2, 2}}), input_error);

  EdgeSet a = EdgeSet::from_pairs({{0, 1}, {1, 2}});
  EdgeSet b = EdgeSet::from_pairs({{1, 2}, {2, 3}});
  CHECK(a.set_union(b).size() == 3);
  CHECK(a.set_intersection(b).size() == 1);
  CHECK(a.set_difference(b).size() == 1);
}
