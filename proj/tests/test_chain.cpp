#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "ordercraft/chain.hpp"
#include "ordercraft/errors.hpp"
#include "ordercraft/exact_search.hpp"
#include "ordercraft/rand_util.hpp"

using namespace ordercraft;

namespace {

BipartiteGraph bip_from_mask(int p, int q, unsigned mask) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < q; ++b)
      if ((mask >> (a * q + b)) & 1u) edges.emplace_back(a, b);
  return BipartiteGraph::build(p, q, edges);
}

}  // namespace

TEST_CASE("chain recognition") {
  // a single P vertex seeing everything is trivially chain
  CHECK(is_chain_graph(BipartiteGraph::build(1, 3, {{0, 0}, {0, 1}, {0, 2}})).chain);

  // the obstruction itself
  ChainCheck two_k2 = is_chain_graph(BipartiteGraph::build(2, 2, {{0, 0}, {1, 1}}));
  CHECK_FALSE(two_k2.chain);
  CHECK(two_k2.p1 != two_k2.p2);

  // nested neighborhoods {x,y} > {x}
  ChainCheck nested = is_chain_graph(BipartiteGraph::build(2, 2, {{0, 0}, {0, 1}, {1, 0}}));
  CHECK(nested.chain);
  CHECK(nested.p_order.vertex_at_index(0) == 0);
  CHECK(nested.p_order.vertex_at_index(1) == 1);

  // edgeless graphs are chain
  CHECK(is_chain_graph(BipartiteGraph::build(3, 3, {})).chain);
}

TEST_CASE("recognition agrees with brute-force obstruction search") {
  std::mt19937_64 rng(211);
  for (int it = 0; it < 150; ++it) {
    int p = static_cast<int>(rand_int(rng, 1, 6));
    int q = static_cast<int>(rand_int(rng, 1, 6));
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < q; ++b)
        if (rand_int(rng, 0, 99) < 45) edges.emplace_back(a, b);
    BipartiteGraph bip = BipartiteGraph::build(p, q, edges);
    CHECK(is_chain_graph(bip).chain == !has_induced_2k2(bip));
    // side independence
    CHECK(is_chain_graph(bip).chain == is_chain_graph(bip.transposed()).chain);
  }
}

TEST_CASE("qcc cost") {
  BipartiteGraph b = BipartiteGraph::build(1, 2, {{0, 0}, {0, 1}});
  QccCost c = qcc_cost(b, {}, Side::P);
  CHECK(c.value == Int128(12));  // 2^2 + 2*2*2
  CHECK(qcc_cost(BipartiteGraph::build(2, 3, {}), {}, Side::P).value == Int128(0));

  // completion must yield a chain graph
  BipartiteGraph bad = BipartiteGraph::build(2, 2, {{0, 0}, {1, 1}});
  CHECK_THROWS_AS(qcc_cost(bad, {}, Side::P), input_error);

  // degree sum equals |E| + |F| for random chain completions
  std::mt19937_64 rng(223);
  for (int it = 0; it < 40; ++it) {
    int p = static_cast<int>(rand_int(rng, 1, 4));
    int q = static_cast<int>(rand_int(rng, 1, 4));
    BipartiteGraph bip = bip_from_mask(p, q, static_cast<unsigned>(rand_u64(rng)) &
                                                 ((1u << (p * q)) - 1u));
    std::vector<Vertex> seq(static_cast<std::size_t>(p));
    std::iota(seq.begin(), seq.end(), 0);
    fisher_yates(rng, seq);
    PQEdgeSet fill = fixed_order_completion(bip, Ordering::from_sequence(seq));
    QccCost qc = qcc_cost(bip, fill, Side::P);
    CHECK(qc.degree_sum == Int128(static_cast<long long>(bip.edge_count() + fill.size())));
  }
}

TEST_CASE("minimum chain completions") {
  // already chain: nothing to add
  BipartiteGraph chain = BipartiteGraph::build(2, 2, {{0, 0}, {0, 1}, {1, 0}});
  CHECK(min_chain_completion_exact(chain, CompletionCost::bcc).fill.empty());

  // 2K2 needs exactly one edge for chain-ness: bcc value = |E| + |F| = 3
  BipartiteGraph two_k2 = BipartiteGraph::build(2, 2, {{0, 0}, {1, 1}});
  ChainCompletionResult bcc = min_chain_completion_exact(two_k2, CompletionCost::bcc);
  CHECK(bcc.value == Int128(3));
  CHECK(bcc.fill.size() == 1);

  // qcc optimum over both P-orders picks degrees (2,1) over (2,2)
  ChainCompletionResult qcc = min_chain_completion_exact(two_k2, CompletionCost::qcc);
  CHECK(qcc.value == Int128(4 + 1 + 2 * 3 * 3));
  CHECK_THROWS_AS(
      min_chain_completion_exact(BipartiteGraph::build(10, 2, {}), CompletionCost::bcc),
      size_limit_error);
}

TEST_CASE("the gadget C(G)") {
  BipartiteGraph b22 = BipartiteGraph::build(2, 2, {{0, 0}, {0, 1}, {1, 1}});
  CofG c = build_c_of_g(b22);
  CHECK(c.graph.vertex_count() == 6);
  CHECK(c.graph.edge_count() == 1 + 6 + 2 + 3);  // P-clique, (QuU)-clique, matching, E
  CHECK(c.graph.has_edge(0, c.u_id(0)));
  CHECK_FALSE(c.graph.has_edge(0, c.u_id(1)));
  CHECK(c.graph.has_edge(c.q_id(0), c.u_id(1)));

  CofG c1 = build_c_of_g(BipartiteGraph::build(1, 2, {}));
  CHECK(c1.graph.edge_count() == 3 + 1);  // QuU clique on 3 vertices plus matching

  CHECK(build_c_of_g(BipartiteGraph::build(2, 2, {})).graph.edge_count() == 9);
}

TEST_CASE("wedge edge sets") {
  CHECK(g_of_alpha(Ordering::identity(1), 1, 2).empty());
  EdgeSet two = g_of_alpha(Ordering::identity(2), 2, 2);
  CHECK(two.size() == 1);
  CHECK(two.contains(0, 2 + 2 + 1));  // (alpha^-1(1), u_{alpha^-1(2)})
  CHECK(g_of_alpha(Ordering::identity(4), 4, 1).size() == 6);
}

TEST_CASE("chain completions triangulate the gadget") {
  // 2x2 instance with a 2K2: completing one edge and adding the wedge set
  BipartiteGraph b = BipartiteGraph::build(2, 2, {{0, 0}, {1, 1}});
  Ordering alpha = Ordering::identity(2);
  PQEdgeSet fill = fixed_order_completion(b, alpha);
  REQUIRE(fill.size() == 1);
  Triangulation tri = chain_to_triangulation(b, fill, alpha);
  CHECK(tri.fill.size() == 1 + 1);  // chain fill mapped in, plus G(alpha)
  CHECK(find_peo(tri.base.with_edges(tri.fill)).has_value());

  // already-chain base: F' = G(alpha) alone still triangulates
  BipartiteGraph nested = BipartiteGraph::build(2, 2, {{0, 0}, {0, 1}, {1, 0}});
  Ordering order = is_chain_graph(nested).p_order;
  Triangulation tri2 = chain_to_triangulation(nested, {}, order);
  CHECK(tri2.fill == g_of_alpha(order, 2, 2));

  // p = 1: no wedge edges at all
  BipartiteGraph single = BipartiteGraph::build(1, 2, {{0, 0}});
  CHECK(chain_to_triangulation(single, {}, Ordering::identity(1)).fill.empty());

  // rejects a non-completion
  CHECK_THROWS_AS(chain_to_triangulation(b, {}, alpha), input_error);
}

TEST_CASE("triangulations decompose back into chain completions") {
  std::mt19937_64 rng(227);
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q) {
      unsigned cells = static_cast<unsigned>(p * q);
      for (unsigned mask = 0; mask < (1u << cells); ++mask) {
        BipartiteGraph b = bip_from_mask(p, q, mask);
        std::vector<Vertex> seq(static_cast<std::size_t>(p));
        std::iota(seq.begin(), seq.end(), 0);
        do {
          Ordering alpha = Ordering::from_sequence(seq);
          PQEdgeSet fill = fixed_order_completion(b, alpha);
          Triangulation tri = chain_to_triangulation(b, fill, alpha);
          ChainRecovery rec = triangulation_to_chain(b, tri);
          CHECK(rec.fill_q == fill);
          CHECK(rec.p_order == alpha);
        } while (std::next_permutation(seq.begin(), seq.end()));
      }
    }
}

TEST_CASE("order-indexed completions and minimal triangulations are in bijection") {
  // Each P-order alpha pairs its fixed-order minimal completion with the
  // wedge set G(alpha); these p! fill sets are exactly the minimal
  // triangulations of C(G). Two orders can share a completion set yet give
  // distinct triangulations, so the pairing, not the completion set alone,
  // is the bijection carrier.
  std::mt19937_64 rng(233);
  for (auto [p, q] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    unsigned cells = static_cast<unsigned>(p * q);
    for (unsigned mask = 0; mask < (1u << cells); ++mask) {
      BipartiteGraph b = bip_from_mask(p, q, mask);
      CofG c = build_c_of_g(b);
      std::vector<EdgeSet> expected;
      std::vector<Vertex> seq(static_cast<std::size_t>(p));
      std::iota(seq.begin(), seq.end(), 0);
      do {
        Ordering alpha = Ordering::from_sequence(seq);
        expected.push_back(
            chain_to_triangulation(b, fixed_order_completion(b, alpha), alpha).fill);
      } while (std::next_permutation(seq.begin(), seq.end()));
      std::sort(expected.begin(), expected.end(),
                [](const EdgeSet& x, const EdgeSet& y) { return x.edges() < y.edges(); });
      // distinct per order, and each one inclusion-minimal
      CHECK(std::adjacent_find(expected.begin(), expected.end()) == expected.end());
      // sampled minimal triangulations of C(G) hit exactly this family
      std::vector<EdgeSet> sampled;
      std::vector<Vertex> order(static_cast<std::size_t>(c.graph.vertex_count()));
      std::iota(order.begin(), order.end(), 0);
      for (int rep = 0; rep < 150; ++rep) {
        fisher_yates(rng, order);
        auto tri = eliminate(c.graph, Ordering::from_sequence(order));
        EdgeSet fill = minimalize(c.graph, tri.triangulation).fill;
        if (std::find(sampled.begin(), sampled.end(), fill) == sampled.end())
          sampled.push_back(fill);
      }
      std::sort(sampled.begin(), sampled.end(),
                [](const EdgeSet& x, const EdgeSet& y) { return x.edges() < y.edges(); });
      CHECK(sampled == expected);
    }
  }
}

TEST_CASE("decomposition refuses non-minimal triangulations") {
  BipartiteGraph b = BipartiteGraph::build(2, 2, {{0, 0}});
  CofG c = build_c_of_g(b);
  // complete everything P x (Q u U): chordal but far from minimal
  std::vector<Edge> all;
  for (Vertex v = 0; v < 2; ++v)
    for (Vertex w = 2; w < 6; ++w)
      if (!c.graph.has_edge(v, w)) all.emplace_back(v, w);
  Triangulation fat;
  fat.base = c.graph;
  fat.fill = EdgeSet::from_edges(std::move(all));
  fat.witness = *find_peo(c.graph.with_edges(fat.fill));
  CHECK_THROWS_AS(triangulation_to_chain(b, fat), input_error);
}

TEST_CASE("clique separator patching") {
  // two triangles glued on an edge: C = the shared edge
  Graph glued = Graph::build(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
  CHECK(chordal_patch_check(glued, {2}, {3}, {0, 1}));

  // K4 with both outer parts empty
  CHECK(chordal_patch_check(clique(4), {}, {0}, {1, 2, 3}));
  // any split of K4 with both sides nonempty has an A-B edge
  CHECK_FALSE(chordal_patch_check(clique(4), {0}, {1}, {2, 3}));

  // separation fails
  Graph path = Graph::build(3, {{0, 1}, {1, 2}});
  CHECK_FALSE(chordal_patch_check(path, {0}, {1}, {2}));
  // partition violations are errors
  CHECK_THROWS_AS(chordal_patch_check(path, {0}, {1}, {1, 2}), input_error);
  CHECK_THROWS_AS(chordal_patch_check(path, {0}, {1}, {}), input_error);

  // the gadget triangulation glues through the P clique once the QuU clique
  // edges between the two sides are set aside
  BipartiteGraph b = BipartiteGraph::build(2, 2, {{0, 0}, {1, 1}});
  Ordering alpha = Ordering::identity(2);
  Triangulation tri = chain_to_triangulation(b, fixed_order_completion(b, alpha), alpha);
  Graph cplus = tri.base.with_edges(tri.fill);
  std::vector<std::pair<Vertex, Vertex>> kept;
  for (const Edge& e : cplus.edge_set())
    if (!(e.u >= 2 && e.u < 4 && e.v >= 4))  // drop Q x U clique edges
      kept.emplace_back(e.u, e.v);
  Graph split = Graph::build(6, kept);
  CHECK(chordal_patch_check(split, {2, 3}, {4, 5}, {0, 1}));
}

TEST_CASE("qcc to flops thresholds") {
  BipartiteGraph b22 = BipartiteGraph::build(2, 2, {{0, 0}});
  QccToFlopsInstance inst = qcc_to_flops_instance(b22, Int128(5));
  CHECK(inst.offset == Int128(48));
  CHECK(inst.threshold == Int128(53));
  CHECK(qcc_to_flops_instance(BipartiteGraph::build(1, 1, {}), Int128(0)).offset ==
        Int128(9));
}

TEST_CASE("flops of the triangulated gadget equal qcc plus offset") {
  std::mt19937_64 rng(229);
  for (int it = 0; it < 60; ++it) {
    int p = static_cast<int>(rand_int(rng, 1, 4));
    int q = static_cast<int>(rand_int(rng, 1, 4));
    BipartiteGraph b = bip_from_mask(p, q, static_cast<unsigned>(rand_u64(rng)) &
                                               ((1u << (p * q)) - 1u));
    std::vector<Vertex> seq(static_cast<std::size_t>(p));
    std::iota(seq.begin(), seq.end(), 0);
    fisher_yates(rng, seq);
    Ordering alpha = Ordering::from_sequence(seq);
    PQEdgeSet fill = fixed_order_completion(b, alpha);
    Triangulation tri = chain_to_triangulation(b, fill, alpha);
    Int128 flops = metrics(eliminate(tri.base, tri.witness).degrees).flops;
    Int128 offset = qcc_to_flops_instance(b, Int128(0)).threshold;
    CHECK(flops == qcc_cost(b, fill, Side::P).value + offset);
  }
}

TEST_CASE("the arrangement gadget G'") {
  Graph e1 = Graph::build(2, {{0, 1}});
  GPrime gp = build_g_prime(e1);
  CHECK(gp.bip.q() == 4);
  CHECK(gp.bip.p() == 2);
  CHECK(build_g_prime(independent(3)).bip.q() == 9);
  CHECK(build_g_prime(clique(3)).bip.q() == 9);
  // w vertices see both endpoints, R(v) vertices see only v
  CHECK(gp.bip.has_edge(0, gp.w_id(0, 0)));
  CHECK(gp.bip.has_edge(1, gp.w_id(0, 1)));
  CHECK(gp.bip.neighbors_of_q(static_cast<Vertex>(gp.r_offset[0])) ==
        std::vector<Vertex>{0});
}

TEST_CASE("canonical chain completions H(alpha)") {
  GPrime trivial = build_g_prime(independent(1));
  CHECK(chain_completion_H(trivial, Ordering::identity(1)).empty());

  GPrime gp = build_g_prime(Graph::build(2, {{0, 1}}));
  for (auto seq : {std::vector<Vertex>{0, 1}, std::vector<Vertex>{1, 0}}) {
    Ordering alpha = Ordering::from_sequence(seq);
    PQEdgeSet h = chain_completion_H(gp, alpha);
    BipartiteGraph plus = gp.bip.with_edges(h);
    CHECK(is_chain_graph(plus).chain);
  }

  // H(alpha) is the minimal completion for its fixed order, exhaustively
  for (int n = 1; n <= 4; ++n) {
    unsigned pairs = static_cast<unsigned>(n * (n - 1) / 2);
    for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
      std::vector<std::pair<Vertex, Vertex>> edges;
      int bit = 0;
      for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b, ++bit)
          if ((mask >> bit) & 1u) edges.emplace_back(a, b);
      GPrime gadget = build_g_prime(Graph::build(n, edges));
      std::vector<Vertex> seq(static_cast<std::size_t>(n));
      std::iota(seq.begin(), seq.end(), 0);
      do {
        Ordering alpha = Ordering::from_sequence(seq);
        CHECK(chain_completion_H(gadget, alpha) ==
              fixed_order_completion(gadget.bip, alpha));
      } while (std::next_permutation(seq.begin(), seq.end()));
    }
  }
}

TEST_CASE("oqa to qcc instance") {
  Graph e1 = Graph::build(2, {{0, 1}});
  OqaToQccInstance inst = oqa_to_qcc_instance(e1, Int128(0));
  CHECK(inst.designated == Side::Q);
  CHECK(inst.c.c2 == 2);
  CHECK(inst.c.c0 == 2);
  CHECK(inst.offset == Int128(70));

  // identity spot check: qcc(H(alpha)) - p(n) = q(alpha)
  Ordering alpha = Ordering::identity(2);
  PQEdgeSet h = chain_completion_H(inst.gadget, alpha);
  Int128 qcc = qcc_cost(inst.gadget.bip, h, Side::Q).value;
  CHECK(qcc - inst.offset == quadratic_cost(e1, alpha, inst.c));

  // edgeless base: q is identically zero, so min qcc is exactly p(n)
  Graph s3 = independent(3);
  OqaToQccInstance inst3 = oqa_to_qcc_instance(s3, Int128(0));
  PQEdgeSet h3 = chain_completion_H(inst3.gadget, Ordering::identity(3));
  CHECK(qcc_cost(inst3.gadget.bip, h3, Side::Q).value == inst3.offset);
}
