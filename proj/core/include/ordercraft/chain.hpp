#pragma once

#include <vector>

#include "ordercraft/arrangement.hpp"
#include "ordercraft/elimination.hpp"
#include "ordercraft/graph.hpp"
#include "ordercraft/int128.hpp"
#include "ordercraft/ordering.hpp"

namespace ordercraft {

enum class Side { P, Q };

// Chain recognition: sorts P by descending degree and verifies nested
// neighborhoods; on failure reports a concrete induced 2K2.
struct ChainCheck {
  bool chain = false;
  Ordering p_order;  // valid when chain
  // valid when !chain: edges (p1,q1), (p2,q2) present, (p1,q2), (p2,q1) absent
  Vertex p1 = -1, q1 = -1, p2 = -1, q2 = -1;
};
ChainCheck is_chain_graph(const BipartiteGraph& b);

// Quadratic chain-completion cost over the designated side D of the
// completed graph: sum of deg^2 plus 2(|D|+1) times the degree sum.
struct QccCost {
  Int128 value;
  Int128 degree_sum;
  Int128 degree_sq_sum;
};
QccCost qcc_cost(const BipartiteGraph& b, const PQEdgeSet& fill, Side designated);

enum class CompletionCost { bcc, qcc };

// Exhaustive over all p! orderings of P (p <= limit): for a fixed order the
// unique minimal completion sets N+(alpha^{-1}(i)) to the union of the
// neighborhoods from position i on. bcc cost ignores the designated side.
struct ChainCompletionResult {
  Int128 value;
  PQEdgeSet fill;
  Ordering p_order;
};
ChainCompletionResult min_chain_completion_exact(const BipartiteGraph& b,
                                                 CompletionCost cost,
                                                 Side designated = Side::P,
                                                 int max_p = 9);

// Minimal completion for one fixed P-order (the per-order oracle step).
PQEdgeSet fixed_order_completion(const BipartiteGraph& b, const Ordering& p_order);

// The triangulation gadget C(G): P made a clique, Q u U made a clique, a
// perfect matching v -- u_v, plus the original bipartite edges.
// Ids: P = 0..p-1, Q = p..p+q-1, U = p+q..2p+q-1.
struct CofG {
  Graph graph;
  int p = 0;
  int q = 0;

  Vertex q_id(Vertex qv) const { return p + qv; }
  Vertex u_id(Vertex pv) const { return p + q + pv; }
};
CofG build_c_of_g(const BipartiteGraph& b);

// G(alpha) = {(alpha^{-1}(i), u_{alpha^{-1}(j)}) : i < j}, in C(G) id space.
EdgeSet g_of_alpha(const Ordering& p_order, int p, int q);

// F' = F u G(alpha) triangulates C(G); the reversed P-order starts a PEO.
Triangulation chain_to_triangulation(const BipartiteGraph& b, const PQEdgeSet& fill,
                                     const Ordering& p_order);

// Decomposes a minimal triangulation of C(G) back into a chain completion
// and its order. Refuses non-minimal input or fill outside P x (Q u U).
struct ChainRecovery {
  PQEdgeSet fill_q;  // bipartite-space chain completion
  Ordering p_order;
  EdgeSet fill_u;    // equals g_of_alpha(p_order, p, q)
};
ChainRecovery triangulation_to_chain(const BipartiteGraph& b, const Triangulation& t);

// Clique-separator glueing check: true iff no A-B edge exists, C is a
// clique, and both side graphs G[A u C], G[B u C] are chordal. When true the
// whole graph is asserted chordal before returning.
bool chordal_patch_check(const Graph& g, const std::vector<Vertex>& a,
                         const std::vector<Vertex>& bset, const std::vector<Vertex>& c);

// QCC instance (B, k) -> MinimumFLOPs instance (C(G), k + offset) with
// offset = p(p+1)^2 + sum_{i=1}^{p+q} i^2.
struct QccToFlopsInstance {
  CofG gadget;
  Int128 offset;
  Int128 threshold;
};
QccToFlopsInstance qcc_to_flops_instance(const BipartiteGraph& b, Int128 k);

// The arrangement gadget G' = (P, Q, E'): P = V; Q holds two vertices per
// edge plus degree-padding sets R(v) of size n - deg(v); |Q| = n^2.
struct GPrime {
  BipartiteGraph bip;
  int n = 0;
  long long m = 0;
  std::vector<Edge> base_edges;    // edge index -> original edge
  std::vector<int> r_offset;       // v -> first Q id of R(v); size n+1

  Vertex w_id(long long edge_index, int copy) const {
    return static_cast<Vertex>(2 * edge_index + copy);
  }
};
GPrime build_g_prime(const Graph& g);

// H(alpha): the unique minimal completion of G' whose P-chain order is
// alpha; sigma(w) is the largest alpha-position among w's neighbors.
PQEdgeSet chain_completion_H(const GPrime& gp, const Ordering& alpha);

// OQA(2(X^2+1)) instance (G, k) -> QCC instance (G', k + p(n)) with Q as the
// designated partition and p(n) = n^2 (n+1) (2n + 3 c(n) + 1) / 6.
struct OqaToQccInstance {
  GPrime gadget;
  Side designated = Side::Q;
  CostPolynomial c;  // 2(X^2 + 1)
  Int128 offset;     // p(n)
  Int128 threshold;  // k + p(n)
};
OqaToQccInstance oqa_to_qcc_instance(const Graph& g, Int128 k);

// Brute-force 2K2 search; the independent oracle for chain recognition.
bool has_induced_2k2(const BipartiteGraph& b);

}  // namespace ordercraft
