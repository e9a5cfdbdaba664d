#include "ordercraft/chain.hpp"

#include <algorithm>
#include <numeric>

#include "ordercraft/errors.hpp"

namespace ordercraft {

namespace {

bool contains_sorted(const std::vector<Vertex>& big, const std::vector<Vertex>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Verifies that p_order is a chain order for b: neighborhoods are nested
// along increasing position.
bool is_chain_order(const BipartiteGraph& b, const Ordering& p_order) {
  for (int i = 0; i + 1 < b.p(); ++i) {
    const auto& hi = b.neighbors_of_p(p_order.vertex_at_index(i));
    const auto& lo = b.neighbors_of_p(p_order.vertex_at_index(i + 1));
    if (!contains_sorted(hi, lo)) return false;
  }
  return true;
}

}  // namespace

ChainCheck is_chain_graph(const BipartiteGraph& b) {
  std::vector<Vertex> order(static_cast<std::size_t>(b.p()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex x, Vertex y) {
    return b.neighbors_of_p(x).size() > b.neighbors_of_p(y).size();
  });
  ChainCheck out;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    Vertex u = order[i], v = order[i + 1];
    const auto& nu = b.neighbors_of_p(u);
    const auto& nv = b.neighbors_of_p(v);
    if (contains_sorted(nu, nv)) continue;
    // Nesting fails: deg(u) >= deg(v) forces witnesses on both sides.
    Vertex x = -1, y = -1;
    for (Vertex q : nv)
      if (!std::binary_search(nu.begin(), nu.end(), q)) {
        x = q;
        break;
      }
    for (Vertex q : nu)
      if (!std::binary_search(nv.begin(), nv.end(), q)) {
        y = q;
        break;
      }
    out.chain = false;
    out.p1 = u;
    out.q1 = y;
    out.p2 = v;
    out.q2 = x;
    return out;
  }
  out.chain = true;
  out.p_order = Ordering::from_sequence(std::move(order));
  return out;
}

bool has_induced_2k2(const BipartiteGraph& b) {
  for (Vertex u = 0; u < b.p(); ++u)
    for (Vertex v = u + 1; v < b.p(); ++v)
      for (Vertex x : b.neighbors_of_p(u)) {
        if (b.has_edge(v, x)) continue;
        for (Vertex y : b.neighbors_of_p(v)) {
          if (y == x) continue;
          if (!b.has_edge(u, y)) return true;
        }
      }
  return false;
}

QccCost qcc_cost(const BipartiteGraph& b, const PQEdgeSet& fill, Side designated) {
  for (const auto& [pv, qv] : fill)
    if (b.has_edge(pv, qv))
      throw input_error("qcc_cost: fill edge already present in the graph");
  BipartiteGraph plus = b.with_edges(fill);
  if (!is_chain_graph(plus).chain)
    throw input_error("qcc_cost: completed graph is not a chain graph");
  const int d = designated == Side::P ? plus.p() : plus.q();
  QccCost out;
  Int128 sum(0), sumsq(0);
  for (Vertex v = 0; v < d; ++v) {
    Int128 deg(static_cast<long long>(designated == Side::P
                                          ? plus.neighbors_of_p(v).size()
                                          : plus.neighbors_of_q(v).size()));
    sum += deg;
    sumsq += deg * deg;
  }
  out.degree_sum = sum;
  out.degree_sq_sum = sumsq;
  out.value = sumsq + Int128(2) * (Int128(d) + Int128(1)) * sum;
  return out;
}

PQEdgeSet fixed_order_completion(const BipartiteGraph& b, const Ordering& p_order) {
  if (p_order.size() != b.p())
    throw input_error("fixed_order_completion: order does not match P");
  std::vector<std::pair<Vertex, Vertex>> fill;
  std::vector<bool> needed(static_cast<std::size_t>(b.q()), false);
  // Walk from the last position up, accumulating the union of neighborhoods.
  for (int i = b.p() - 1; i >= 0; --i) {
    Vertex v = p_order.vertex_at_index(i);
    for (Vertex w : b.neighbors_of_p(v)) needed[static_cast<std::size_t>(w)] = true;
    for (Vertex w = 0; w < b.q(); ++w)
      if (needed[static_cast<std::size_t>(w)] && !b.has_edge(v, w))
        fill.emplace_back(v, w);
  }
  return PQEdgeSet::from_pairs(std::move(fill));
}

namespace {

// Cost of the minimal completion fixing the P-order seq, computed from
// degree counts alone: the completed P-degrees are the running neighborhood
// unions, the completed Q-degrees are the sigma positions.
Int128 fixed_order_cost(const BipartiteGraph& b, const std::vector<Vertex>& seq,
                        CompletionCost cost, Side designated) {
  const int p = b.p(), q = b.q();
  if (cost == CompletionCost::qcc && designated == Side::Q) {
    Int128 sum(0), sumsq(0);
    for (Vertex w = 0; w < q; ++w) {
      int sigma = 0;
      for (int i = 0; i < p; ++i)
        if (b.has_edge(seq[static_cast<std::size_t>(i)], w)) sigma = i + 1;
      Int128 d(sigma);
      sum += d;
      sumsq += d * d;
    }
    return sumsq + Int128(2) * Int128(q + 1) * sum;
  }
  std::vector<bool> needed(static_cast<std::size_t>(q), false);
  long long covered = 0;
  Int128 sum(0), sumsq(0);
  for (int i = p - 1; i >= 0; --i) {
    for (Vertex w : b.neighbors_of_p(seq[static_cast<std::size_t>(i)]))
      if (!needed[static_cast<std::size_t>(w)]) {
        needed[static_cast<std::size_t>(w)] = true;
        ++covered;
      }
    Int128 d(covered);
    sum += d;
    sumsq += d * d;
  }
  if (cost == CompletionCost::bcc) return sum;
  return sumsq + Int128(2) * Int128(p + 1) * sum;
}

}  // namespace

ChainCompletionResult min_chain_completion_exact(const BipartiteGraph& b,
                                                 CompletionCost cost, Side designated,
                                                 int max_p) {
  if (b.p() > max_p)
    throw size_limit_error("min_chain_completion_exact: p = " + std::to_string(b.p()) +
                           " exceeds the limit of " + std::to_string(max_p));
  std::vector<Vertex> seq(static_cast<std::size_t>(b.p()));
  std::iota(seq.begin(), seq.end(), 0);
  bool first = true;
  Int128 best_value(0);
  std::vector<Vertex> best_seq;
  do {
    Int128 value = fixed_order_cost(b, seq, cost, designated);
    if (first || value < best_value) {
      best_value = value;
      best_seq = seq;
      first = false;
    }
  } while (std::next_permutation(seq.begin(), seq.end()));
  ChainCompletionResult best;
  best.value = best_value;
  best.p_order = Ordering::from_sequence(best_seq);
  best.fill = fixed_order_completion(b, best.p_order);
  return best;
}

CofG build_c_of_g(const BipartiteGraph& b) {
  const int p = b.p(), q = b.q();
  std::vector<std::pair<Vertex, Vertex>> edges;
  // original bipartite edges
  for (Vertex v = 0; v < p; ++v)
    for (Vertex w : b.neighbors_of_p(v)) edges.emplace_back(v, p + w);
  // P clique
  for (Vertex a = 0; a < p; ++a)
    for (Vertex bb = a + 1; bb < p; ++bb) edges.emplace_back(a, bb);
  // (Q u U) clique
  for (Vertex a = 0; a < q + p; ++a)
    for (Vertex bb = a + 1; bb < q + p; ++bb) edges.emplace_back(p + a, p + bb);
  // matching v -- u_v
  for (Vertex v = 0; v < p; ++v) edges.emplace_back(v, p + q + v);
  CofG out;
  out.graph = Graph::build(2 * p + q, edges);
  out.p = p;
  out.q = q;
  return out;
}

EdgeSet g_of_alpha(const Ordering& p_order, int p, int q) {
  if (p_order.size() != p) throw input_error("g_of_alpha: order does not match p");
  std::vector<Edge> edges;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      edges.emplace_back(p_order.vertex_at_index(i), p + q + p_order.vertex_at_index(j));
  return EdgeSet::from_edges(std::move(edges));
}

Triangulation chain_to_triangulation(const BipartiteGraph& b, const PQEdgeSet& fill,
                                     const Ordering& p_order) {
  if (p_order.size() != b.p())
    throw input_error("chain_to_triangulation: order does not match P");
  for (const auto& [pv, qv] : fill)
    if (b.has_edge(pv, qv))
      throw input_error("chain_to_triangulation: fill edge already present");
  BipartiteGraph plus = b.with_edges(fill);
  if (!is_chain_order(plus, p_order))
    throw input_error("chain_to_triangulation: not a chain completion for the given order");

  CofG c = build_c_of_g(b);
  std::vector<Edge> fprime;
  for (const auto& [pv, qv] : fill) fprime.emplace_back(pv, c.q_id(qv));
  EdgeSet fill_c = EdgeSet::from_edges(std::move(fprime)).set_union(
      g_of_alpha(p_order, c.p, c.q));

  Graph cplus = c.graph.with_edges(fill_c);
  // alpha^R over P, then Q u U in id order; must be a PEO of C+.
  std::vector<Vertex> seq;
  seq.reserve(static_cast<std::size_t>(cplus.vertex_count()));
  for (int i = b.p() - 1; i >= 0; --i) seq.push_back(p_order.vertex_at_index(i));
  for (Vertex v = b.p(); v < cplus.vertex_count(); ++v) seq.push_back(v);
  Ordering witness = Ordering::from_sequence(std::move(seq));
  if (!is_peo(cplus, witness))
    throw invariant_error("chain_to_triangulation: reversed chain order does not "
                          "start a perfect elimination ordering");
  Triangulation out;
  out.base = c.graph;
  out.fill = fill_c;
  out.witness = witness;
  return out;
}

ChainRecovery triangulation_to_chain(const BipartiteGraph& b, const Triangulation& t) {
  const int p = b.p(), q = b.q();
  CofG c = build_c_of_g(b);
  if (t.base.vertex_count() != c.graph.vertex_count())
    throw input_error("triangulation_to_chain: triangulation is not over C(G)");

  // Fill must lie inside P x (Q u U).
  for (const Edge& e : t.fill)
    if (e.u >= p || e.v < p)
      throw input_error("triangulation_to_chain: fill edge (" + std::to_string(e.u) +
                        "," + std::to_string(e.v) + ") outside P x (Q u U)");

  Triangulation minimal = minimalize(c.graph, t);
  if (!(minimal.fill == t.fill))
    throw input_error("triangulation_to_chain: fill set is not inclusion-minimal");

  // Position of v in alpha is one plus the number of fill edges into u_v.
  std::vector<int> positions(static_cast<std::size_t>(p), 1);
  std::vector<std::pair<Vertex, Vertex>> fq;
  std::vector<Edge> fu;
  for (const Edge& e : t.fill) {
    if (e.v >= p + q) {
      fu.emplace_back(e.u, e.v);
      ++positions[static_cast<std::size_t>(e.v - p - q)];
    } else {
      fq.emplace_back(e.u, e.v - p);
    }
  }
  Ordering alpha;
  try {
    alpha = Ordering::from_positions(positions);
  } catch (const input_error&) {
    throw input_error("triangulation_to_chain: fill into U does not encode an ordering");
  }
  if (!(EdgeSet::from_edges(std::move(fu)) == g_of_alpha(alpha, p, q)))
    throw input_error("triangulation_to_chain: fill into U is not of wedge form");

  ChainRecovery out;
  out.fill_q = PQEdgeSet::from_pairs(std::move(fq));
  out.fill_u = g_of_alpha(alpha, p, q);
  out.p_order = alpha;
  BipartiteGraph plus = b.with_edges(out.fill_q);
  if (!is_chain_order(plus, alpha))
    throw invariant_error("triangulation_to_chain: recovered completion is not a "
                          "chain graph under the recovered order");
  return out;
}

bool chordal_patch_check(const Graph& g, const std::vector<Vertex>& a,
                         const std::vector<Vertex>& bset,
                         const std::vector<Vertex>& c) {
  const int n = g.vertex_count();
  std::vector<int> part(static_cast<std::size_t>(n), -1);
  auto mark = [&](const std::vector<Vertex>& set, int id) {
    for (Vertex v : set) {
      if (v < 0 || v >= n)
        throw input_error("chordal_patch_check: vertex out of range");
      if (part[static_cast<std::size_t>(v)] != -1)
        throw input_error("chordal_patch_check: vertex " + std::to_string(v) +
                          " in two parts");
      part[static_cast<std::size_t>(v)] = id;
    }
  };
  mark(a, 0);
  mark(bset, 1);
  mark(c, 2);
  for (Vertex v = 0; v < n; ++v)
    if (part[static_cast<std::size_t>(v)] == -1)
      throw input_error("chordal_patch_check: vertex " + std::to_string(v) +
                        " in no part");

  // 1: A and B separated outside C
  for (Vertex v = 0; v < n; ++v)
    if (part[static_cast<std::size_t>(v)] == 0)
      for (Vertex u : g.neighbors(v))
        if (part[static_cast<std::size_t>(u)] == 1) return false;
  // 2: C is a clique
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!g.has_edge(c[i], c[j])) return false;
  // 3: both side graphs chordal
  std::vector<Vertex> ac = a, bc = bset;
  ac.insert(ac.end(), c.begin(), c.end());
  bc.insert(bc.end(), c.begin(), c.end());
  if (!is_chordal(induced_subgraph(g, ac).graph)) return false;
  if (!is_chordal(induced_subgraph(g, bc).graph)) return false;

  if (!is_chordal(g))
    throw invariant_error("chordal_patch_check: conditions hold but the graph "
                          "is not chordal");
  return true;
}

QccToFlopsInstance qcc_to_flops_instance(const BipartiteGraph& b, Int128 k) {
  const Int128 p(b.p()), q(b.q());
  Int128 pq = p + q;
  Int128 sumsq = pq * (pq + Int128(1)) * (Int128(2) * pq + Int128(1)) / Int128(6);
  QccToFlopsInstance out;
  out.gadget = build_c_of_g(b);
  out.offset = p * (p + Int128(1)) * (p + Int128(1)) + sumsq;
  out.threshold = k + out.offset;
  return out;
}

GPrime build_g_prime(const Graph& g) {
  const int n = g.vertex_count();
  GPrime out;
  out.n = n;
  EdgeSet base = g.edge_set();
  out.base_edges.assign(base.begin(), base.end());
  out.m = static_cast<long long>(out.base_edges.size());
  out.r_offset.assign(static_cast<std::size_t>(n) + 1, 0);
  int q_count = static_cast<int>(2 * out.m);
  for (Vertex v = 0; v < n; ++v) {
    out.r_offset[static_cast<std::size_t>(v)] = q_count;
    q_count += n - g.degree(v);
  }
  out.r_offset[static_cast<std::size_t>(n)] = q_count;
  if (q_count != n * n)
    throw invariant_error("build_g_prime: |Q| != n^2");

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (long long e = 0; e < out.m; ++e) {
    const Edge& be = out.base_edges[static_cast<std::size_t>(e)];
    for (int copy = 0; copy < 2; ++copy) {
      edges.emplace_back(be.u, out.w_id(e, copy));
      edges.emplace_back(be.v, out.w_id(e, copy));
    }
  }
  for (Vertex v = 0; v < n; ++v)
    for (int w = out.r_offset[static_cast<std::size_t>(v)];
         w < out.r_offset[static_cast<std::size_t>(v) + 1]; ++w)
      edges.emplace_back(v, w);
  out.bip = BipartiteGraph::build(n, q_count, edges);
  return out;
}

PQEdgeSet chain_completion_H(const GPrime& gp, const Ordering& alpha) {
  if (alpha.size() != gp.n)
    throw input_error("chain_completion_H: ordering does not match the base graph");
  std::vector<std::pair<Vertex, Vertex>> fill;
  for (Vertex w = 0; w < gp.bip.q(); ++w) {
    int sigma = 0;  // vertices of Q with no neighbors get nothing added
    for (Vertex v : gp.bip.neighbors_of_q(w))
      sigma = std::max(sigma, alpha.position(v) - alpha.base() + 1);
    for (int pos = 1; pos < sigma; ++pos) {
      Vertex v = alpha.vertex_at_index(pos - 1);
      if (!gp.bip.has_edge(v, w)) fill.emplace_back(v, w);
    }
  }
  PQEdgeSet h = PQEdgeSet::from_pairs(std::move(fill));
  BipartiteGraph plus = gp.bip.with_edges(h);
  if (!is_chain_order(plus, alpha))
    throw invariant_error("chain_completion_H: H(alpha) is not a chain completion "
                          "for alpha");
  return h;
}

OqaToQccInstance oqa_to_qcc_instance(const Graph& g, Int128 k) {
  OqaToQccInstance out;
  out.gadget = build_g_prime(g);
  out.designated = Side::Q;
  out.c = CostPolynomial{2, 0, 2};  // 2(X^2 + 1)
  Int128 n(g.vertex_count());
  Int128 cn = out.c.eval(n);
  out.offset = n * n * (n + Int128(1)) *
               (Int128(2) * n + Int128(3) * cn + Int128(1)) / Int128(6);
  out.threshold = k + out.offset;
  return out;
}

}  // namespace ordercraft
