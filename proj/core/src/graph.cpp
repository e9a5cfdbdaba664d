#include "ordercraft/graph.hpp"

#include <algorithm>
#include <numeric>

#include "ordercraft/errors.hpp"

namespace ordercraft {

EdgeSet EdgeSet::from_pairs(const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<Edge> es;
  es.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a == b) throw input_error("EdgeSet: self-pair (" + std::to_string(a) + ")");
    es.emplace_back(a, b);
  }
  return from_edges(std::move(es));
}

EdgeSet EdgeSet::from_edges(std::vector<Edge> edges) {
  for (const Edge& e : edges)
    if (e.u == e.v) throw input_error("EdgeSet: self-pair (" + std::to_string(e.u) + ")");
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  EdgeSet s;
  s.edges_ = std::move(edges);
  return s;
}

bool EdgeSet::contains(Vertex a, Vertex b) const {
  Edge e(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

void EdgeSet::insert(Vertex a, Vertex b) {
  if (a == b) throw input_error("EdgeSet: self-pair (" + std::to_string(a) + ")");
  Edge e(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) return;
  edges_.insert(it, e);
}

void EdgeSet::erase(Vertex a, Vertex b) {
  Edge e(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) edges_.erase(it);
}

EdgeSet EdgeSet::set_union(const EdgeSet& other) const {
  std::vector<Edge> out;
  out.reserve(edges_.size() + other.edges_.size());
  std::set_union(edges_.begin(), edges_.end(), other.edges_.begin(),
                 other.edges_.end(), std::back_inserter(out));
  EdgeSet s;
  s.edges_ = std::move(out);
  return s;
}

EdgeSet EdgeSet::set_difference(const EdgeSet& other) const {
  std::vector<Edge> out;
  std::set_difference(edges_.begin(), edges_.end(), other.edges_.begin(),
                      other.edges_.end(), std::back_inserter(out));
  EdgeSet s;
  s.edges_ = std::move(out);
  return s;
}

EdgeSet EdgeSet::set_intersection(const EdgeSet& other) const {
  std::vector<Edge> out;
  std::set_intersection(edges_.begin(), edges_.end(), other.edges_.begin(),
                        other.edges_.end(), std::back_inserter(out));
  EdgeSet s;
  s.edges_ = std::move(out);
  return s;
}

Graph Graph::build(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  if (n < 0) throw input_error("Graph: negative vertex count");
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<std::size_t>(n), {});
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw input_error("Graph: endpoint out of range: (" + std::to_string(a) +
                        "," + std::to_string(b) + ") with n=" + std::to_string(n));
    if (a == b)
      throw input_error("Graph: self-loop at vertex " + std::to_string(a));
    canon.emplace_back(a, b);
  }
  std::sort(canon.begin(), canon.end());
  for (std::size_t i = 1; i < canon.size(); ++i)
    if (canon[i] == canon[i - 1])
      throw input_error("Graph: duplicate edge (" + std::to_string(canon[i].u) +
                        "," + std::to_string(canon[i].v) + ")");
  for (const Edge& e : canon) {
    g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    g.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  g.m_ = canon.size();
  return g;
}

Graph Graph::build(int n, const EdgeSet& edges) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(edges.size());
  for (const Edge& e : edges) pairs.emplace_back(e.u, e.v);
  return build(n, pairs);
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  if (v < 0 || v >= n_)
    throw input_error("Graph: vertex " + std::to_string(v) + " out of range");
  return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(Vertex v) const {
  return static_cast<int>(neighbors(v).size());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a == b) return false;
  const auto& nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

EdgeSet Graph::edge_set() const {
  std::vector<Edge> es;
  es.reserve(m_);
  for (Vertex v = 0; v < n_; ++v)
    for (Vertex w : adj_[static_cast<std::size_t>(v)])
      if (v < w) es.emplace_back(v, w);
  return EdgeSet::from_edges(std::move(es));
}

Graph Graph::with_edges(const EdgeSet& extra) const {
  for (const Edge& e : extra)
    if (has_edge(e.u, e.v))
      throw input_error("Graph::with_edges: edge (" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + ") already present");
  return Graph::build(n_, edge_set().set_union(extra));
}

Graph graph_sum(const Graph& g1, const Graph& g2) {
  int n1 = g1.vertex_count();
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(g1.edge_count() + g2.edge_count());
  for (const Edge& e : g1.edge_set()) edges.emplace_back(e.u, e.v);
  for (const Edge& e : g2.edge_set()) edges.emplace_back(e.u + n1, e.v + n1);
  return Graph::build(n1 + g2.vertex_count(), edges);
}

Graph graph_join(const Graph& g1, const Graph& g2) {
  int n1 = g1.vertex_count();
  int n2 = g2.vertex_count();
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(g1.edge_count() + g2.edge_count() +
                static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2));
  for (const Edge& e : g1.edge_set()) edges.emplace_back(e.u, e.v);
  for (const Edge& e : g2.edge_set()) edges.emplace_back(e.u + n1, e.v + n1);
  for (Vertex a = 0; a < n1; ++a)
    for (Vertex b = 0; b < n2; ++b) edges.emplace_back(a, b + n1);
  return Graph::build(n1 + n2, edges);
}

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (!g.has_edge(a, b)) edges.emplace_back(a, b);
  return Graph::build(n, edges);
}

Graph clique(int s) {
  if (s < 0) throw input_error("clique: negative size");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex a = 0; a < s; ++a)
    for (Vertex b = a + 1; b < s; ++b) edges.emplace_back(a, b);
  return Graph::build(s, edges);
}

Graph cycle(int l) {
  if (l < 3) throw input_error("cycle: length must be >= 3, got " + std::to_string(l));
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < l; ++v) edges.emplace_back(v, (v + 1) % l);
  return Graph::build(l, edges);
}

Graph independent(int t) {
  if (t < 0) throw input_error("independent: negative size");
  return Graph::build(t, std::vector<std::pair<Vertex, Vertex>>{});
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& w) {
  std::vector<Vertex> verts = w;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (Vertex v : verts)
    if (v < 0 || v >= g.vertex_count())
      throw input_error("induced_subgraph: vertex " + std::to_string(v) +
                        " out of range");
  std::vector<int> new_id(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < verts.size(); ++i)
    new_id[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v : verts)
    for (Vertex u : g.neighbors(v))
      if (v < u && new_id[static_cast<std::size_t>(u)] >= 0)
        edges.emplace_back(new_id[static_cast<std::size_t>(v)],
                           new_id[static_cast<std::size_t>(u)]);
  InducedSubgraph out;
  out.graph = Graph::build(static_cast<int>(verts.size()), edges);
  out.to_original = std::move(verts);
  return out;
}

namespace {

// Backtracking isomorphism with degree-class pruning: candidate images must
// match on (degree, sorted neighbor degrees).
struct IsoState {
  const Graph* g1;
  const Graph* g2;
  std::vector<int> map;    // g1 vertex -> g2 vertex or -1
  std::vector<bool> used;  // g2 vertex taken

  bool extend(int v) {
    int n = g1->vertex_count();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)]) continue;
      if (g1->degree(v) != g2->degree(w)) continue;
      bool ok = true;
      for (Vertex u : g1->neighbors(v)) {
        if (u < v && !g2->has_edge(map[static_cast<std::size_t>(u)], w)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        // also reject images adjacent to mapped non-neighbors
        for (int u = 0; u < v && ok; ++u) {
          if (!g1->has_edge(u, v) &&
              g2->has_edge(map[static_cast<std::size_t>(u)], w))
            ok = false;
        }
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = true;
      if (extend(v + 1)) return true;
      map[static_cast<std::size_t>(v)] = -1;
      used[static_cast<std::size_t>(w)] = false;
    }
    return false;
  }
};

std::vector<std::vector<int>> degree_profile(const Graph& g) {
  std::vector<std::vector<int>> prof(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> nd;
    nd.reserve(g.neighbors(v).size());
    for (Vertex u : g.neighbors(v)) nd.push_back(g.degree(u));
    std::sort(nd.begin(), nd.end());
    nd.insert(nd.begin(), g.degree(v));
    prof[static_cast<std::size_t>(v)] = std::move(nd);
  }
  return prof;
}

}  // namespace

bool is_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.vertex_count() != g2.vertex_count()) return false;
  if (g1.edge_count() != g2.edge_count()) return false;
  auto p1 = degree_profile(g1);
  auto p2 = degree_profile(g2);
  {
    auto s1 = p1;
    auto s2 = p2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return false;
  }
  IsoState st{&g1, &g2,
              std::vector<int>(static_cast<std::size_t>(g1.vertex_count()), -1),
              std::vector<bool>(static_cast<std::size_t>(g1.vertex_count()), false)};
  return st.extend(0);
}

BipartiteGraph BipartiteGraph::build(
    int p, int q, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  if (p < 0 || q < 0) throw input_error("BipartiteGraph: negative part size");
  BipartiteGraph b;
  b.p_ = p;
  b.q_ = q;
  b.adj_p_.assign(static_cast<std::size_t>(p), {});
  b.adj_q_.assign(static_cast<std::size_t>(q), {});
  std::vector<std::pair<Vertex, Vertex>> canon = edges;
  std::sort(canon.begin(), canon.end());
  for (std::size_t i = 0; i < canon.size(); ++i) {
    auto [u, v] = canon[i];
    if (u < 0 || u >= p)
      throw input_error("BipartiteGraph: P id " + std::to_string(u) + " out of range");
    if (v < 0 || v >= q)
      throw input_error("BipartiteGraph: Q id " + std::to_string(v) + " out of range");
    if (i > 0 && canon[i] == canon[i - 1])
      throw input_error("BipartiteGraph: duplicate edge (" + std::to_string(u) +
                        "," + std::to_string(v) + ")");
    b.adj_p_[static_cast<std::size_t>(u)].push_back(v);
    b.adj_q_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : b.adj_p_) std::sort(nb.begin(), nb.end());
  for (auto& nb : b.adj_q_) std::sort(nb.begin(), nb.end());
  b.m_ = canon.size();
  return b;
}

const std::vector<Vertex>& BipartiteGraph::neighbors_of_p(Vertex v) const {
  if (v < 0 || v >= p_)
    throw input_error("BipartiteGraph: P id " + std::to_string(v) + " out of range");
  return adj_p_[static_cast<std::size_t>(v)];
}

const std::vector<Vertex>& BipartiteGraph::neighbors_of_q(Vertex w) const {
  if (w < 0 || w >= q_)
    throw input_error("BipartiteGraph: Q id " + std::to_string(w) + " out of range");
  return adj_q_[static_cast<std::size_t>(w)];
}

bool BipartiteGraph::has_edge(Vertex pv, Vertex qv) const {
  const auto& nb = neighbors_of_p(pv);
  if (qv < 0 || qv >= q_)
    throw input_error("BipartiteGraph: Q id " + std::to_string(qv) + " out of range");
  return std::binary_search(nb.begin(), nb.end(), qv);
}

PQEdgeSet PQEdgeSet::from_pairs(std::vector<std::pair<Vertex, Vertex>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  PQEdgeSet s;
  s.pairs_ = std::move(pairs);
  return s;
}

bool PQEdgeSet::contains(Vertex pv, Vertex qv) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), std::make_pair(pv, qv));
}

void PQEdgeSet::insert(Vertex pv, Vertex qv) {
  auto e = std::make_pair(pv, qv);
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), e);
  if (it != pairs_.end() && *it == e) return;
  pairs_.insert(it, e);
}

PQEdgeSet PQEdgeSet::set_union(const PQEdgeSet& other) const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(pairs_.size() + other.pairs_.size());
  std::set_union(pairs_.begin(), pairs_.end(), other.pairs_.begin(),
                 other.pairs_.end(), std::back_inserter(out));
  PQEdgeSet s;
  s.pairs_ = std::move(out);
  return s;
}

PQEdgeSet BipartiteGraph::edge_set() const {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(m_);
  for (Vertex v = 0; v < p_; ++v)
    for (Vertex w : adj_p_[static_cast<std::size_t>(v)]) pairs.emplace_back(v, w);
  return PQEdgeSet::from_pairs(std::move(pairs));
}

BipartiteGraph BipartiteGraph::with_edges(const PQEdgeSet& extra) const {
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(m_ + extra.size());
  for (Vertex v = 0; v < p_; ++v)
    for (Vertex w : adj_p_[static_cast<std::size_t>(v)]) edges.emplace_back(v, w);
  for (const auto& [pv, qv] : extra) {
    if (has_edge(pv, qv))
      throw input_error("BipartiteGraph::with_edges: edge already present");
    edges.emplace_back(pv, qv);
  }
  return build(p_, q_, edges);
}

BipartiteGraph BipartiteGraph::transposed() const {
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(m_);
  for (Vertex v = 0; v < p_; ++v)
    for (Vertex w : adj_p_[static_cast<std::size_t>(v)]) edges.emplace_back(w, v);
  return build(q_, p_, edges);
}

}  // namespace ordercraft
