#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace ordercraft {

using Vertex = int;

// An unordered vertex pair stored canonically as (min, max).
struct Edge {
  Vertex u;
  Vertex v;

  Edge() : u(0), v(0) {}
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v;
  }
  friend bool operator<(const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  }
};

// A deduplicated, canonically sorted set of edges. Carrier for fill sets and
// the reduction gadget edge families.
class EdgeSet {
 public:
  EdgeSet() = default;
  static EdgeSet from_pairs(const std::vector<std::pair<Vertex, Vertex>>& pairs);
  static EdgeSet from_edges(std::vector<Edge> edges);

  bool contains(Vertex a, Vertex b) const;
  bool contains(const Edge& e) const { return contains(e.u, e.v); }
  void insert(Vertex a, Vertex b);
  void erase(Vertex a, Vertex b);
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  const std::vector<Edge>& edges() const { return edges_; }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }

  EdgeSet set_union(const EdgeSet& other) const;
  EdgeSet set_difference(const EdgeSet& other) const;
  EdgeSet set_intersection(const EdgeSet& other) const;

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) {
    return a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;  // sorted, unique
};

// Simple undirected graph on densely numbered vertices 0..n-1.
// Immutable after construction; neighbor lists are kept sorted so that
// elimination, hashing and serialization are deterministic.
class Graph {
 public:
  Graph() = default;

  // Validates and builds. Rejects out-of-range endpoints, self-loops and
  // duplicate edges loudly; reduction gadgets must fail, not self-repair.
  static Graph build(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);
  static Graph build(int n, const EdgeSet& edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return m_; }
  const std::vector<Vertex>& neighbors(Vertex v) const;
  int degree(Vertex v) const;
  bool has_edge(Vertex a, Vertex b) const;
  bool is_isolated(Vertex v) const { return degree(v) == 0; }

  EdgeSet edge_set() const;

  Graph with_edges(const EdgeSet& extra) const;  // union; extra must be disjoint from E

 private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
};

// G1 + G2: disjoint union; G2's ids are shifted by G1's vertex count.
Graph graph_sum(const Graph& g1, const Graph& g2);

// G1 v G2: sum plus all V1 x V2 cross edges. G1 ids precede G2 ids.
Graph graph_join(const Graph& g1, const Graph& g2);

Graph complement(const Graph& g);

Graph clique(int s);
Graph cycle(int l);       // l >= 3
Graph independent(int t);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_original;  // new id -> original id (sorted ascending)
};
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& w);

// Exhaustive backtracking with degree-class pruning. Intended for small
// graphs (<= ~20 vertices); may be slow above that.
bool is_isomorphic(const Graph& g1, const Graph& g2);

// A deduplicated sorted set of cross-partition pairs (p-id, q-id). The two
// ids live in different name spaces, so pairs are kept directed and are not
// min/max-canonicalized like EdgeSet entries.
class PQEdgeSet {
 public:
  PQEdgeSet() = default;
  static PQEdgeSet from_pairs(std::vector<std::pair<Vertex, Vertex>> pairs);

  bool contains(Vertex pv, Vertex qv) const;
  void insert(Vertex pv, Vertex qv);
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const std::vector<std::pair<Vertex, Vertex>>& pairs() const { return pairs_; }
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

  PQEdgeSet set_union(const PQEdgeSet& other) const;

  friend bool operator==(const PQEdgeSet& a, const PQEdgeSet& b) {
    return a.pairs_ == b.pairs_;
  }

 private:
  std::vector<std::pair<Vertex, Vertex>> pairs_;  // sorted, unique
};

// Bipartite graph (P, Q, E) with parts numbered 0..p-1 and 0..q-1.
// P is the structurally designated partition; operations that need a
// different designated side take it as an explicit argument.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  static BipartiteGraph build(int p, int q,
                              const std::vector<std::pair<Vertex, Vertex>>& edges);

  int p() const { return p_; }
  int q() const { return q_; }
  std::size_t edge_count() const { return m_; }
  const std::vector<Vertex>& neighbors_of_p(Vertex v) const;
  const std::vector<Vertex>& neighbors_of_q(Vertex w) const;
  bool has_edge(Vertex pv, Vertex qv) const;

  PQEdgeSet edge_set() const;

  BipartiteGraph with_edges(const PQEdgeSet& extra) const;
  BipartiteGraph transposed() const;  // swap the roles of P and Q

 private:
  int p_ = 0;
  int q_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<Vertex>> adj_p_;  // p-id -> sorted q-ids
  std::vector<std::vector<Vertex>> adj_q_;  // q-id -> sorted p-ids
};

// --- edge list text format ---------------------------------------------
// First line "n m", then m lines "u v" with 1-based ids; '#' starts a
// comment. The writer emits edges in canonical sorted order.

Graph read_edge_list(std::istream& in, const std::string& source_name = "<stream>");
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

// Bipartite variant: first line "p q m", then m lines "u v" where u is a
// 1-based P id and v a 1-based Q id.
BipartiteGraph read_bipartite_list(std::istream& in,
                                   const std::string& source_name = "<stream>");
BipartiteGraph read_bipartite_list_file(const std::string& path);
void write_bipartite_list(std::ostream& out, const BipartiteGraph& b);
void write_bipartite_list_file(const std::string& path, const BipartiteGraph& b);

}  // namespace ordercraft
