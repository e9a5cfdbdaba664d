#include "ordercraft/heuristics.hpp"

#include <algorithm>

#include "ordercraft/errors.hpp"

namespace ordercraft {

namespace {

// Dynamic elimination graph shared by the two greedy heuristics.
struct WorkGraph {
  std::vector<std::vector<Vertex>> adj;  // sorted live neighbors
  std::vector<bool> dead;

  explicit WorkGraph(const Graph& g)
      : adj(static_cast<std::size_t>(g.vertex_count())),
        dead(static_cast<std::size_t>(g.vertex_count()), false) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      adj[static_cast<std::size_t>(v)] = g.neighbors(v);
  }

  bool connected(Vertex a, Vertex b) const {
    const auto& nb = adj[static_cast<std::size_t>(a)];
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  void add_edge(Vertex a, Vertex b) {
    auto& na = adj[static_cast<std::size_t>(a)];
    auto it = std::lower_bound(na.begin(), na.end(), b);
    if (it != na.end() && *it == b) return;
    na.insert(it, b);
    auto& nbv = adj[static_cast<std::size_t>(b)];
    nbv.insert(std::lower_bound(nbv.begin(), nbv.end(), a), a);
  }

  // Eliminates v: cliques its neighborhood and removes it.
  void eliminate(Vertex v) {
    auto nb = adj[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) add_edge(nb[i], nb[j]);
    for (Vertex u : nb) {
      auto& nu = adj[static_cast<std::size_t>(u)];
      auto it = std::lower_bound(nu.begin(), nu.end(), v);
      if (it != nu.end() && *it == v) nu.erase(it);
    }
    adj[static_cast<std::size_t>(v)].clear();
    dead[static_cast<std::size_t>(v)] = true;
  }

  long long deficiency(Vertex v) const {
    const auto& nb = adj[static_cast<std::size_t>(v)];
    long long missing = 0;
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!connected(nb[i], nb[j])) ++missing;
    return missing;
  }
};

}  // namespace

Ordering min_degree_order(const Graph& g) {
  const int n = g.vertex_count();
  WorkGraph w(g);
  std::vector<Vertex> seq;
  seq.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    std::size_t best_deg = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (w.dead[static_cast<std::size_t>(v)]) continue;
      std::size_t d = w.adj[static_cast<std::size_t>(v)].size();
      if (best < 0 || d < best_deg) {
        best = v;
        best_deg = d;
      }
    }
    seq.push_back(best);
    w.eliminate(best);
  }
  return Ordering::from_sequence(std::move(seq));
}

Ordering min_deficiency_order(const Graph& g) {
  const int n = g.vertex_count();
  WorkGraph w(g);
  std::vector<long long> defs(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) defs[static_cast<std::size_t>(v)] = w.deficiency(v);
  std::vector<Vertex> seq;
  seq.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (w.dead[static_cast<std::size_t>(v)]) continue;
      if (best < 0 || defs[static_cast<std::size_t>(v)] < defs[static_cast<std::size_t>(best)])
        best = v;
    }
    // Deficiency changes only where the neighborhood structure changed:
    // the neighbors of the eliminated vertex, and any vertex adjacent to
    // both ends of a newly added edge.
    auto nb = w.adj[static_cast<std::size_t>(best)];
    std::vector<Vertex> dirty = nb;
    std::vector<std::pair<Vertex, Vertex>> added;
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!w.connected(nb[i], nb[j])) added.emplace_back(nb[i], nb[j]);
    w.eliminate(best);
    for (const auto& [a, b] : added)
      for (Vertex u = 0; u < n; ++u)
        if (!w.dead[static_cast<std::size_t>(u)] && w.connected(u, a) && w.connected(u, b))
          dirty.push_back(u);
    std::sort(dirty.begin(), dirty.end());
    dirty.erase(std::unique(dirty.begin(), dirty.end()), dirty.end());
    for (Vertex u : dirty)
      if (!w.dead[static_cast<std::size_t>(u)])
        defs[static_cast<std::size_t>(u)] = w.deficiency(u);
    seq.push_back(best);
  }
  return Ordering::from_sequence(std::move(seq));
}

HeuristicReport compare(const Graph& g, const std::vector<NamedOrdering>& orderings,
                        const std::string& graph_name) {
  HeuristicReport rep;
  rep.graph_name = graph_name;
  rep.vertices = g.vertex_count();
  rep.edges = static_cast<long long>(g.edge_count());
  for (const auto& [name, ord] : orderings) {
    auto res = eliminate(g, ord);
    OrderingStats st;
    st.name = name;
    st.metrics = metrics(res.degrees);
    st.fill_edges = Int128(static_cast<long long>(res.triangulation.fill.size()));
    rep.orderings.push_back(std::move(st));
  }
  for (std::size_t a = 0; a < rep.orderings.size(); ++a) {
    for (std::size_t b = 0; b < rep.orderings.size(); ++b) {
      if (a == b) continue;
      const auto& ma = rep.orderings[a].metrics;
      const auto& mb = rep.orderings[b].metrics;
      if (ma.nnz < mb.nnz && ma.flops > mb.flops) {
        auto pct = [](Int128 x, Int128 y) {
          return 100.0 * (static_cast<double>(x.value()) / static_cast<double>(y.value()) - 1.0);
        };
        rep.inversions.push_back(Inversion{a, b, pct(ma.nnz, mb.nnz), pct(ma.flops, mb.flops)});
      }
    }
  }
  return rep;
}

}  // namespace ordercraft
