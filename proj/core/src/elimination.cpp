#include "ordercraft/elimination.hpp"

#include <algorithm>

#include "ordercraft/errors.hpp"

namespace ordercraft {

EliminationResult eliminate(const Graph& g, const Ordering& alpha) {
  const int n = g.vertex_count();
  if (alpha.size() != n)
    throw input_error("eliminate: ordering size " + std::to_string(alpha.size()) +
                      " does not match vertex count " + std::to_string(n));

  // Working adjacency as sorted vectors; eliminated vertices are removed
  // from their neighbors' lists so every list holds live vertices only.
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);

  auto erase_sorted = [](std::vector<Vertex>& vec, Vertex x) {
    auto it = std::lower_bound(vec.begin(), vec.end(), x);
    if (it != vec.end() && *it == x) vec.erase(it);
  };
  auto insert_sorted = [](std::vector<Vertex>& vec, Vertex x) {
    auto it = std::lower_bound(vec.begin(), vec.end(), x);
    if (it == vec.end() || *it != x) {
      vec.insert(it, x);
      return true;
    }
    return false;
  };

  std::vector<Edge> fill;
  DegreeSequence degs;
  degs.degs.reserve(static_cast<std::size_t>(n));

  for (int i = 0; i < n; ++i) {
    Vertex v = alpha.vertex_at_index(i);
    auto& nb = adj[static_cast<std::size_t>(v)];
    degs.degs.push_back(static_cast<int>(nb.size()));
    // Clique the current neighborhood.
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        Vertex x = nb[a], y = nb[b];
        if (insert_sorted(adj[static_cast<std::size_t>(x)], y)) {
          insert_sorted(adj[static_cast<std::size_t>(y)], x);
          if (!g.has_edge(x, y)) fill.emplace_back(x, y);
        }
      }
    }
    for (Vertex u : nb) erase_sorted(adj[static_cast<std::size_t>(u)], v);
    nb.clear();
  }

  EliminationResult out;
  out.triangulation.base = g;
  out.triangulation.fill = EdgeSet::from_edges(std::move(fill));
  out.triangulation.witness = alpha;
  out.degrees = std::move(degs);
  return out;
}

MetricsReport metrics(const DegreeSequence& d) {
  MetricsReport r;
  Int128 nnz(0), flops(0), omega(0);
  for (int deg : d.degs) {
    Int128 c(deg + 1);
    nnz += c;
    flops += c * c;
    if (c > omega) omega = c;
  }
  r.nnz = nnz;
  r.flops = flops;
  r.omega = omega;
  return r;
}

namespace {

// MCS visits vertices in decreasing position order; tie_break picks among
// the max-weight candidates.
template <typename TieBreak>
Ordering mcs_order(const Graph& g, TieBreak tie_break) {
  const int n = g.vertex_count();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<bool> numbered(static_cast<std::size_t>(n), false);
  std::vector<Vertex> seq(static_cast<std::size_t>(n));
  std::vector<Vertex> candidates;
  for (int i = n - 1; i >= 0; --i) {
    int best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!numbered[static_cast<std::size_t>(v)])
        best = std::max(best, weight[static_cast<std::size_t>(v)]);
    candidates.clear();
    for (Vertex v = 0; v < n; ++v)
      if (!numbered[static_cast<std::size_t>(v)] &&
          weight[static_cast<std::size_t>(v)] == best)
        candidates.push_back(v);
    Vertex v = tie_break(candidates);
    numbered[static_cast<std::size_t>(v)] = true;
    seq[static_cast<std::size_t>(i)] = v;
    for (Vertex u : g.neighbors(v))
      if (!numbered[static_cast<std::size_t>(u)]) ++weight[static_cast<std::size_t>(u)];
  }
  return Ordering::from_sequence(std::move(seq));
}

}  // namespace

std::optional<Ordering> find_peo(const Graph& g) {
  Ordering o = mcs_order(g, [](const std::vector<Vertex>& c) { return c.front(); });
  if (is_peo(g, o)) return o;
  return std::nullopt;
}

std::optional<Ordering> find_peo_random(const Graph& g, std::mt19937_64& rng) {
  Ordering o = mcs_order(g, [&rng](const std::vector<Vertex>& c) {
    std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
    return c[pick(rng)];
  });
  if (is_peo(g, o)) return o;
  return std::nullopt;
}

bool is_chordal(const Graph& g) { return find_peo(g).has_value(); }

bool is_peo(const Graph& g, const Ordering& alpha) {
  return eliminate(g, alpha).triangulation.fill.empty();
}

Triangulation minimalize(const Graph& g, const Triangulation& t) {
  if (!t.fill.set_intersection(g.edge_set()).empty())
    throw input_error("minimalize: fill set intersects the base edge set");
  Graph filled = g.with_edges(t.fill);
  auto peo = find_peo(filled);
  if (!peo) throw input_error("minimalize: input fill set is not a triangulation");

  EdgeSet fill = t.fill;
  bool removed_any = true;
  while (removed_any) {
    removed_any = false;
    std::vector<Edge> snapshot(fill.begin(), fill.end());  // canonical order
    for (const Edge& e : snapshot) {
      EdgeSet candidate = fill;
      candidate.erase(e.u, e.v);
      Graph h = g.with_edges(candidate);
      if (is_chordal(h)) {
        fill = candidate;
        removed_any = true;
      }
    }
  }

  Triangulation out;
  out.base = g;
  out.fill = fill;
  Graph h = g.with_edges(fill);
  auto w = find_peo(h);
  if (!w) throw invariant_error("minimalize: result unexpectedly not chordal");
  out.witness = *w;
  return out;
}

}  // namespace ordercraft
