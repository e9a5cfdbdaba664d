#include "ordercraft/exact_search.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "ordercraft/errors.hpp"
#include "ordercraft/rand_util.hpp"

namespace ordercraft {

int worker_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("ORDERCRAFT_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) hw = std::min<long>(hw, v);
  }
  return hw;
}

namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (Vertex u : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= Mask(1) << u;
  return adj;
}

// Connected components of G[S] together with their outside boundaries
// N(C) \ S. At most n components; returned as parallel mask arrays.
struct Components {
  int count = 0;
  Mask comp[32];
  Mask boundary[32];
};

Components components_of(const std::vector<Mask>& adj, Mask s) {
  Components out;
  Mask todo = s;
  while (todo) {
    int seed = std::countr_zero(todo);
    Mask comp = Mask(1) << seed;
    Mask frontier = comp;
    Mask nbhood = 0;
    while (frontier) {
      Mask grow = 0;
      Mask f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        grow |= adj[static_cast<std::size_t>(v)];
      }
      nbhood |= grow;
      frontier = grow & s & ~comp;
      comp |= frontier;
    }
    out.comp[out.count] = comp;
    out.boundary[out.count] = nbhood & ~s;
    ++out.count;
    todo &= ~comp;
  }
  return out;
}

// cdeg(S, v) for every v outside S, computed from the component boundaries.
void closed_degrees(const std::vector<Mask>& adj, Mask s, const Components& cs,
                    int n, int* cdeg_out) {
  for (int v = 0; v < n; ++v) {
    Mask bit = Mask(1) << v;
    if (s & bit) continue;
    Mask reach = adj[static_cast<std::size_t>(v)] & ~s;
    for (int c = 0; c < cs.count; ++c)
      if (adj[static_cast<std::size_t>(v)] & cs.comp[c]) reach |= cs.boundary[c];
    reach &= ~bit;
    cdeg_out[v] = std::popcount(reach) + 1;
  }
}

struct DpTables {
  std::vector<std::int32_t> value;  // indexed by eliminated-set mask
};

// value(S) for the given metric; combine is + for fill/flops, max for
// treewidth. Cost of eliminating v after S: cdeg for fill, cdeg^2 for
// flops, cdeg for treewidth.
DpTables run_dp(const Graph& g, SearchMetric metric) {
  const int n = g.vertex_count();
  const auto adj = adjacency_masks(g);
  const Mask full = n == 32 ? ~Mask(0) : (Mask(1) << n) - 1;

  DpTables t;
  t.value.assign(std::size_t(1) << n, 0);

  // Subsets grouped by popcount, processed from largest sets down; within a
  // layer every subset depends only on the layer above, so workers can split
  // a layer freely and the result is identical to the sequential run.
  std::vector<std::vector<Mask>> layers(static_cast<std::size_t>(n) + 1);
  for (Mask s = 0; s <= full; ++s) {
    layers[static_cast<std::size_t>(std::popcount(s))].push_back(s);
    if (s == full) break;
  }

  auto process = [&](Mask s) {
    if (s == full) return;
    Components cs = components_of(adj, s);
    int cdeg[32];
    closed_degrees(adj, s, cs, n, cdeg);
    std::int64_t best = -1;
    for (int v = 0; v < n; ++v) {
      Mask bit = Mask(1) << v;
      if (s & bit) continue;
      std::int64_t next = t.value[s | bit];
      std::int64_t cost;
      switch (metric) {
        case SearchMetric::fill: cost = cdeg[v] + next; break;
        case SearchMetric::flops: cost = std::int64_t(cdeg[v]) * cdeg[v] + next; break;
        case SearchMetric::treewidth: cost = std::max<std::int64_t>(cdeg[v], next); break;
        default: cost = 0;
      }
      if (best < 0 || cost < best) best = cost;
    }
    t.value[s] = static_cast<std::int32_t>(best);
  };

  const int workers = worker_count();
  for (int k = n - 1; k >= 0; --k) {
    const auto& layer = layers[static_cast<std::size_t>(k)];
    if (workers == 1 || layer.size() < 1024) {
      for (Mask s : layer) process(s);
    } else {
      std::vector<std::thread> pool;
      std::size_t chunk = (layer.size() + workers - 1) / workers;
      for (int w = 0; w < workers; ++w) {
        std::size_t lo = std::min(layer.size(), w * chunk);
        std::size_t hi = std::min(layer.size(), lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
          for (std::size_t i = lo; i < hi; ++i) process(layer[i]);
        });
      }
      for (auto& th : pool) th.join();
    }
  }
  return t;
}

Ordering reconstruct_witness(const Graph& g, SearchMetric metric, const DpTables& t) {
  const int n = g.vertex_count();
  const auto adj = adjacency_masks(g);
  std::vector<Vertex> seq;
  seq.reserve(static_cast<std::size_t>(n));
  Mask s = 0;
  for (int step = 0; step < n; ++step) {
    Components cs = components_of(adj, s);
    int cdeg[32];
    closed_degrees(adj, s, cs, n, cdeg);
    int chosen = -1;
    for (int v = 0; v < n; ++v) {
      Mask bit = Mask(1) << v;
      if (s & bit) continue;
      std::int64_t next = t.value[s | bit];
      std::int64_t cost;
      switch (metric) {
        case SearchMetric::fill: cost = cdeg[v] + next; break;
        case SearchMetric::flops: cost = std::int64_t(cdeg[v]) * cdeg[v] + next; break;
        case SearchMetric::treewidth: cost = std::max<std::int64_t>(cdeg[v], next); break;
        default: cost = 0;
      }
      if (cost == t.value[s]) {
        chosen = v;  // lowest id attaining the optimum
        break;
      }
    }
    if (chosen < 0) throw invariant_error("exact_search: witness reconstruction failed");
    seq.push_back(chosen);
    s |= Mask(1) << chosen;
  }
  return Ordering::from_sequence(std::move(seq));
}

}  // namespace

int closed_degree_after(const Graph& g, std::uint32_t eliminated_mask, Vertex v) {
  if (g.vertex_count() > 32)
    throw size_limit_error("closed_degree_after: more than 32 vertices");
  const auto adj = adjacency_masks(g);
  Components cs = components_of(adj, eliminated_mask);
  std::vector<int> cdeg(static_cast<std::size_t>(g.vertex_count()), 0);
  closed_degrees(adj, eliminated_mask, cs, g.vertex_count(), cdeg.data());
  return cdeg[static_cast<std::size_t>(v)];
}

ExactResult exact_search(const Graph& g, SearchMetric metric, const SearchLimits& limits) {
  const int n = g.vertex_count();
  if (n > limits.max_vertices || n > 32)
    throw size_limit_error("exact_search: " + std::to_string(n) +
                           " vertices exceeds the limit of " +
                           std::to_string(std::min(limits.max_vertices, 32)));
  if (n > 0) {
    std::size_t need = (std::size_t(1) << n) * (sizeof(std::int32_t) + sizeof(Mask));
    if (need > limits.max_bytes)
      throw size_limit_error("exact_search: DP tables would need " +
                             std::to_string(need) + " bytes, over the cap of " +
                             std::to_string(limits.max_bytes));
  }
  ExactResult out;
  out.metric = metric;
  if (n == 0) {
    out.value = Int128(0);
    out.witness = Ordering::identity(0);
    return out;
  }
  DpTables t = run_dp(g, metric);
  out.value = Int128(t.value[0]);
  out.witness = reconstruct_witness(g, metric, t);
  return out;
}

ExactResult min_fill_exact(const Graph& g, const SearchLimits& limits) {
  return exact_search(g, SearchMetric::fill, limits);
}
ExactResult min_flops_exact(const Graph& g, const SearchLimits& limits) {
  return exact_search(g, SearchMetric::flops, limits);
}
ExactResult treewidth_exact(const Graph& g, const SearchLimits& limits) {
  return exact_search(g, SearchMetric::treewidth, limits);
}

std::vector<Triangulation> enumerate_minimal_triangulations(const Graph& g,
                                                            int samples,
                                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Triangulation> classes;
  std::vector<Graph> filled_reps;
  std::vector<Vertex> seq(static_cast<std::size_t>(g.vertex_count()));
  std::iota(seq.begin(), seq.end(), 0);
  for (int i = 0; i < samples; ++i) {
    fisher_yates(rng, seq);
    Ordering alpha = Ordering::from_sequence(seq);
    auto res = eliminate(g, alpha);
    Triangulation minimal = minimalize(g, res.triangulation);
    Graph filled = g.with_edges(minimal.fill);
    bool known = false;
    for (const Graph& rep : filled_reps) {
      if (rep.edge_count() == filled.edge_count() && is_isomorphic(rep, filled)) {
        known = true;
        break;
      }
    }
    if (!known) {
      filled_reps.push_back(filled);
      classes.push_back(std::move(minimal));
    }
  }
  return classes;
}

}  // namespace ordercraft
