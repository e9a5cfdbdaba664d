#pragma once

#include <cstdint>
#include <vector>

#include "ordercraft/elimination.hpp"
#include "ordercraft/graph.hpp"
#include "ordercraft/int128.hpp"
#include "ordercraft/ordering.hpp"

namespace ordercraft {

enum class SearchMetric { fill, flops, treewidth };

struct ExactResult {
  SearchMetric metric;
  Int128 value;      // optimum of the metric over all orderings
  Ordering witness;  // an ordering attaining it (lowest-id tie-breaks)
};

struct SearchLimits {
  int max_vertices = 22;
  // Refuse rather than thrash: the DP tables take ~8 bytes per subset.
  std::size_t max_bytes = static_cast<std::size_t>(1) << 31;  // 2 GiB
};

// Exact minimization over all n! orderings via dynamic programming over
// vertex subsets: the closed elimination degree of v after eliminating the
// set S depends only on (S, v), so value(S) = min over v not in S of
// combine(cdeg(S, v), value(S u {v})).
ExactResult min_fill_exact(const Graph& g, const SearchLimits& limits = {});
ExactResult min_flops_exact(const Graph& g, const SearchLimits& limits = {});
ExactResult treewidth_exact(const Graph& g, const SearchLimits& limits = {});
ExactResult exact_search(const Graph& g, SearchMetric metric,
                         const SearchLimits& limits = {});

// Closed elimination degree of v when eliminated right after the set S
// (vertices reachable from v through S, plus v itself). Exposed for the
// DP-soundness property tests.
int closed_degree_after(const Graph& g, std::uint32_t eliminated_mask, Vertex v);

// Samples random orderings, minimalizes each elimination fill and dedupes
// the filled graphs up to isomorphism. Intended for small graphs.
std::vector<Triangulation> enumerate_minimal_triangulations(const Graph& g,
                                                            int samples,
                                                            std::uint64_t seed);

// Worker count: ORDERCRAFT_THREADS caps the hardware default.
int worker_count();

}  // namespace ordercraft
