#pragma once

#include <string>
#include <vector>

#include "ordercraft/elimination.hpp"
#include "ordercraft/graph.hpp"
#include "ordercraft/ordering.hpp"

namespace ordercraft {

// Greedy minimum elimination degree, ties broken toward the lowest id.
Ordering min_degree_order(const Graph& g);

// Greedy minimum deficiency (missing edges among the current neighbors),
// ties broken toward the lowest id. Deficiency is computed exactly.
Ordering min_deficiency_order(const Graph& g);

struct NamedOrdering {
  std::string name;
  Ordering ordering;
};

struct OrderingStats {
  std::string name;
  MetricsReport metrics;
  Int128 fill_edges;
};

// A pair where one ordering wins on fill but loses on FLOPs.
struct Inversion {
  std::size_t a;
  std::size_t b;        // nnz(a) < nnz(b) but flops(a) > flops(b)
  double fill_pct;      // 100 * (nnz(a)/nnz(b) - 1), negative
  double flops_pct;     // 100 * (flops(a)/flops(b) - 1), positive
};

struct HeuristicReport {
  std::string graph_name;
  int vertices = 0;
  long long edges = 0;
  std::vector<OrderingStats> orderings;
  std::vector<Inversion> inversions;
};

HeuristicReport compare(const Graph& g, const std::vector<NamedOrdering>& orderings,
                        const std::string& graph_name = "");

}  // namespace ordercraft
