#pragma once

#include <optional>
#include <random>
#include <vector>

#include "ordercraft/graph.hpp"
#include "ordercraft/int128.hpp"
#include "ordercraft/ordering.hpp"

namespace ordercraft {

// Elimination degrees deg(alpha^{-1}(i)) in elimination order.
struct DegreeSequence {
  std::vector<int> degs;
};

// nnz = sum(deg+1), flops = sum(deg+1)^2, omega = max(deg+1).
struct MetricsReport {
  Int128 nnz;
  Int128 flops;
  Int128 omega;
};

// A fill set F making (V, E u F) chordal, plus a witness PEO of the filled
// graph. F is disjoint from E by construction.
struct Triangulation {
  Graph base;
  EdgeSet fill;
  Ordering witness;
};

struct EliminationResult {
  Triangulation triangulation;
  DegreeSequence degrees;
};

// The elimination game: remove vertices in order, turning each removed
// vertex's current neighborhood into a clique. Added edges are the fill.
EliminationResult eliminate(const Graph& g, const Ordering& alpha);

MetricsReport metrics(const DegreeSequence& d);

// Maximum-cardinality search with lowest-id tie-breaking. Returns a PEO if
// the graph is chordal, std::nullopt otherwise.
std::optional<Ordering> find_peo(const Graph& g);

// Same search with seeded random tie-breaking; exists to exercise the
// PEO-independence of the degree multiset.
std::optional<Ordering> find_peo_random(const Graph& g, std::mt19937_64& rng);

bool is_chordal(const Graph& g);

// true iff eliminate(g, alpha) yields empty fill.
bool is_peo(const Graph& g, const Ordering& alpha);

// Shrinks the fill set to an inclusion-minimal triangulation: repeatedly
// drop any single fill edge whose removal keeps the graph chordal, in
// canonical edge order, until a full pass removes nothing.
Triangulation minimalize(const Graph& g, const Triangulation& t);

}  // namespace ordercraft
