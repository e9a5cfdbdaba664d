#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ordercraft/graph.hpp"
#include "ordercraft/int128.hpp"
#include "ordercraft/ordering.hpp"

namespace ordercraft {

// The parameter polynomial c = c2 X^2 + c1 X + c0 with non-negative integer
// coefficients. Evaluated at n it yields the linear coefficient of the
// position map f(x) = x^2 + c(n) x.
struct CostPolynomial {
  long long c2 = 0;
  long long c1 = 0;
  long long c0 = 0;

  Int128 eval(Int128 n) const {
    return Int128(c2) * n * n + Int128(c1) * n + Int128(c0);
  }
};

inline Int128 position_value(Int128 x, Int128 cn) { return x * x + cn * x; }

struct ArrangementCost {
  Int128 linear;
  Int128 quadratic;
};

// l(alpha) = sum over edges of |alpha(u) - alpha(v)|.
Int128 linear_cost(const Graph& g, const Ordering& alpha);

// q(alpha) = sum over edges of |f(alpha(u)) - f(alpha(v))| with c evaluated
// at the vertex count of g.
Int128 quadratic_cost(const Graph& g, const Ordering& alpha, const CostPolynomial& c);

ArrangementCost arrangement_cost(const Graph& g, const Ordering& alpha,
                                 const CostPolynomial& c);

// phi(e): the quadratic cost contributed by one edge.
Int128 edge_cost(const Ordering& alpha, Vertex u, Vertex v, Int128 cn);

// Closed form for arranging K_s at positions r+1..r+s:
// s (s^2 - 1) (2r + c + s + 1) / 6.
Int128 clique_cost(long long s, long long r, Int128 c_value);

// Max/Min equivalence: complement instance with threshold
// k' = n (n^2 - 1) (c + n + 1) / 6 - k.
struct OqaInstance {
  Graph graph;
  Int128 threshold;
  CostPolynomial c;
};
OqaInstance duality_complement(const Graph& g, Int128 k, const CostPolynomial& c);

// Cut sizes |delta(X_j)| for j = 1..n where X_j holds the first j arranged
// vertices; the last entry is always 0.
std::vector<long long> cut_profile(const Graph& g, const Ordering& alpha);

// Repositions vertex w to index j (both in the ordering's index space,
// 0-based), shifting the vertices in between. No precondition checks; the
// checked move operations and the regression fixtures build on it.
Ordering reposition(const Ordering& alpha, Vertex w, int j);

// Moves the isolated vertex w right to index j (0-based). Requires
// alpha-index(w) <= j and |cut(X_k)| <= |cut(X_{j+1})| for every prefix
// length k in [index(w)+1, j+1]. Guarantees q(alpha') >= q(alpha) for every
// c >= 0. Throws input_error if a precondition fails.
Ordering move_iso_right(const Graph& g, const Ordering& alpha, Vertex w, int j);

// Moves the isolated block at indices j+s..j+s+f-1 (0-based) left across the
// s vertices at indices j..j+s-1. Requires the block to be isolated, the
// cuts |delta(X_{j+k})| for 1 <= k <= s+f to be strictly below |delta(X_j)|
// (prefix lengths), and 2(j+1) + c + f >= 2 |delta(X_{j+s+f})| (s-1).
// Guarantees q(alpha') >= q(alpha).
Ordering move_block_left(const Graph& g, const Ordering& alpha, int j, int s, int f,
                         Int128 c_value);

// --- MaxCut -> OQA(c) --------------------------------------------------

struct MaxCutReduction {
  Graph padded;             // original graph plus isolated padding vertices
  int original_count;       // ids < original_count are original vertices
  Int128 padding;           // number of padding vertices
  Int128 threshold;         // padding^2 * k' (n^10 k' at canonical padding)
  CostPolynomial c;
};

// Builds the OQA instance for a MaxCut instance (g, k'). Canonical padding
// is n^5; smaller paddings are allowed for desk-scale property tests and
// use the same threshold structure padding^2 * k'.
MaxCutReduction maxcut_to_oqa(const Graph& g, Int128 k_prime,
                              const CostPolynomial& c = {},
                              Int128 padding = Int128(-1));

// Arrangement realizing a cut: X' first, the padding block, then the rest;
// id order inside each part. q(alpha) >= padding^2 * |delta(X')|.
Ordering cut_to_arrangement(const MaxCutReduction& inst, const std::vector<Vertex>& x_side);

// --- normalization (the two-stage rearrangement) ------------------------

struct BlockStructure {
  std::vector<long long> boundaries;  // b_1 < ... < b_h = total (prefix lengths)
  std::vector<long long> originals;   // n_k per part
  std::vector<long long> padding;     // f_k per part
  std::vector<long long> boundary_cuts;  // |delta(X_{b_k})|, strictly decreasing
};

struct NormalizeMove {
  enum class Kind { iso_right, block_left } kind;
  Vertex w = -1;  // iso_right
  int j = 0;      // target index (iso_right) / block parameter j (block_left)
  int s = 0;
  int f = 0;
  Int128 q_after;
};

struct NormalizeResult {
  Ordering arrangement;
  BlockStructure blocks;
  std::vector<NormalizeMove> trace;
  Int128 q_initial;
  Int128 q_final;
};

// Rearranges alpha without ever decreasing q so that all padding vertices
// end up in one contiguous run right after the first block of originals:
// stage 1 packs padding against the rightmost locally-largest cuts, stage 2
// consolidates the padding blocks leftward. Every move is applied through
// the checked move operations; a failed precondition is surfaced loudly.
NormalizeResult normalize_arrangement(const Graph& g, int original_count,
                                      const Ordering& alpha, const CostPolynomial& c);

// Cut side read off a normalized arrangement: the original vertices in the
// first block.
std::vector<Vertex> extract_cut_side(const NormalizeResult& res, int original_count);

// --- brute-force oracles -------------------------------------------------

enum class Direction { minimize, maximize };

struct OqaExactResult {
  Int128 value;
  Ordering witness;
};
// Exhaustive over all n! orderings; n <= 10.
OqaExactResult oqa_exact(const Graph& g, const CostPolynomial& c, Direction dir,
                         int max_vertices = 10);

struct MaxCutResult {
  long long value;
  std::vector<Vertex> side;
};
// Exhaustive over all 2^(n-1) sides; n <= 20.
MaxCutResult max_cut_exact(const Graph& g, int max_vertices = 20);

long long cut_size(const Graph& g, const std::vector<Vertex>& side);

}  // namespace ordercraft
