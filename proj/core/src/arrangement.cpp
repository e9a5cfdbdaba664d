#include "ordercraft/arrangement.hpp"

#include <algorithm>
#include <numeric>

#include "ordercraft/errors.hpp"

namespace ordercraft {

Int128 edge_cost(const Ordering& alpha, Vertex u, Vertex v, Int128 cn) {
  Int128 a(alpha.position(u)), b(alpha.position(v));
  return (position_value(a, cn) - position_value(b, cn)).abs();
}

Int128 linear_cost(const Graph& g, const Ordering& alpha) {
  if (alpha.size() != g.vertex_count())
    throw input_error("linear_cost: ordering does not match the graph");
  Int128 total(0);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (Vertex u : g.neighbors(v))
      if (v < u) total += Int128(std::abs(alpha.position(v) - alpha.position(u)));
  return total;
}

Int128 quadratic_cost(const Graph& g, const Ordering& alpha, const CostPolynomial& c) {
  if (alpha.size() != g.vertex_count())
    throw input_error("quadratic_cost: ordering does not match the graph");
  Int128 cn = c.eval(Int128(g.vertex_count()));
  Int128 total(0);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (Vertex u : g.neighbors(v))
      if (v < u) total += edge_cost(alpha, v, u, cn);
  return total;
}

ArrangementCost arrangement_cost(const Graph& g, const Ordering& alpha,
                                 const CostPolynomial& c) {
  return ArrangementCost{linear_cost(g, alpha), quadratic_cost(g, alpha, c)};
}

Int128 clique_cost(long long s, long long r, Int128 c_value) {
  if (s < 1) throw input_error("clique_cost: s must be >= 1");
  Int128 ss(s);
  return ss * (ss * ss - Int128(1)) *
         (Int128(2 * r) + c_value + ss + Int128(1)) / Int128(6);
}

OqaInstance duality_complement(const Graph& g, Int128 k, const CostPolynomial& c) {
  Int128 n(g.vertex_count());
  Int128 full = n * (n * n - Int128(1)) *
                (c.eval(n) + n + Int128(1)) / Int128(6);
  return OqaInstance{complement(g), full - k, c};
}

std::vector<long long> cut_profile(const Graph& g, const Ordering& alpha) {
  const int n = g.vertex_count();
  if (alpha.size() != n) throw input_error("cut_profile: ordering does not match the graph");
  // delta(X_j) changes only at edge endpoints: an edge (u,v) with
  // index(u) < index(v) crosses exactly the cuts index(u) .. index(v)-1.
  std::vector<long long> diff(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v))
      if (v < u) {
        int a = alpha.position(v) - alpha.base();
        int b = alpha.position(u) - alpha.base();
        if (a > b) std::swap(a, b);
        diff[static_cast<std::size_t>(a)] += 1;
        diff[static_cast<std::size_t>(b)] -= 1;
      }
  std::vector<long long> prof(static_cast<std::size_t>(n), 0);
  long long run = 0;
  for (int i = 0; i < n; ++i) {
    run += diff[static_cast<std::size_t>(i)];
    prof[static_cast<std::size_t>(i)] = run;  // |delta(X_{i+1})|
  }
  return prof;
}

Ordering reposition(const Ordering& alpha, Vertex w, int j) {
  const int n = alpha.size();
  if (j < 0 || j >= n) throw input_error("reposition: target index out of range");
  std::vector<Vertex> seq = alpha.sequence();
  int iw = alpha.position(w) - alpha.base();
  if (iw == j) return alpha;
  seq.erase(seq.begin() + iw);
  seq.insert(seq.begin() + j, w);
  return Ordering::from_sequence(std::move(seq), alpha.base());
}

Ordering move_iso_right(const Graph& g, const Ordering& alpha, Vertex w, int j) {
  const int n = g.vertex_count();
  if (alpha.size() != n) throw input_error("move_iso_right: ordering does not match the graph");
  if (w < 0 || w >= n) throw input_error("move_iso_right: vertex out of range");
  if (!g.is_isolated(w))
    throw input_error("move_iso_right: vertex " + std::to_string(w) + " is not isolated");
  if (j < 0 || j >= n) throw input_error("move_iso_right: target index out of range");
  int iw = alpha.position(w) - alpha.base();
  if (iw > j)
    throw input_error("move_iso_right: vertex index " + std::to_string(iw) +
                      " already right of target " + std::to_string(j));
  if (iw == j) return alpha;  // zero-distance move
  auto prof = cut_profile(g, alpha);
  for (int k = iw; k <= j; ++k)
    if (prof[static_cast<std::size_t>(k)] > prof[static_cast<std::size_t>(j)])
      throw input_error("move_iso_right: cut condition violated at prefix " +
                        std::to_string(k + 1) + " (" +
                        std::to_string(prof[static_cast<std::size_t>(k)]) + " > " +
                        std::to_string(prof[static_cast<std::size_t>(j)]) + ")");
  return reposition(alpha, w, j);
}

Ordering move_block_left(const Graph& g, const Ordering& alpha, int j, int s, int f,
                         Int128 c_value) {
  const int n = g.vertex_count();
  if (alpha.size() != n) throw input_error("move_block_left: ordering does not match the graph");
  if (f < 0 || s < 0 || j < 0) throw input_error("move_block_left: negative parameter");
  if (f == 0) return alpha;  // empty block
  if (j < 1 || s < 1 || j + s + f > n)
    throw input_error("move_block_left: need 1 <= j < j+s < j+s+f <= n");
  for (int k = j + s; k < j + s + f; ++k) {
    Vertex v = alpha.vertex_at_index(k);
    if (!g.is_isolated(v))
      throw input_error("move_block_left: vertex " + std::to_string(v) +
                        " in the block is not isolated");
  }
  auto prof = cut_profile(g, alpha);
  for (int k = 1; k <= s + f; ++k)
    if (prof[static_cast<std::size_t>(j + k - 1)] >= prof[static_cast<std::size_t>(j - 1)])
      throw input_error("move_block_left: cuts do not strictly decrease after prefix " +
                        std::to_string(j));
  Int128 lhs = Int128(2) * Int128(j + 1) + c_value + Int128(f);
  Int128 rhs = Int128(2) * Int128(prof[static_cast<std::size_t>(j + s + f - 1)]) *
               Int128(s - 1);
  if (lhs < rhs)
    throw input_error("move_block_left: balance condition violated (2(j+1)+c+f = " +
                      lhs.str() + " < " + rhs.str() + ")");
  std::vector<Vertex> seq = alpha.sequence();
  std::rotate(seq.begin() + j, seq.begin() + j + s, seq.begin() + j + s + f);
  return Ordering::from_sequence(std::move(seq), alpha.base());
}

MaxCutReduction maxcut_to_oqa(const Graph& g, Int128 k_prime, const CostPolynomial& c,
                              Int128 padding) {
  const int n = g.vertex_count();
  if (padding < Int128(-1))
    throw input_error("maxcut_to_oqa: negative padding");
  if (padding == Int128(-1)) padding = int128_pow(Int128(n), 5);
  constexpr long long kMaxPadded = 10'000'000;
  if (padding + Int128(n) > Int128(kMaxPadded))
    throw size_limit_error("maxcut_to_oqa: padded instance would have " +
                           (padding + Int128(n)).str() + " vertices (cap " +
                           std::to_string(kMaxPadded) + "); pass a smaller padding");
  long long pad = static_cast<long long>(padding.value());
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edge_set()) edges.emplace_back(e.u, e.v);
  MaxCutReduction out;
  out.padded = Graph::build(n + static_cast<int>(pad), edges);
  out.original_count = n;
  out.padding = padding;
  out.threshold = padding * padding * k_prime;
  out.c = c;
  return out;
}

Ordering cut_to_arrangement(const MaxCutReduction& inst, const std::vector<Vertex>& x_side) {
  const int n_total = inst.padded.vertex_count();
  std::vector<bool> in_x(static_cast<std::size_t>(inst.original_count), false);
  for (Vertex v : x_side) {
    if (v < 0 || v >= inst.original_count)
      throw input_error("cut_to_arrangement: cut side must consist of original vertices");
    if (in_x[static_cast<std::size_t>(v)])
      throw input_error("cut_to_arrangement: duplicate vertex in cut side");
    in_x[static_cast<std::size_t>(v)] = true;
  }
  std::vector<Vertex> seq;
  seq.reserve(static_cast<std::size_t>(n_total));
  for (Vertex v = 0; v < inst.original_count; ++v)
    if (in_x[static_cast<std::size_t>(v)]) seq.push_back(v);
  for (Vertex v = inst.original_count; v < n_total; ++v) seq.push_back(v);
  for (Vertex v = 0; v < inst.original_count; ++v)
    if (!in_x[static_cast<std::size_t>(v)]) seq.push_back(v);
  return Ordering::from_sequence(std::move(seq));
}

namespace {

// Rightmost index of the maximum of prof[lo..n-1].
int rightmost_argmax(const std::vector<long long>& prof, int lo) {
  int best = lo;
  for (int k = lo; k < static_cast<int>(prof.size()); ++k)
    if (prof[static_cast<std::size_t>(k)] >= prof[static_cast<std::size_t>(best)]) best = k;
  return best;
}

struct Blocks {
  std::vector<long long> boundaries;  // prefix lengths b_k
  std::vector<long long> originals;
  std::vector<long long> padding;
  std::vector<long long> cuts;
};

// Derives the block structure of an arrangement whose parts are each an
// originals-run followed by a padding-run. Throws invariant_error if a part
// does not have that shape.
Blocks derive_blocks(const Graph& g, int original_count, const Ordering& alpha) {
  const int n = g.vertex_count();
  auto prof = cut_profile(g, alpha);
  Blocks b;
  int pos = 0;
  while (pos < n) {
    int bk = rightmost_argmax(prof, pos);  // cut index; prefix length bk+1
    long long n_k = 0, f_k = 0;
    bool seen_padding = false;
    for (int i = pos; i <= bk; ++i) {
      Vertex v = alpha.vertex_at_index(i);
      if (v >= original_count) {
        seen_padding = true;
        ++f_k;
      } else {
        if (seen_padding)
          throw invariant_error("normalize_arrangement: part is not an "
                                "originals-then-padding run");
        ++n_k;
      }
    }
    b.boundaries.push_back(bk + 1);
    b.originals.push_back(n_k);
    b.padding.push_back(f_k);
    b.cuts.push_back(prof[static_cast<std::size_t>(bk)]);
    pos = bk + 1;
  }
  return b;
}

}  // namespace

NormalizeResult normalize_arrangement(const Graph& g, int original_count,
                                      const Ordering& alpha, const CostPolynomial& c) {
  const int n = g.vertex_count();
  if (alpha.size() != n)
    throw input_error("normalize_arrangement: ordering does not match the graph");
  if (original_count < 0 || original_count > n)
    throw input_error("normalize_arrangement: bad original count");
  for (Vertex v = original_count; v < n; ++v)
    if (!g.is_isolated(v))
      throw input_error("normalize_arrangement: padding vertex " + std::to_string(v) +
                        " is not isolated");

  NormalizeResult res;
  res.q_initial = quadratic_cost(g, alpha, c);
  Ordering cur = alpha;
  Int128 q_prev = res.q_initial;

  auto apply_iso = [&](Vertex w, int target) {
    Ordering next;
    try {
      next = move_iso_right(g, cur, w, target);
    } catch (const input_error& e) {
      throw invariant_error(std::string("normalize_arrangement: stage-1 move rejected: ") +
                            e.what());
    }
    Int128 q = quadratic_cost(g, next, c);
    if (q < q_prev)
      throw invariant_error("normalize_arrangement: cost decreased on an iso move");
    res.trace.push_back(NormalizeMove{NormalizeMove::Kind::iso_right, w, target, 0, 0, q});
    q_prev = q;
    cur = std::move(next);
  };
  auto apply_block = [&](int j, int s, int f) {
    Ordering next;
    try {
      next = move_block_left(g, cur, j, s, f, c.eval(Int128(n)));
    } catch (const input_error& e) {
      throw invariant_error(std::string("normalize_arrangement: stage-2 move rejected: ") +
                            e.what());
    }
    Int128 q = quadratic_cost(g, next, c);
    if (q < q_prev)
      throw invariant_error("normalize_arrangement: cost decreased on a block move");
    res.trace.push_back(NormalizeMove{NormalizeMove::Kind::block_left, -1, j, s, f, q});
    q_prev = q;
    cur = std::move(next);
  };

  // Stage 1: within each part delimited by the rightmost locally-largest
  // cuts, push padding vertices against the part's right end.
  int pos = 0;
  while (pos < n) {
    auto prof = cut_profile(g, cur);
    int bk = rightmost_argmax(prof, pos);
    bool moved = true;
    while (moved) {
      moved = false;
      // Leftmost padding slot followed by an original slot within the part.
      for (int i = pos; i <= bk; ++i) {
        Vertex v = cur.vertex_at_index(i);
        if (v < original_count) continue;
        bool original_after = false;
        for (int k = i + 1; k <= bk; ++k)
          if (cur.vertex_at_index(k) < original_count) {
            original_after = true;
            break;
          }
        if (original_after) {
          apply_iso(v, bk);
          moved = true;
        }
        break;  // rescan from the part start after a move (or stop: packed)
      }
    }
    pos = bk + 1;
  }

  // Stage 2: consolidate padding runs leftward. While the largest run is
  // not in the first part, merge it into the part on its left; once the
  // first part holds the largest run, absorb the remaining runs directly.
  while (true) {
    Blocks blocks = derive_blocks(g, original_count, cur);
    const std::size_t h = blocks.boundaries.size();
    std::size_t heaviest = 0;
    for (std::size_t k = 1; k < h; ++k)
      if (blocks.padding[k] > blocks.padding[heaviest]) heaviest = k;
    std::size_t pending = h;  // first part beyond 0 with padding
    for (std::size_t k = 1; k < h; ++k)
      if (blocks.padding[k] > 0) {
        pending = k;
        break;
      }
    if (pending == h) break;  // all padding sits in part 1
    if (heaviest >= 1 && blocks.padding[heaviest] > 0) {
      // move the heaviest run one part left
      long long j = blocks.boundaries[heaviest - 1];
      apply_block(static_cast<int>(j), static_cast<int>(blocks.originals[heaviest]),
                  static_cast<int>(blocks.padding[heaviest]));
    } else {
      // heaviest run already first; absorb the leftmost pending run
      long long j = blocks.boundaries[0];
      long long s = 0;
      for (std::size_t k = 1; k <= pending; ++k) s += blocks.originals[k];
      apply_block(static_cast<int>(j), static_cast<int>(s),
                  static_cast<int>(blocks.padding[pending]));
    }
  }

  res.arrangement = cur;
  Blocks fin = derive_blocks(g, original_count, cur);
  res.blocks.boundaries = fin.boundaries;
  res.blocks.originals = fin.originals;
  res.blocks.padding = fin.padding;
  res.blocks.boundary_cuts = fin.cuts;
  res.q_final = q_prev;
  return res;
}

std::vector<Vertex> extract_cut_side(const NormalizeResult& res, int original_count) {
  std::vector<Vertex> side;
  if (res.blocks.boundaries.empty()) return side;
  long long b1 = res.blocks.boundaries.front();
  for (int i = 0; i < b1; ++i) {
    Vertex v = res.arrangement.vertex_at_index(i);
    if (v < original_count) side.push_back(v);
  }
  std::sort(side.begin(), side.end());
  return side;
}

OqaExactResult oqa_exact(const Graph& g, const CostPolynomial& c, Direction dir,
                         int max_vertices) {
  const int n = g.vertex_count();
  if (n > max_vertices)
    throw size_limit_error("oqa_exact: " + std::to_string(n) +
                           " vertices exceeds the limit of " + std::to_string(max_vertices));
  std::vector<Vertex> seq(static_cast<std::size_t>(n));
  std::iota(seq.begin(), seq.end(), 0);
  bool first = true;
  OqaExactResult best;
  do {
    Ordering alpha = Ordering::from_sequence(seq);
    Int128 q = quadratic_cost(g, alpha, c);
    bool better = first || (dir == Direction::minimize ? q < best.value : q > best.value);
    if (better) {
      best.value = q;
      best.witness = alpha;
      first = false;
    }
  } while (std::next_permutation(seq.begin(), seq.end()));
  if (first) {  // n == 0
    best.value = Int128(0);
    best.witness = Ordering::identity(0);
  }
  return best;
}

long long cut_size(const Graph& g, const std::vector<Vertex>& side) {
  std::vector<bool> in(static_cast<std::size_t>(g.vertex_count()), false);
  for (Vertex v : side) {
    if (v < 0 || v >= g.vertex_count())
      throw input_error("cut_size: vertex out of range");
    in[static_cast<std::size_t>(v)] = true;
  }
  long long cut = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (Vertex u : g.neighbors(v))
      if (v < u && in[static_cast<std::size_t>(v)] != in[static_cast<std::size_t>(u)]) ++cut;
  return cut;
}

MaxCutResult max_cut_exact(const Graph& g, int max_vertices) {
  const int n = g.vertex_count();
  if (n > max_vertices)
    throw size_limit_error("max_cut_exact: " + std::to_string(n) +
                           " vertices exceeds the limit of " + std::to_string(max_vertices));
  MaxCutResult best{0, {}};
  if (n <= 1) return best;
  std::vector<Edge> edges;
  for (const Edge& e : g.edge_set()) edges.push_back(e);
  const std::uint32_t lim = std::uint32_t(1) << (n - 1);
  for (std::uint32_t mask = 0; mask < lim; ++mask) {
    // vertex 0 stays outside X; mask bit i selects vertex i+1
    long long cut = 0;
    for (const Edge& e : edges) {
      bool a = e.u > 0 && ((mask >> (e.u - 1)) & 1u);
      bool b = e.v > 0 && ((mask >> (e.v - 1)) & 1u);
      if (a != b) ++cut;
    }
    if (cut > best.value) {
      best.value = cut;
      best.side.clear();
      for (int i = 0; i < n - 1; ++i)
        if ((mask >> i) & 1u) best.side.push_back(i + 1);
    }
  }
  return best;
}

}  // namespace ordercraft
