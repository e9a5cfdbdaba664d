#include "ordercraft/family.hpp"

#include <numeric>

#include "ordercraft/errors.hpp"

namespace ordercraft {

namespace {

Int128 sum_1_to(Int128 m) { return m * (m + Int128(1)) / Int128(2); }

Int128 sum_sq_1_to(Int128 m) {
  return m * (m + Int128(1)) * (Int128(2) * m + Int128(1)) / Int128(6);
}

}  // namespace

void validate_params(const FamilyParams& p) {
  if (p.l < 4 || p.t < 4 || p.c < 4)
    throw input_error("family: parameters must satisfy 4 <= l,t,c (got l=" +
                      std::to_string(p.l) + ", t=" + std::to_string(p.t) +
                      ", c=" + std::to_string(p.c) + ")");
}

Graph build_family(const FamilyParams& p) {
  validate_params(p);
  Graph core = graph_sum(independent(static_cast<int>(p.t)),
                         clique(static_cast<int>(p.c)));
  return graph_join(cycle(static_cast<int>(p.l)), core);
}

Ordering ordering_T1(const FamilyParams& p) {
  validate_params(p);
  const int l = static_cast<int>(p.l), t = static_cast<int>(p.t), c = static_cast<int>(p.c);
  std::vector<Vertex> seq;
  seq.reserve(static_cast<std::size_t>(l + t + c));
  for (int i = 0; i < t; ++i) seq.push_back(l + i);
  for (int i = 0; i < l; ++i) seq.push_back(i);
  for (int i = 0; i < c; ++i) seq.push_back(l + t + i);
  return Ordering::from_sequence(std::move(seq));
}

Ordering ordering_T2(const FamilyParams& p) {
  validate_params(p);
  const int l = static_cast<int>(p.l), t = static_cast<int>(p.t), c = static_cast<int>(p.c);
  std::vector<Vertex> seq;
  seq.reserve(static_cast<std::size_t>(l + t + c));
  // Fan PEO of the cycle anchored at vertex 0: 1, 2, ..., l-2 are simplicial
  // in turn once the chords (0,j) are in place.
  for (int i = 1; i <= l - 2; ++i) seq.push_back(i);
  seq.push_back(0);
  seq.push_back(l - 1);
  for (int i = 0; i < t + c; ++i) seq.push_back(l + i);
  return Ordering::from_sequence(std::move(seq));
}

Graph template_T1(const FamilyParams& p) {
  validate_params(p);
  Graph core = graph_sum(independent(static_cast<int>(p.t)),
                         clique(static_cast<int>(p.c)));
  return graph_join(clique(static_cast<int>(p.l)), core);
}

Graph template_T2(const FamilyParams& p) {
  validate_params(p);
  const int l = static_cast<int>(p.l);
  std::vector<std::pair<Vertex, Vertex>> fan;
  for (int v = 0; v < l; ++v) fan.emplace_back(v, (v + 1) % l);
  for (int v = 2; v <= l - 2; ++v) fan.emplace_back(0, v);
  Graph cl_plus = Graph::build(l, fan);
  return graph_join(cl_plus, clique(static_cast<int>(p.t + p.c)));
}

MetricsReport closed_form(const FamilyParams& p, FamilyTriangulation which) {
  validate_params(p);
  Int128 l(p.l), t(p.t), c(p.c);
  MetricsReport r;
  if (which == FamilyTriangulation::T1) {
    // degrees: t copies of l, then l+c-1 ... 0
    r.nnz = t * (l + Int128(1)) + sum_1_to(l + c);
    r.flops = t * (l + Int128(1)) * (l + Int128(1)) + sum_sq_1_to(l + c);
    r.omega = l + c;
  } else {
    // degrees: l-2 copies of t+c+2, then t+c+1 ... 0
    Int128 d = t + c + Int128(3);
    r.nnz = (l - Int128(2)) * d + sum_1_to(t + c + Int128(2));
    r.flops = (l - Int128(2)) * d * d + sum_sq_1_to(t + c + Int128(2));
    r.omega = d;
  }
  return r;
}

FamilyReport family_report(const FamilyParams& p) {
  FamilyReport r;
  r.params = p;
  r.t1 = closed_form(p, FamilyTriangulation::T1);
  r.t2 = closed_form(p, FamilyTriangulation::T2);
  return r;
}

FamilyParams divergence_params(DivergenceVariant variant, long long n) {
  if (variant == DivergenceVariant::paper) {
    if (n <= 64)
      throw input_error("divergence(paper): requires n > 64, got " + std::to_string(n));
    return FamilyParams{8 * n, 5 * n, 4 * n};
  }
  if (n <= 3)
    throw input_error("divergence(kloks): requires n > 3, got " + std::to_string(n));
  return FamilyParams{2 * n + 3, n, 2 * n};
}

DivergenceReport divergence_table(DivergenceVariant variant, long long n) {
  DivergenceReport r;
  r.variant = variant;
  r.scale_n = n;
  r.family = family_report(divergence_params(variant, n));
  r.nnz_t1_lt_t2 = r.family.t1.nnz < r.family.t2.nnz;
  r.flops_t1_lt_t2 = r.family.t1.flops < r.family.t2.flops;
  r.flops_t2_lt_t1 = r.family.t2.flops < r.family.t1.flops;
  r.omega_t2_lt_t1 = r.family.t2.omega < r.family.t1.omega;
  return r;
}

}  // namespace ordercraft
