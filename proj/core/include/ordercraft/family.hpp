#pragma once

#include <string>

#include "ordercraft/elimination.hpp"
#include "ordercraft/graph.hpp"
#include "ordercraft/int128.hpp"
#include "ordercraft/ordering.hpp"

namespace ordercraft {

// Parameters of the family G(l,t,c) = C_l v (S_t + K_c): a cycle joined to
// the disjoint union of an independent set and a clique. All three
// parameters must be at least 4. Vertex layout: cycle ids first, then the
// independent set, then the clique.
struct FamilyParams {
  long long l;
  long long t;
  long long c;
};

enum class FamilyTriangulation { T1, T2 };

// Exact metric values for the two canonical triangulations.
struct FamilyReport {
  FamilyParams params;
  MetricsReport t1;
  MetricsReport t2;
};

enum class DivergenceVariant { paper, kloks };

// The scaled parameterizations: paper (l,t,c) = (8n,5n,4n) for n > 64 and
// kloks (l,t,c) = (2n+3,n,2n) for n > 3, with the strict metric comparisons
// between T1 and T2 evaluated exactly.
struct DivergenceReport {
  DivergenceVariant variant;
  long long scale_n;
  FamilyReport family;
  bool nnz_t1_lt_t2;
  bool flops_t1_lt_t2;
  bool flops_t2_lt_t1;
  bool omega_t2_lt_t1;
};

void validate_params(const FamilyParams& p);

Graph build_family(const FamilyParams& p);

// PEO for T1: the independent set first, then cycle and clique in id order.
Ordering ordering_T1(const FamilyParams& p);

// PEO-prefix ordering for T2: the first l-2 vertices of a fan PEO of the
// cycle (fan anchored at cycle vertex 0), then the rest in id order.
Ordering ordering_T2(const FamilyParams& p);

// Explicit template graphs the census classes must match:
// T1 = K_l v (S_t + K_c), T2 = fan-triangulated C_l v K_{t+c}.
Graph template_T1(const FamilyParams& p);
Graph template_T2(const FamilyParams& p);

MetricsReport closed_form(const FamilyParams& p, FamilyTriangulation which);
FamilyReport family_report(const FamilyParams& p);

FamilyParams divergence_params(DivergenceVariant variant, long long scale_n);
DivergenceReport divergence_table(DivergenceVariant variant, long long scale_n);

}  // namespace ordercraft
