// ordercraft: elimination orderings, arrangement costs and the reduction
// gadgets, behind one subcommand-style CLI.
//
// Exit codes: 0 ok, 1 usage, 2 input error, 3 size refusal, 4 assertion
// failure (internal inconsistency or failing selftest).

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ordercraft/arrangement.hpp"
#include "ordercraft/chain.hpp"
#include "ordercraft/elimination.hpp"
#include "ordercraft/errors.hpp"
#include "ordercraft/exact_search.hpp"
#include "ordercraft/family.hpp"
#include "ordercraft/heuristics.hpp"
#include "ordercraft/matrix_market.hpp"
#include "ordercraft/ordering.hpp"
#include "ordercraft/selftest.hpp"

using json = nlohmann::ordered_json;
using namespace ordercraft;

namespace {

constexpr const char* kVersion = "0.1.0";

// FNV-1a over a file's bytes; enough to detect drift between runs.
std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open for digest: " + path);
  std::uint64_t h = 1469598103934665603ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << h;
  return out.str();
}

json manifest_skeleton(const std::string& command, const std::vector<std::string>& args) {
  json m;
  m["tool"] = "ordercraft";
  m["version"] = kVersion;
  m["command"] = command;
  m["arguments"] = args;
  m["inputs"] = json::array();
  m["outputs"] = json::array();
  return m;
}

void manifest_add_input(json& m, const std::string& path) {
  m["inputs"].push_back({{"path", path}, {"digest", file_digest(path)}});
}

void manifest_add_output(json& m, const std::string& path, const std::string& role) {
  m["outputs"].push_back({{"path", path}, {"digest", file_digest(path)}, {"role", role}});
}

void write_manifest(const json& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot open manifest file: " + path);
  out << m.dump(2) << '\n';
}

json metrics_json(const MetricsReport& m) {
  return json{{"nnz", m.nnz.str()}, {"flops", m.flops.str()}, {"omega", m.omega.str()}};
}

std::vector<long long> one_based(const Ordering& o) {
  std::vector<long long> seq;
  seq.reserve(static_cast<std::size_t>(o.size()));
  for (Vertex v : o.sequence()) seq.push_back(v + 1);
  return seq;
}

struct FormatOpt {
  std::string value = "pretty";
};

void add_format(CLI::App* cmd, FormatOpt& fmt, bool with_csv = true) {
  auto choices = with_csv ? std::vector<std::string>{"json", "csv", "pretty"}
                          : std::vector<std::string>{"json", "pretty"};
  cmd->add_option("--format", fmt.value, "output format")
      ->check(CLI::IsMember(choices))
      ->capture_default_str();
}

CostPolynomial parse_cost(long long c2, long long c1, long long c0) {
  if (c2 < 0 || c1 < 0 || c0 < 0)
    throw input_error("cost polynomial coefficients must be non-negative");
  return CostPolynomial{c2, c1, c0};
}

// --- analyze -------------------------------------------------------------

struct AnalyzeArgs {
  std::string graph_file;
  std::string ordering_file;
  FormatOpt fmt;
};

int run_analyze(const AnalyzeArgs& a) {
  Graph g = read_edge_list_file(a.graph_file);
  std::string provenance;
  Ordering alpha;
  if (a.ordering_file.empty()) {
    alpha = min_degree_order(g);
    provenance = "min-degree";
  } else {
    alpha = read_ordering_file(a.ordering_file, g.vertex_count());
    provenance = "file:" + a.ordering_file;
  }
  auto res = eliminate(g, alpha);
  MetricsReport m = metrics(res.degrees);
  long long fill = static_cast<long long>(res.triangulation.fill.size());
  if (a.fmt.value == "json") {
    json out;
    out["graph"] = {{"path", a.graph_file},
                    {"vertices", g.vertex_count()},
                    {"edges", g.edge_count()}};
    out["ordering"] = provenance;
    out["metrics"] = metrics_json(m);
    out["fill_edges"] = std::to_string(fill);
    std::cout << out.dump(2) << '\n';
  } else if (a.fmt.value == "csv") {
    std::cout << "graph,ordering,n,m,nnz,flops,omega,fill\n"
              << a.graph_file << ',' << provenance << ',' << g.vertex_count() << ','
              << g.edge_count() << ',' << m.nnz << ',' << m.flops << ',' << m.omega
              << ',' << fill << '\n';
  } else {
    std::cout << "graph      " << a.graph_file << "  (n=" << g.vertex_count()
              << ", m=" << g.edge_count() << ")\n"
              << "ordering   " << provenance << '\n'
              << "nnz        " << m.nnz << '\n'
              << "flops      " << m.flops << '\n'
              << "omega      " << m.omega << '\n'
              << "fill edges " << fill << '\n';
  }
  return 0;
}

// --- family ---------------------------------------------------------------

struct FamilyArgs {
  long long l = 0, t = 0, c = 0;
  long long scale_n = 0;
  std::string variant = "paper";
  FormatOpt fmt;
};

int run_family(const FamilyArgs& a) {
  json out;
  std::ostringstream pretty;
  if (a.scale_n > 0) {
    DivergenceVariant v =
        a.variant == "kloks" ? DivergenceVariant::kloks : DivergenceVariant::paper;
    DivergenceReport r = divergence_table(v, a.scale_n);
    out["variant"] = a.variant;
    out["scale_n"] = a.scale_n;
    out["params"] = {{"l", r.family.params.l}, {"t", r.family.params.t}, {"c", r.family.params.c}};
    out["t1"] = metrics_json(r.family.t1);
    out["t2"] = metrics_json(r.family.t2);
    out["comparisons"] = {{"nnz_t1_lt_t2", r.nnz_t1_lt_t2},
                          {"flops_t1_lt_t2", r.flops_t1_lt_t2},
                          {"flops_t2_lt_t1", r.flops_t2_lt_t1},
                          {"omega_t2_lt_t1", r.omega_t2_lt_t1}};
    pretty << "G(l,t,c) at " << a.variant << " scale n=" << a.scale_n << ": l="
           << r.family.params.l << " t=" << r.family.params.t << " c=" << r.family.params.c
           << "\n\n";
    pretty << "          T1                    T2\n";
    pretty << "nnz       " << r.family.t1.nnz << "  " << r.family.t2.nnz << '\n';
    pretty << "flops     " << r.family.t1.flops << "  " << r.family.t2.flops << '\n';
    pretty << "omega     " << r.family.t1.omega << "  " << r.family.t2.omega << '\n';
    pretty << "\nnnz(T1) < nnz(T2):     " << (r.nnz_t1_lt_t2 ? "yes" : "no") << '\n';
    pretty << "flops(T1) < flops(T2): " << (r.flops_t1_lt_t2 ? "yes" : "no") << '\n';
    pretty << "omega(T2) < omega(T1): " << (r.omega_t2_lt_t1 ? "yes" : "no") << '\n';
  } else {
    FamilyParams p{a.l, a.t, a.c};
    FamilyReport r = family_report(p);
    out["params"] = {{"l", p.l}, {"t", p.t}, {"c", p.c}};
    out["t1"] = metrics_json(r.t1);
    out["t2"] = metrics_json(r.t2);
    pretty << "G(" << p.l << "," << p.t << "," << p.c << ")\n\n";
    pretty << "          T1        T2\n";
    pretty << "nnz       " << r.t1.nnz << "    " << r.t2.nnz << '\n';
    pretty << "flops     " << r.t1.flops << "   " << r.t2.flops << '\n';
    pretty << "omega     " << r.t1.omega << "     " << r.t2.omega << '\n';
  }
  if (a.fmt.value == "json") std::cout << out.dump(2) << '\n';
  else std::cout << pretty.str();
  return 0;
}

// --- search ----------------------------------------------------------------

struct SearchArgs {
  std::string graph_file;
  std::string metric = "fill";
  std::string ordering_out;
  int max_n = 22;
  FormatOpt fmt;
};

int run_search(const SearchArgs& a) {
  Graph g = read_edge_list_file(a.graph_file);
  SearchLimits limits;
  limits.max_vertices = a.max_n;
  SearchMetric metric = a.metric == "fill"    ? SearchMetric::fill
                        : a.metric == "flops" ? SearchMetric::flops
                                              : SearchMetric::treewidth;
  ExactResult r = exact_search(g, metric, limits);
  if (!a.ordering_out.empty()) write_ordering_file(a.ordering_out, r.witness);
  if (a.fmt.value == "json") {
    json out;
    out["graph"] = a.graph_file;
    out["metric"] = a.metric;
    out["value"] = r.value.str();
    out["ordering"] = one_based(r.witness);
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "metric   " << a.metric << '\n' << "optimum  " << r.value << '\n';
    std::cout << "ordering";
    for (long long v : one_based(r.witness)) std::cout << ' ' << v;
    std::cout << '\n';
  }
  return 0;
}

// --- arrange ----------------------------------------------------------------

struct ArrangeCostArgs {
  std::string graph_file;
  std::string ordering_file;
  long long c2 = 0, c1 = 0, c0 = 0;
  FormatOpt fmt;
};

int run_arrange_cost(const ArrangeCostArgs& a) {
  Graph g = read_edge_list_file(a.graph_file);
  Ordering alpha = read_ordering_file(a.ordering_file, g.vertex_count());
  CostPolynomial c = parse_cost(a.c2, a.c1, a.c0);
  ArrangementCost cost = arrangement_cost(g, alpha, c);
  if (a.fmt.value == "json") {
    json out;
    out["graph"] = a.graph_file;
    out["c"] = {a.c2, a.c1, a.c0};
    out["linear"] = cost.linear.str();
    out["quadratic"] = cost.quadratic.str();
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "linear    " << cost.linear << '\n'
              << "quadratic " << cost.quadratic << '\n';
  }
  return 0;
}

struct ArrangeExactArgs {
  std::string graph_file;
  std::string direction = "min";
  long long c2 = 0, c1 = 0, c0 = 0;
  int max_n = 10;
  FormatOpt fmt;
};

int run_arrange_exact(const ArrangeExactArgs& a) {
  Graph g = read_edge_list_file(a.graph_file);
  CostPolynomial c = parse_cost(a.c2, a.c1, a.c0);
  OqaExactResult r = oqa_exact(g, c, a.direction == "max" ? Direction::maximize
                                                          : Direction::minimize,
                               a.max_n);
  if (a.fmt.value == "json") {
    json out;
    out["graph"] = a.graph_file;
    out["direction"] = a.direction;
    out["c"] = {a.c2, a.c1, a.c0};
    out["value"] = r.value.str();
    out["ordering"] = one_based(r.witness);
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << a.direction << " quadratic cost " << r.value << '\n';
    std::cout << "ordering";
    for (long long v : one_based(r.witness)) std::cout << ' ' << v;
    std::cout << '\n';
  }
  return 0;
}

struct ReduceMaxcutArgs {
  std::string graph_file;
  std::string k_prime = "1";
  std::string padding;  // empty = canonical n^5
  long long c2 = 0, c1 = 0, c0 = 0;
  std::string out_prefix;
};

int run_reduce_maxcut(const ReduceMaxcutArgs& a, const std::vector<std::string>& argv) {
  Graph g = read_edge_list_file(a.graph_file);
  CostPolynomial c = parse_cost(a.c2, a.c1, a.c0);
  Int128 pad = a.padding.empty() ? Int128(-1) : Int128::parse(a.padding);
  MaxCutReduction r = maxcut_to_oqa(g, Int128::parse(a.k_prime), c, pad);
  std::string graph_out = a.out_prefix + ".graph";
  write_edge_list_file(graph_out, r.padded);

  json m = manifest_skeleton("reduce maxcut-to-oqa", argv);
  manifest_add_input(m, a.graph_file);
  manifest_add_output(m, graph_out, "oqa-instance-graph");
  m["reduction"] = {
      {"kind", "maxcut-to-oqa"},
      {"original_vertices", r.original_count},
      {"padding", r.padding.str()},
      {"k_prime", a.k_prime},
      {"k", r.threshold.str()},
      {"c", {a.c2, a.c1, a.c0}},
      {"id_map", {{"originals", "1.." + std::to_string(r.original_count)},
                  {"padding", std::to_string(r.original_count + 1) + ".." +
                                  std::to_string(r.padded.vertex_count())}}}};
  write_manifest(m, a.out_prefix + ".manifest.json");
  std::cout << "wrote " << graph_out << " and " << a.out_prefix << ".manifest.json\n";
  return 0;
}

struct NormalizeArgs {
  std::string graph_file;
  std::string ordering_file;
  int originals = -1;
  long long c2 = 0, c1 = 0, c0 = 0;
  std::string out;
};

int run_normalize(const NormalizeArgs& a) {
  Graph g = read_edge_list_file(a.graph_file);
  Ordering alpha = read_ordering_file(a.ordering_file, g.vertex_count());
  CostPolynomial c = parse_cost(a.c2, a.c1, a.c0);
  if (a.originals < 0) throw input_error("--originals is required");
  NormalizeResult r = normalize_arrangement(g, a.originals, alpha, c);
  json out;
  out["q_initial"] = r.q_initial.str();
  out["q_final"] = r.q_final.str();
  out["trace"] = json::array();
  for (const auto& mv : r.trace) {
    json e;
    e["kind"] = mv.kind == NormalizeMove::Kind::iso_right ? "iso-right" : "block-left";
    if (mv.kind == NormalizeMove::Kind::iso_right) {
      e["vertex"] = mv.w + 1;
      e["target_index"] = mv.j + 1;
    } else {
      e["j"] = mv.j;
      e["s"] = mv.s;
      e["f"] = mv.f;
    }
    e["q_after"] = mv.q_after.str();
    out["trace"].push_back(e);
  }
  out["blocks"] = {{"boundaries", r.blocks.boundaries},
                   {"originals", r.blocks.originals},
                   {"padding", r.blocks.padding},
                   {"boundary_cuts", r.blocks.boundary_cuts}};
  out["final_ordering"] = one_based(r.arrangement);
  std::vector<long long> side;
  for (Vertex v : extract_cut_side(r, a.originals)) side.push_back(v + 1);
  out["extracted_cut_side"] = side;
  if (a.out.empty()) {
    std::cout << out.dump(2) << '\n';
  } else {
    std::ofstream f(a.out);
    if (!f) throw input_error("cannot open output file: " + a.out);
    f << out.dump(2) << '\n';
    std::cout << "wrote " << a.out << '\n';
  }
  return 0;
}

// --- reduce -----------------------------------------------------------------

struct OqaToQccArgs {
  std::string graph_file;
  std::string k = "0";
  std::string out_prefix;
};

int run_oqa_to_qcc(const OqaToQccArgs& a, const std::vector<std::string>& argv) {
  Graph g = read_edge_list_file(a.graph_file);
  OqaToQccInstance inst = oqa_to_qcc_instance(g, Int128::parse(a.k));
  std::string bip_out = a.out_prefix + ".bip";
  write_bipartite_list_file(bip_out, inst.gadget.bip);

  json m = manifest_skeleton("reduce oqa-to-qcc", argv);
  manifest_add_input(m, a.graph_file);
  manifest_add_output(m, bip_out, "qcc-instance-bipartite");
  json rmap;
  rmap["w_vertices"] = "Q ids 1.." + std::to_string(2 * inst.gadget.m) +
                       " (two per base edge, edge-major)";
  rmap["r_blocks"] = json::array();
  for (int v = 0; v < inst.gadget.n; ++v)
    rmap["r_blocks"].push_back(
        {{"vertex", v + 1},
         {"from", inst.gadget.r_offset[static_cast<std::size_t>(v)] + 1},
         {"to", inst.gadget.r_offset[static_cast<std::size_t>(v) + 1]}});
  m["reduction"] = {{"kind", "oqa-to-qcc"},
                    {"designated", "Q"},
                    {"c", {inst.c.c2, inst.c.c1, inst.c.c0}},
                    {"offset_p_n", inst.offset.str()},
                    {"k_in", a.k},
                    {"k_out", inst.threshold.str()},
                    {"id_map", rmap}};
  write_manifest(m, a.out_prefix + ".manifest.json");
  std::cout << "wrote " << bip_out << " and " << a.out_prefix << ".manifest.json\n";
  return 0;
}

struct QccToFlopsArgs {
  std::string bip_file;
  std::string k = "0";
  std::string out_prefix;
};

int run_qcc_to_flops(const QccToFlopsArgs& a, const std::vector<std::string>& argv) {
  BipartiteGraph b = read_bipartite_list_file(a.bip_file);
  QccToFlopsInstance inst = qcc_to_flops_instance(b, Int128::parse(a.k));
  std::string graph_out = a.out_prefix + ".graph";
  write_edge_list_file(graph_out, inst.gadget.graph);

  json m = manifest_skeleton("reduce qcc-to-flops", argv);
  manifest_add_input(m, a.bip_file);
  manifest_add_output(m, graph_out, "flops-instance-graph");
  m["reduction"] = {
      {"kind", "qcc-to-flops"},
      {"offset", inst.offset.str()},
      {"k_in", a.k},
      {"k_out", inst.threshold.str()},
      {"id_map", {{"P", "1.." + std::to_string(inst.gadget.p)},
                  {"Q", std::to_string(inst.gadget.p + 1) + ".." +
                            std::to_string(inst.gadget.p + inst.gadget.q)},
                  {"U", std::to_string(inst.gadget.p + inst.gadget.q + 1) + ".." +
                            std::to_string(2 * inst.gadget.p + inst.gadget.q)}}}};
  write_manifest(m, a.out_prefix + ".manifest.json");
  std::cout << "wrote " << graph_out << " and " << a.out_prefix << ".manifest.json\n";
  return 0;
}

// --- compare -----------------------------------------------------------------

struct CompareArgs {
  std::vector<std::string> matrices;
  std::string heuristics = "md,deficiency";
  std::vector<std::string> perms;  // name=file
  FormatOpt fmt;
};

json report_json(const HeuristicReport& rep) {
  json out;
  out["matrix"] = rep.graph_name;
  out["vertices"] = rep.vertices;
  out["edges"] = rep.edges;
  out["orderings"] = json::array();
  for (const auto& st : rep.orderings)
    out["orderings"].push_back({{"name", st.name},
                                {"nnz", st.metrics.nnz.str()},
                                {"flops", st.metrics.flops.str()},
                                {"omega", st.metrics.omega.str()},
                                {"fill", st.fill_edges.str()}});
  out["inversions"] = json::array();
  for (const auto& inv : rep.inversions)
    out["inversions"].push_back({{"less_fill_more_flops", rep.orderings[inv.a].name},
                                 {"than", rep.orderings[inv.b].name},
                                 {"fill_pct", inv.fill_pct},
                                 {"flops_pct", inv.flops_pct}});
  return out;
}

int run_compare(const CompareArgs& a) {
  json all = json::array();
  std::ostringstream pretty;
  std::ostringstream csv;
  csv << "matrix,ordering,n,m,nnz,flops,omega,fill\n";
  for (const std::string& path : a.matrices) {
    Graph g = load_matrix_market_file(path);
    std::vector<NamedOrdering> ords;
    std::istringstream hs(a.heuristics);
    std::string h;
    while (std::getline(hs, h, ',')) {
      if (h == "md" || h == "min-degree") ords.push_back({"min-degree", min_degree_order(g)});
      else if (h == "deficiency" || h == "min-deficiency")
        ords.push_back({"min-deficiency", min_deficiency_order(g)});
      else if (!h.empty())
        throw input_error("unknown heuristic '" + h + "' (try md, deficiency)");
    }
    for (const std::string& spec : a.perms) {
      auto eq = spec.find('=');
      if (eq == std::string::npos)
        throw input_error("--perm expects NAME=FILE, got '" + spec + "'");
      ords.push_back({spec.substr(0, eq),
                      read_ordering_file(spec.substr(eq + 1), g.vertex_count())});
    }
    if (ords.empty()) throw input_error("no orderings requested");
    HeuristicReport rep = compare(g, ords, path);
    all.push_back(report_json(rep));
    pretty << path << "  (n=" << rep.vertices << ", m=" << rep.edges << ")\n";
    for (const auto& st : rep.orderings) {
      pretty << "  " << st.name << ": nnz=" << st.metrics.nnz
             << " flops=" << st.metrics.flops << " omega=" << st.metrics.omega
             << " fill=" << st.fill_edges << '\n';
      csv << path << ',' << st.name << ',' << rep.vertices << ',' << rep.edges << ','
          << st.metrics.nnz << ',' << st.metrics.flops << ',' << st.metrics.omega << ','
          << st.fill_edges << '\n';
    }
    for (const auto& inv : rep.inversions)
      pretty << "  inversion: " << rep.orderings[inv.a].name << " has less fill but more flops than "
             << rep.orderings[inv.b].name << " (" << inv.fill_pct << "% fill, +"
             << inv.flops_pct << "% flops)\n";
  }
  if (a.fmt.value == "json") std::cout << all.dump(2) << '\n';
  else if (a.fmt.value == "csv") std::cout << csv.str();
  else std::cout << pretty.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic sparse elimination orderings, arrangement costs and "
               "reduction gadgets"};
  app.set_version_flag("--version", std::string("ordercraft ") + kVersion);
  app.require_subcommand(1);
  std::vector<std::string> raw_args(argv + 1, argv + argc);

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "metrics of a graph under an ordering");
  analyze->add_option("graph", analyze_args.graph_file, "edge list file")->required();
  analyze->add_option("--ordering", analyze_args.ordering_file,
                      "ordering file (default: min-degree)");
  add_format(analyze, analyze_args.fmt);

  FamilyArgs family_args;
  auto* family = app.add_subcommand("family", "the C_l v (S_t + K_c) family");
  family->add_option("--l", family_args.l, "cycle length (>= 4)");
  family->add_option("--t", family_args.t, "independent set size (>= 4)");
  family->add_option("--c", family_args.c, "clique size (>= 4)");
  family->add_option("--scale-n", family_args.scale_n, "scale parameter n");
  family->add_option("--variant", family_args.variant, "paper|kloks")
      ->check(CLI::IsMember({"paper", "kloks"}));
  add_format(family, family_args.fmt, false);

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "exact optimum over all orderings");
  search->add_option("graph", search_args.graph_file, "edge list file")->required();
  search->add_option("--metric", search_args.metric, "fill|flops|treewidth")
      ->check(CLI::IsMember({"fill", "flops", "treewidth"}))
      ->capture_default_str();
  search->add_option("--max-n", search_args.max_n, "size refusal limit")
      ->capture_default_str();
  search->add_option("--ordering-out", search_args.ordering_out,
                     "write the witness ordering here");
  add_format(search, search_args.fmt, false);

  auto* arrange = app.add_subcommand("arrange", "vertex arrangement costs and moves");
  arrange->require_subcommand(1);

  ArrangeCostArgs cost_args;
  auto* cost = arrange->add_subcommand("cost", "linear and quadratic cost of an ordering");
  cost->add_option("graph", cost_args.graph_file)->required();
  cost->add_option("--ordering", cost_args.ordering_file)->required();
  cost->add_option("--c2", cost_args.c2, "c polynomial X^2 coefficient");
  cost->add_option("--c1", cost_args.c1, "c polynomial X coefficient");
  cost->add_option("--c0", cost_args.c0, "c polynomial constant");
  add_format(cost, cost_args.fmt, false);

  ArrangeExactArgs exact_args;
  auto* aexact = arrange->add_subcommand("exact", "brute-force quadratic optimum");
  aexact->add_option("graph", exact_args.graph_file)->required();
  aexact->add_option("--direction", exact_args.direction, "min|max")
      ->check(CLI::IsMember({"min", "max"}))
      ->capture_default_str();
  aexact->add_option("--c2", exact_args.c2);
  aexact->add_option("--c1", exact_args.c1);
  aexact->add_option("--c0", exact_args.c0);
  aexact->add_option("--max-n", exact_args.max_n)->capture_default_str();
  add_format(aexact, exact_args.fmt, false);

  ReduceMaxcutArgs rmx_args;
  auto add_reduce_maxcut_opts = [&rmx_args](CLI::App* cmd) {
    cmd->add_option("graph", rmx_args.graph_file, "cut instance edge list")->required();
    cmd->add_option("--k", rmx_args.k_prime, "cut size threshold k'")->capture_default_str();
    cmd->add_option("--padding", rmx_args.padding,
                    "isolated padding count (default n^5)");
    cmd->add_option("--c2", rmx_args.c2);
    cmd->add_option("--c1", rmx_args.c1);
    cmd->add_option("--c0", rmx_args.c0);
    cmd->add_option("--out", rmx_args.out_prefix, "output prefix")->required();
  };
  auto* rmx = arrange->add_subcommand("reduce-maxcut", "cut instance -> arrangement instance");
  add_reduce_maxcut_opts(rmx);

  NormalizeArgs norm_args;
  auto* norm = arrange->add_subcommand("normalize",
                                       "pack isolated padding against the largest cuts");
  norm->add_option("graph", norm_args.graph_file)->required();
  norm->add_option("--ordering", norm_args.ordering_file)->required();
  norm->add_option("--originals", norm_args.originals,
                   "count of original (non-padding) vertices")->required();
  norm->add_option("--c2", norm_args.c2);
  norm->add_option("--c1", norm_args.c1);
  norm->add_option("--c0", norm_args.c0);
  norm->add_option("--out", norm_args.out, "write the JSON trace here");

  auto* reduce = app.add_subcommand("reduce", "instance transformations");
  reduce->require_subcommand(1);

  OqaToQccArgs oq_args;
  auto* oq = reduce->add_subcommand("oqa-to-qcc", "arrangement -> chain completion");
  oq->add_option("graph", oq_args.graph_file)->required();
  oq->add_option("--k", oq_args.k, "arrangement cost threshold")->capture_default_str();
  oq->add_option("--out", oq_args.out_prefix, "output prefix")->required();

  QccToFlopsArgs qf_args;
  auto* qf = reduce->add_subcommand("qcc-to-flops", "chain completion -> elimination");
  qf->add_option("bipartite", qf_args.bip_file, "bipartite list file")->required();
  qf->add_option("--k", qf_args.k, "chain completion threshold")->capture_default_str();
  qf->add_option("--out", qf_args.out_prefix, "output prefix")->required();

  auto* rmx2 = reduce->add_subcommand("maxcut-to-oqa", "cut -> arrangement (same as "
                                      "arrange reduce-maxcut)");
  add_reduce_maxcut_opts(rmx2);

  CompareArgs cmp_args;
  auto* cmp = app.add_subcommand("compare", "heuristic orderings on matrix patterns");
  cmp->add_option("matrices", cmp_args.matrices, "Matrix Market files")->required();
  cmp->add_option("--heuristics", cmp_args.heuristics, "comma list: md,deficiency")
      ->capture_default_str();
  cmp->add_option("--perm", cmp_args.perms, "NAME=FILE external ordering (repeatable)");
  add_format(cmp, cmp_args.fmt);

  SelftestOptions st_opts;
  std::string st_only;
  auto* selftest = app.add_subcommand("selftest", "run the acceptance checks");
  selftest->add_option("--seed", st_opts.seed, "RNG seed");
  selftest->add_option("--matrices", st_opts.matrix_dir, "bundled matrix directory")
      ->capture_default_str();
  selftest->add_option("--only", st_only, "comma list of check ids");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(analyze_args);
    if (*family) return run_family(family_args);
    if (*search) return run_search(search_args);
    if (*cost) return run_arrange_cost(cost_args);
    if (*aexact) return run_arrange_exact(exact_args);
    if (*rmx || *rmx2) return run_reduce_maxcut(rmx_args, raw_args);
    if (*norm) return run_normalize(norm_args);
    if (*oq) return run_oqa_to_qcc(oq_args, raw_args);
    if (*qf) return run_qcc_to_flops(qf_args, raw_args);
    if (*cmp) return run_compare(cmp_args);
    if (*selftest) {
      if (!st_only.empty()) {
        std::istringstream ss(st_only);
        std::string tok;
        while (std::getline(ss, tok, ',')) st_opts.only.push_back(std::stoi(tok));
      }
      auto results = run_selftest(st_opts, std::cout);
      int failed = 0;
      for (const auto& r : results)
        if (!r.passed) ++failed;
      std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
      return failed == 0 ? 0 : 4;
    }
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const size_limit_error& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return 3;
  } catch (const invariant_error& e) {
    std::cerr << "internal check failed: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
  return 1;
}
