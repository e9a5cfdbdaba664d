#include <fstream>
#include <sstream>

#include "ordercraft/errors.hpp"
#include "ordercraft/graph.hpp"

namespace ordercraft {

namespace {

// Strips '#' comments and returns whether anything substantive remains.
bool clean_line(std::string& line) {
  auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  return line.find_first_not_of(" \t\r\n") != std::string::npos;
}

[[noreturn]] void fail(const std::string& source, int lineno, const std::string& msg) {
  throw input_error(source + ":" + std::to_string(lineno) + ": " + msg);
}

struct LineReader {
  std::istream& in;
  std::string source;
  int lineno = 0;

  bool next(std::istringstream& fields) {
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      if (!clean_line(line)) continue;
      fields = std::istringstream(line);
      return true;
    }
    return false;
  }
};

}  // namespace

Graph read_edge_list(std::istream& in, const std::string& source_name) {
  LineReader rd{in, source_name};
  std::istringstream fields;
  if (!rd.next(fields)) fail(source_name, rd.lineno, "missing 'n m' header line");
  long long n = -1, m = -1;
  if (!(fields >> n >> m) || n < 0 || m < 0)
    fail(source_name, rd.lineno, "bad header, expected 'n m'");
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!rd.next(fields))
      fail(source_name, rd.lineno, "expected " + std::to_string(m) +
                                       " edges, got " + std::to_string(i));
    long long u = 0, v = 0;
    if (!(fields >> u >> v)) fail(source_name, rd.lineno, "bad edge line, expected 'u v'");
    if (u < 1 || u > n || v < 1 || v > n)
      fail(source_name, rd.lineno, "vertex id out of range 1.." + std::to_string(n));
    edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  }
  if (rd.next(fields)) fail(source_name, rd.lineno, "trailing content after last edge");
  try {
    return Graph::build(static_cast<int>(n), edges);
  } catch (const input_error& e) {
    throw input_error(source_name + ": " + e.what());
  }
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open graph file: " + path);
  return read_edge_list(in, path);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edge_set()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot open output file: " + path);
  write_edge_list(out, g);
}

BipartiteGraph read_bipartite_list(std::istream& in, const std::string& source_name) {
  LineReader rd{in, source_name};
  std::istringstream fields;
  if (!rd.next(fields)) fail(source_name, rd.lineno, "missing 'p q m' header line");
  long long p = -1, q = -1, m = -1;
  if (!(fields >> p >> q >> m) || p < 0 || q < 0 || m < 0)
    fail(source_name, rd.lineno, "bad header, expected 'p q m'");
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!rd.next(fields))
      fail(source_name, rd.lineno, "expected " + std::to_string(m) +
                                       " edges, got " + std::to_string(i));
    long long u = 0, v = 0;
    if (!(fields >> u >> v)) fail(source_name, rd.lineno, "bad edge line, expected 'u v'");
    if (u < 1 || u > p) fail(source_name, rd.lineno, "P id out of range 1.." + std::to_string(p));
    if (v < 1 || v > q) fail(source_name, rd.lineno, "Q id out of range 1.." + std::to_string(q));
    edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  }
  if (rd.next(fields)) fail(source_name, rd.lineno, "trailing content after last edge");
  try {
    return BipartiteGraph::build(static_cast<int>(p), static_cast<int>(q), edges);
  } catch (const input_error& e) {
    throw input_error(source_name + ": " + e.what());
  }
}

BipartiteGraph read_bipartite_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open bipartite graph file: " + path);
  return read_bipartite_list(in, path);
}

void write_bipartite_list(std::ostream& out, const BipartiteGraph& b) {
  out << b.p() << ' ' << b.q() << ' ' << b.edge_count() << '\n';
  for (const auto& [u, v] : b.edge_set()) out << u + 1 << ' ' << v + 1 << '\n';
}

void write_bipartite_list_file(const std::string& path, const BipartiteGraph& b) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot open output file: " + path);
  write_bipartite_list(out, b);
}

}  // namespace ordercraft
