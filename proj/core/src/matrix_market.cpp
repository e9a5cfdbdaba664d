#include "ordercraft/matrix_market.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ordercraft/errors.hpp"

namespace ordercraft {

namespace {

[[noreturn]] void fail(const std::string& source, int lineno, const std::string& msg) {
  throw input_error(source + ":" + std::to_string(lineno) + ": " + msg);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

Graph load_matrix_market(std::istream& in, const std::string& source_name) {
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) fail(source_name, 1, "empty file");
  ++lineno;
  std::istringstream header(line);
  std::string banner, object, format, field, symmetry;
  header >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket")
    fail(source_name, lineno, "missing %%MatrixMarket banner");
  if (lower(object) != "matrix" || lower(format) != "coordinate")
    fail(source_name, lineno, "only 'matrix coordinate' files are supported");
  field = lower(field);
  symmetry = lower(symmetry);
  if (field != "pattern" && field != "real" && field != "integer" && field != "complex")
    fail(source_name, lineno, "unsupported field type '" + field + "'");
  if (symmetry != "general" && symmetry != "symmetric" && symmetry != "skew-symmetric")
    fail(source_name, lineno, "unsupported symmetry '" + symmetry + "'");

  long long rows = -1, cols = -1, nnz = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line[0] == '%') continue;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::istringstream sz(line);
    if (!(sz >> rows >> cols >> nnz))
      fail(source_name, lineno, "bad size line, expected 'rows cols nnz'");
    break;
  }
  if (rows < 0) fail(source_name, lineno, "missing size line");
  if (rows != cols)
    fail(source_name, lineno, "matrix must be square, got " + std::to_string(rows) +
                                  "x" + std::to_string(cols));

  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(static_cast<std::size_t>(nnz));
  long long seen = 0;
  while (seen < nnz) {
    if (!std::getline(in, line))
      fail(source_name, lineno, "expected " + std::to_string(nnz) + " entries, got " +
                                    std::to_string(seen));
    ++lineno;
    if (!line.empty() && line[0] == '%') continue;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::istringstream entry(line);
    long long i = 0, j = 0;
    if (!(entry >> i >> j)) fail(source_name, lineno, "bad entry line");
    if (i < 1 || i > rows || j < 1 || j > cols)
      fail(source_name, lineno, "index (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") out of range");
    ++seen;
    if (i == j) continue;  // diagonal dropped
    pairs.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(j - 1));
  }

  // Pattern of A + A^T, deduplicated.
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [i, j] : pairs) edges.emplace_back(i, j);
  EdgeSet set = EdgeSet::from_edges(std::move(edges));
  return Graph::build(static_cast<int>(rows), set);
}

Graph load_matrix_market_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open matrix file: " + path);
  return load_matrix_market(in, path);
}

}  // namespace ordercraft
