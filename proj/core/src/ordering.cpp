#include "ordercraft/ordering.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "ordercraft/errors.hpp"

namespace ordercraft {

Ordering Ordering::identity(int n) {
  std::vector<Vertex> seq(static_cast<std::size_t>(n));
  std::iota(seq.begin(), seq.end(), 0);
  return from_sequence(std::move(seq));
}

Ordering Ordering::from_positions(std::vector<int> positions, int base) {
  const int n = static_cast<int>(positions.size());
  std::vector<Vertex> inv(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v) {
    int p = positions[static_cast<std::size_t>(v)] - base;
    if (p < 0 || p >= n)
      throw input_error("Ordering: position " +
                        std::to_string(positions[static_cast<std::size_t>(v)]) +
                        " outside {" + std::to_string(base) + ".." +
                        std::to_string(base + n - 1) + "}");
    if (inv[static_cast<std::size_t>(p)] != -1)
      throw input_error("Ordering: position " + std::to_string(p + base) +
                        " assigned twice");
    inv[static_cast<std::size_t>(p)] = v;
  }
  Ordering o;
  o.pos_ = std::move(positions);
  o.inv_ = std::move(inv);
  o.base_ = base;
  return o;
}

Ordering Ordering::from_sequence(std::vector<Vertex> seq, int base) {
  const int n = static_cast<int>(seq.size());
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = seq[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n)
      throw input_error("Ordering: vertex " + std::to_string(v) + " out of range");
    if (pos[static_cast<std::size_t>(v)] != -1)
      throw input_error("Ordering: vertex " + std::to_string(v) + " listed twice");
    pos[static_cast<std::size_t>(v)] = base + i;
  }
  Ordering o;
  o.pos_ = std::move(pos);
  o.inv_ = std::move(seq);
  o.base_ = base;
  return o;
}

int Ordering::position(Vertex v) const {
  if (v < 0 || v >= size())
    throw input_error("Ordering: vertex " + std::to_string(v) + " out of range");
  return pos_[static_cast<std::size_t>(v)];
}

Vertex Ordering::vertex_at_position(int absolute_pos) const {
  int i = absolute_pos - base_;
  if (i < 0 || i >= size())
    throw input_error("Ordering: position " + std::to_string(absolute_pos) +
                      " out of range");
  return inv_[static_cast<std::size_t>(i)];
}

Vertex Ordering::vertex_at_index(int i) const {
  if (i < 0 || i >= size())
    throw input_error("Ordering: index " + std::to_string(i) + " out of range");
  return inv_[static_cast<std::size_t>(i)];
}

Ordering Ordering::translated(int r) const {
  if (r < 0) throw input_error("Ordering::translated: negative displacement");
  Ordering o = *this;
  o.base_ += r;
  for (int& p : o.pos_) p += r;
  return o;
}

Ordering Ordering::reversed() const {
  std::vector<Vertex> seq(inv_.rbegin(), inv_.rend());
  return from_sequence(std::move(seq), base_);
}

Ordering read_ordering(std::istream& in, int expected_n, const std::string& source_name) {
  std::vector<Vertex> seq;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long long v;
    if (!(fields >> v)) continue;  // blank / comment-only line
    long long extra;
    if (fields >> extra)
      throw input_error(source_name + ":" + std::to_string(lineno) +
                        ": expected a single vertex id per line");
    if (v < 1 || v > expected_n)
      throw input_error(source_name + ":" + std::to_string(lineno) +
                        ": vertex id out of range 1.." + std::to_string(expected_n));
    seq.push_back(static_cast<Vertex>(v - 1));
  }
  if (static_cast<int>(seq.size()) != expected_n)
    throw input_error(source_name + ": expected " + std::to_string(expected_n) +
                      " lines, got " + std::to_string(seq.size()));
  try {
    return Ordering::from_sequence(std::move(seq));
  } catch (const input_error& e) {
    throw input_error(source_name + ": not a bijection: " + e.what());
  }
}

Ordering read_ordering_file(const std::string& path, int expected_n) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open ordering file: " + path);
  return read_ordering(in, expected_n, path);
}

void write_ordering(std::ostream& out, const Ordering& o) {
  for (Vertex v : o.sequence()) out << v + 1 << '\n';
}

void write_ordering_file(const std::string& path, const Ordering& o) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot open output file: " + path);
  write_ordering(out, o);
}

}  // namespace ordercraft
