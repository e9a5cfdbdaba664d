#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ordercraft/graph.hpp"

namespace ordercraft {

// A bijection from vertices 0..n-1 onto the contiguous position range
// {base, ..., base+n-1}. base is 1 unless the ordering was translated.
class Ordering {
 public:
  Ordering() = default;

  static Ordering identity(int n);

  // positions[v] is the absolute position of vertex v; must hit every value
  // in {base..base+n-1} exactly once.
  static Ordering from_positions(std::vector<int> positions, int base = 1);

  // seq[i] is the vertex at position base+i (elimination order).
  static Ordering from_sequence(std::vector<Vertex> seq, int base = 1);

  int size() const { return static_cast<int>(pos_.size()); }
  int base() const { return base_; }

  int position(Vertex v) const;
  // Vertex occupying the given absolute position in {base..base+n-1}.
  Vertex vertex_at_position(int absolute_pos) const;
  // Vertex at the i-th place, 0-based (i.e. position base+i).
  Vertex vertex_at_index(int i) const;

  // The elimination sequence: vertices in increasing position order.
  const std::vector<Vertex>& sequence() const { return inv_; }

  Ordering translated(int r) const;  // shift every position by r >= 0
  Ordering reversed() const;         // alpha^R, rebased to the same base

  friend bool operator==(const Ordering& a, const Ordering& b) {
    return a.base_ == b.base_ && a.pos_ == b.pos_;
  }

 private:
  std::vector<int> pos_;     // vertex -> absolute position
  std::vector<Vertex> inv_;  // index i -> vertex at position base_+i
  int base_ = 1;
};

// File format: one 1-based vertex id per line; line i names the vertex at
// position i. '#' comments allowed. The reader validates bijectivity.
Ordering read_ordering(std::istream& in, int expected_n,
                       const std::string& source_name = "<stream>");
Ordering read_ordering_file(const std::string& path, int expected_n);
void write_ordering(std::ostream& out, const Ordering& o);
void write_ordering_file(const std::string& path, const Ordering& o);

}  // namespace ordercraft
