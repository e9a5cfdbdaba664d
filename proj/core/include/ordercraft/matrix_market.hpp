#pragma once

#include <iosfwd>
#include <string>

#include "ordercraft/graph.hpp"

namespace ordercraft {

// Reads a Matrix Market coordinate file and returns the pattern graph of
// A + A^T with the diagonal dropped. Accepts pattern, real, integer and
// complex fields (values are ignored) and general, symmetric and
// skew-symmetric storage. The matrix must be square.
Graph load_matrix_market(std::istream& in, const std::string& source_name = "<stream>");
Graph load_matrix_market_file(const std::string& path);

}  // namespace ordercraft
