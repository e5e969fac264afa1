#pragma once

#include <iosfwd>
#include <string>

#include "atomwidth/graph.hpp"

namespace atomwidth::core {

// Edge-list text format:
//   line 1: "n m"
//   then m lines "u v" with 0 <= u < v < n
// Blank lines and lines starting with '#' are ignored everywhere.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

// graph6: standard ASCII encoding of the upper triangle, column-major
// (pairs (0,1),(0,2),(1,2),(0,3),...), 6 bits per printable byte (+63).
// Supports 0 <= n <= 258047. decode_graph6 rejects malformed input,
// including nonzero padding bits, with std::invalid_argument.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(const std::string& s);

}  // namespace atomwidth::core
