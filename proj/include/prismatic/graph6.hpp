#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "prismatic/graph.hpp"

namespace prismatic {

/// Decodes one short-form graph6 line (n <= 62): header byte n+63, then the
/// upper triangle of the adjacency matrix in column order, packed into 6-bit
/// chunks offset by 63, most significant bit first. Throws
/// std::invalid_argument on a malformed header, characters out of range,
/// a body length mismatch, or nonzero padding bits.
Graph parse_graph6(std::string_view line);

/// Encodes the labeled adjacency of g as a short-form graph6 string.
/// Throws std::invalid_argument when g has more than 62 vertices.
std::string to_graph6(const Graph& g);

/// Edge-list text format: first line "n m", then m lines "u v".
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

} // namespace prismatic
