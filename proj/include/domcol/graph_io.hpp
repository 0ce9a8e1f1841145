#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "domcol/graph.hpp"

namespace domcol {

/// Reads the `p edge n m` / `e u v` text format (1-based ids, `c` comments).
/// Throws UsageError on malformed input.
Graph parse_dimacs(std::istream& in);
Graph parse_dimacs_string(const std::string& text);
Graph read_graph_file(const std::string& path);

void write_dimacs(std::ostream& out, const Graph& g);
std::string to_dimacs(const Graph& g);

/// Parses "3,5,7" (0-based vertex ids) into a set over g's vertices.
VertexSet parse_vertex_list(const std::string& text, int n);

}  // namespace domcol
