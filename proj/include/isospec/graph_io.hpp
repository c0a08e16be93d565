#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "isospec/graph.hpp"

namespace isospec {

/// Edge-list text: '#' lines and blank lines are ignored, the first other
/// line is "n m", then m lines "u v" with 0-based vertices.
SimpleGraph read_edge_list(std::istream& in);
SimpleGraph read_edge_list_file(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const SimpleGraph& g);

/// Undirected `graph { ... }` with bare integer node ids.
void write_dot(std::ostream& out, const SimpleGraph& g, const std::string& name = "");

}  // namespace isospec
