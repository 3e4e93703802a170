#pragma once

#include <string>

#include "graph.hpp"

namespace arbordom {

// Text edge-list format:
//   line 1: "n m"
//   then m lines "u v" with 0 <= u < v < n.
// Parse failures throw Errc::parse and name the offending 1-based line.
Graph read_graph_text(const std::string& text);
std::string write_graph_text(const Graph& g);

Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace arbordom
