// Plain-text graph serialization and DOT export.
//
// Text format: first line "n m", then m lines "a b" (0-based endpoints), then
// optional lines "c v color" assigning node colors (unlisted nodes are 0).
#pragma once

#include <iosfwd>
#include <string>

#include "wlx/graph.hpp"

namespace wlx {

Graph read_graph(std::istream& in);
Graph read_graph_string(const std::string& text);

std::string write_graph(const Graph& g);

// DOT output; when root >= 0 that node is drawn double-circled.
std::string to_dot(const Graph& g, const std::string& name, int root = -1);

}  // namespace wlx
