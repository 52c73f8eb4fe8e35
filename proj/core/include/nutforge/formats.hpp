#pragma once

#include <iosfwd>
#include <string>

#include "nutforge/graph.hpp"

namespace nutforge {

// Appendix-style edge list: first line "n m", then m lines "u v" with
// 0-based indices. Lines starting with '#' and blank lines are skipped.
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

// Standard graph6 ASCII encoding, order <= 62 (single-byte header).
Graph parse_graph6(const std::string& line);
std::string write_graph6(const Graph& g);

enum class GraphFormat { EdgeList, Graph6 };

// Heuristic: a first line of two integers is an edge list, otherwise graph6.
GraphFormat sniff_format(const std::string& text);
Graph parse_graph(const std::string& text, GraphFormat format);

Graph read_graph_file(const std::string& path, GraphFormat format);
Graph read_graph_file_auto(const std::string& path);

}  // namespace nutforge
