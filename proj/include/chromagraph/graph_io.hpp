#pragma once

#include <string>
#include <string_view>

#include "chromagraph/graph.hpp"

namespace chromagraph {

enum class GraphFormat { EdgeList, Graph6 };

GraphFormat parse_format(std::string_view name);

/// Edge-list text is a header "n m" followed by m lines "u v" with 0-based
/// ids. Duplicate edges collapse; self-loops and out-of-range ids are parse
/// errors that name the offending line.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::EdgeList);

/// "n m\n" then one "u v\n" per edge with u < v, sorted.
std::string to_edge_list(const Graph& g);

/// Standard graph6 encoding, n <= 62.
std::string to_graph6(const Graph& g);

std::string serialize(const Graph& g, GraphFormat format);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace chromagraph
