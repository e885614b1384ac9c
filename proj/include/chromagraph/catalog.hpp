#pragma once

#include <cstddef>
#include <vector>

#include "chromagraph/graph.hpp"

namespace chromagraph {

inline constexpr std::size_t kMaxCatalogEdges = 6;
inline constexpr std::size_t kMaxCatalogVertices = 8;

/// One representative per isomorphism class of graphs on exactly `vertices`
/// vertices, ordered by (edge count, canonical code). Built by extending every
/// class on one fewer vertex with each possible neighbourhood.
std::vector<Graph> enumerate_graphs(std::size_t vertices, bool connected_only = false);

/// Connected graphs with at most `max_edges` edges (K1 included), ordered by
/// (vertex count, edge count, canonical code).
std::vector<Graph> enumerate_connected_graphs(std::size_t max_edges);

/// Short human-readable label such as "K3" or "P4" when one applies,
/// otherwise "n<v>m<e>#<code>".
std::string describe(const Graph& g);

}  // namespace chromagraph
