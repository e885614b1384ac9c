#include "chromagraph/catalog.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "chromagraph/error.hpp"

namespace chromagraph {
namespace {

using Keyed = std::map<std::tuple<std::size_t, CanonicalCode>, Graph>;

std::vector<Graph> classes_on(std::size_t vertices) {
  if (vertices == 0) return {Graph(0)};
  std::vector<Graph> previous = classes_on(vertices - 1);
  Keyed found;
  const std::size_t old_n = vertices - 1;
  for (const Graph& base : previous) {
    for (Graph::Mask nbrs = 0; nbrs < (Graph::Mask{1} << old_n); ++nbrs) {
      Graph g(vertices);
      for (const auto& [u, v] : base.edges()) g.add_edge(u, v);
      for (std::size_t u = 0; u < old_n; ++u)
        if ((nbrs >> u) & 1u) g.add_edge(u, old_n);
      auto code = canonical_form(g);
      found.try_emplace({g.edge_count(), code}, from_canonical(code));
    }
  }
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [key, g] : found) out.push_back(std::move(g));
  return out;
}

}  // namespace

std::vector<Graph> enumerate_graphs(std::size_t vertices, bool connected_only) {
  if (vertices > kMaxCatalogVertices) {
    fail(ErrorKind::UnsupportedSize, "graph catalog limited to " +
                                         std::to_string(kMaxCatalogVertices) + " vertices");
  }
  auto all = classes_on(vertices);
  if (connected_only) {
    std::erase_if(all, [](const Graph& g) { return !g.is_connected(); });
  }
  for (auto& g : all) g.set_name(describe(g));
  return all;
}

std::vector<Graph> enumerate_connected_graphs(std::size_t max_edges) {
  if (max_edges > kMaxCatalogEdges) {
    fail(ErrorKind::UnsupportedSize, "connected-pattern catalog limited to " +
                                         std::to_string(kMaxCatalogEdges) + " edges");
  }
  std::vector<Graph> out;
  for (std::size_t v = 1; v <= max_edges + 1; ++v) {
    for (Graph& g : enumerate_graphs(v, true)) {
      if (g.edge_count() <= max_edges) out.push_back(std::move(g));
    }
  }
  return out;
}

std::string describe(const Graph& g) {
  const std::size_t n = g.size();
  const std::size_t m = g.edge_count();
  if (n == 0) return "K0";
  if (m == n * (n - 1) / 2) return "K" + std::to_string(n);
  if (m == 0) return std::to_string(n) + "K1";
  if (n >= 3 && is_isomorphic(g, path_graph(n))) return "P" + std::to_string(n);
  if (n >= 4 && is_isomorphic(g, cycle_graph(n))) return "C" + std::to_string(n);
  if (n >= 4 && is_isomorphic(g, star_graph(n - 1))) return "K1," + std::to_string(n - 1);
  return "n" + std::to_string(n) + "m" + std::to_string(m) + "#" + canonical_form(g).hex();
}

}  // namespace chromagraph
