#include "chromagraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "chromagraph/error.hpp"

namespace chromagraph {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "parse_error";
    case ErrorKind::UnsupportedSize: return "unsupported_size";
    case ErrorKind::BudgetExceeded: return "budget_exceeded";
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::NotAColouringGraph: return "not_a_colouring_graph";
    case ErrorKind::AmbiguousMajority: return "ambiguous_majority";
    case ErrorKind::InconsistentFans: return "inconsistent_fans";
    case ErrorKind::SingularPoint: return "singular_point";
    case ErrorKind::InvalidCopy: return "invalid_copy";
    case ErrorKind::Internal: return "internal_error";
  }
  return "unknown";
}

Graph::Graph(std::size_t n, std::string name) : rows_(n, 0), name_(std::move(name)) {
  if (n > kMaxVertices) {
    fail(ErrorKind::UnsupportedSize,
         "graph on " + std::to_string(n) + " vertices exceeds the " +
             std::to_string(kMaxVertices) + "-vertex limit");
  }
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::string name) {
  Graph g(n, std::move(name));
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (Mask r : rows_) twice += static_cast<std::size_t>(std::popcount(r));
  return twice / 2;
}

std::size_t Graph::degree(std::size_t v) const {
  return static_cast<std::size_t>(std::popcount(rows_[v]));
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= size() || v >= size()) {
    fail(ErrorKind::InvalidArgument, "edge (" + std::to_string(u) + ", " +
                                         std::to_string(v) + ") out of range for n=" +
                                         std::to_string(size()));
  }
  if (u == v) fail(ErrorKind::InvalidArgument, "self-loop at vertex " + std::to_string(u));
  rows_[u] |= Mask{1} << v;
  rows_[v] |= Mask{1} << u;
}

void Graph::remove_edge(std::size_t u, std::size_t v) {
  rows_[u] &= ~(Mask{1} << v);
  rows_[v] &= ~(Mask{1} << u);
}

std::vector<Graph::Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::size_t v = u + 1; v < size(); ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> d(size());
  for (std::size_t v = 0; v < size(); ++v) d[v] = degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<std::vector<std::size_t>> Graph::components() const {
  std::vector<std::vector<std::size_t>> out;
  Mask seen = 0;
  for (std::size_t s = 0; s < size(); ++s) {
    if ((seen >> s) & 1u) continue;
    Mask comp = Mask{1} << s;
    Mask frontier = comp;
    while (frontier) {
      Mask grow = 0;
      for (Mask f = frontier; f; f &= f - 1) grow |= rows_[std::countr_zero(f)];
      frontier = grow & ~comp;
      comp |= grow;
    }
    seen |= comp;
    std::vector<std::size_t> verts;
    for (Mask c = comp; c; c &= c - 1) verts.push_back(std::countr_zero(c));
    out.push_back(std::move(verts));
  }
  return out;
}

bool Graph::is_connected() const { return components().size() <= 1; }

Graph Graph::induced(std::span<const std::size_t> vertices) const {
  Graph g(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (adjacent(vertices[i], vertices[j])) g.add_edge(i, j);
    }
  }
  return g;
}

Graph Graph::induced_mask(Mask vertices) const {
  std::vector<std::size_t> list;
  for (Mask m = vertices; m; m &= m - 1) list.push_back(std::countr_zero(m));
  return induced(list);
}

Graph Graph::relabelled(std::span<const std::size_t> perm) const {
  if (perm.size() != size()) fail(ErrorKind::InvalidArgument, "relabelling has wrong length");
  Graph g(size(), name_);
  for (const auto& [u, v] : edges()) g.add_edge(perm[u], perm[v]);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.size() + b.size());
  for (const auto& [u, v] : a.edges()) g.add_edge(u, v);
  for (const auto& [u, v] : b.edges()) g.add_edge(a.size() + u, a.size() + v);
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(n, "K" + std::to_string(n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n, "P" + std::to_string(n));
  for (std::size_t v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) fail(ErrorKind::InvalidArgument, "cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(0, n - 1);
  g.set_name("C" + std::to_string(n));
  return g;
}

Graph empty_graph(std::size_t n) { return Graph(n, std::to_string(n) + "K1"); }

Graph star_graph(std::size_t leaves) {
  Graph g(leaves + 1, "K1," + std::to_string(leaves));
  for (std::size_t v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

}  // namespace chromagraph
