#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace chromagraph {

/// Small simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one 64-bit row mask per vertex, so n is capped at
/// kMaxVertices. Every base graph and pattern graph handled by the library
/// lives comfortably below that.
class Graph {
 public:
  static constexpr std::size_t kMaxVertices = 64;
  using Mask = std::uint64_t;
  using Edge = std::pair<std::size_t, std::size_t>;

  Graph() = default;
  explicit Graph(std::size_t n, std::string name = {});

  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::string name = {});

  std::size_t size() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept;
  bool empty() const noexcept { return rows_.empty(); }

  bool adjacent(std::size_t u, std::size_t v) const {
    return (rows_[u] >> v) & 1u;
  }
  Mask row(std::size_t v) const { return rows_[v]; }
  std::size_t degree(std::size_t v) const;

  // Throws InvalidArgument on self-loops and out-of-range ids; duplicate
  // edges are absorbed.
  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;
  /// Degrees sorted ascending.
  std::vector<std::size_t> degree_sequence() const;

  /// Vertex sets of the connected components, each sorted, ordered by their
  /// smallest vertex.
  std::vector<std::vector<std::size_t>> components() const;
  bool is_connected() const;

  /// Subgraph induced on `vertices`, relabelled 0..|vertices|-1 in the given
  /// order.
  Graph induced(std::span<const std::size_t> vertices) const;
  Graph induced_mask(Mask vertices) const;
  /// Graph with vertex v renamed to perm[v].
  Graph relabelled(std::span<const std::size_t> perm) const;

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.rows_ == b.rows_;
  }

 private:
  std::vector<Mask> rows_;
  std::string name_;
};

Graph disjoint_union(const Graph& a, const Graph& b);

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph star_graph(std::size_t leaves);

/// Certificate of an isomorphism class: vertex count followed by the packed
/// upper triangle of the adjacency matrix under a canonical ordering.
struct CanonicalCode {
  std::vector<std::uint8_t> bytes;

  auto operator<=>(const CanonicalCode&) const = default;
  bool operator==(const CanonicalCode&) const = default;

  std::string hex() const;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& code) const noexcept;
};

inline constexpr std::size_t kMaxCanonicalVertices = 16;

/// Canonical form by colour refinement plus individualisation search.
/// Throws UnsupportedSize above kMaxCanonicalVertices.
CanonicalCode canonical_form(const Graph& g);

/// The graph whose adjacency matrix the code spells out.
Graph from_canonical(const CanonicalCode& code);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace chromagraph
