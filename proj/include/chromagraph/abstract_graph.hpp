#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chromagraph {

using VertexId = std::uint32_t;

/// Unlabelled graph of arbitrary size in compressed sparse row form.
/// Neighbour lists are sorted and free of duplicates and self-loops.
class AbstractGraph {
 public:
  AbstractGraph() : offsets_{0} {}

  /// Builds from an undirected edge list; each edge may appear once in either
  /// orientation, duplicates are merged.
  static AbstractGraph from_edges(std::size_t n,
                                  std::span<const std::pair<VertexId, VertexId>> edges);
  /// Takes ownership of ready-made CSR arrays (lists already sorted and
  /// symmetric).
  static AbstractGraph from_csr(std::vector<std::uint64_t> offsets,
                                std::vector<VertexId> targets);

  std::size_t size() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const VertexId> neighbours(VertexId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(VertexId u, VertexId v) const;

  /// The same graph with vertex v renamed to perm[v].
  AbstractGraph permuted(std::span<const VertexId> perm) const;

 private:
  std::vector<std::uint64_t> offsets_;
  std::vector<VertexId> targets_;
};

/// Edge-list text ("n m" header, then "u v" with u < v in sorted order).
std::string to_edge_list(const AbstractGraph& g);
AbstractGraph parse_abstract_graph(std::string_view text);

}  // namespace chromagraph
