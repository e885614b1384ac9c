#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "chromagraph/abstract_graph.hpp"
#include "chromagraph/budget.hpp"
#include "chromagraph/ffpoly.hpp"
#include "chromagraph/graph.hpp"
#include "json.hpp"

namespace chromagraph {

/// Colours are 1..k throughout, matching the palette [k].
using Colour = std::uint8_t;
using Colouring = std::vector<Colour>;
inline constexpr unsigned kMaxPalette = 255;

bool is_proper(const Graph& g, std::span<const Colour> c, unsigned k);
bool is_rainbow(std::span<const Colour> c);

/// Index of the single vertex where a and b differ; nullopt when they are
/// equal or differ in two or more places.
std::optional<std::size_t> differing_vertex(std::span<const Colour> a, std::span<const Colour> b);
std::size_t hamming_distance(std::span<const Colour> a, std::span<const Colour> b);

/// Number of proper k-colourings, by backtracking. Budget applies to the
/// count itself.
std::uint64_t count_colourings(const Graph& g, unsigned k, const Budget& budget = {});

/// All proper k-colourings in lexicographic order.
std::vector<Colouring> enumerate_colourings(const Graph& g, unsigned k, const Budget& budget = {});

/// Exact chromatic polynomial in the falling-factorial basis: N_t is the
/// number of partitions of V(G) into t independent sets.
FFPoly chromatic_polynomial(const Graph& g);

/// Proper k-colourings that are injective on V(G). Every injective
/// assignment is proper, so this is (k)_n.
Integer count_rainbow(const Graph& g, unsigned k);

/// Labelled k-colouring graph C_k(G).
class ColouringGraph {
 public:
  ColouringGraph(const ColouringGraph&) = delete;
  ColouringGraph& operator=(const ColouringGraph&) = delete;
  ColouringGraph(ColouringGraph&&) noexcept = default;
  ColouringGraph& operator=(ColouringGraph&&) noexcept = default;

  const Graph& base() const noexcept { return base_; }
  unsigned k() const noexcept { return k_; }
  std::size_t size() const noexcept { return topology_.size(); }

  std::span<const Colour> colouring(VertexId id) const {
    const std::size_t n = base_.size();
    return {colours_.data() + static_cast<std::size_t>(id) * n, n};
  }
  std::optional<VertexId> find(std::span<const Colour> c) const;

  const AbstractGraph& topology() const noexcept { return topology_; }

 private:
  friend ColouringGraph build_colouring_graph(const Graph&, unsigned, const Budget&);
  ColouringGraph() = default;

  Graph base_;
  unsigned k_ = 0;
  std::vector<Colour> colours_;
  // Keys view into colours_; a moved vector keeps its buffer, so moves are
  // safe but copies are not.
  std::unordered_map<std::string_view, VertexId> index_;
  AbstractGraph topology_;
};

/// Builds C_k(G): vertices are enumerate_colourings(g, k) in order; edges come
/// from recolouring each vertex of G in turn and looking the result up.
ColouringGraph build_colouring_graph(const Graph& g, unsigned k, const Budget& budget = {});

/// Seeded pseudorandom relabelling with colourings discarded.
AbstractGraph strip_labels(const ColouringGraph& cg, std::uint64_t seed);

/// Seeded permutation of 0..n-1 (Fisher-Yates over mt19937_64).
std::vector<VertexId> seeded_permutation(std::size_t n, std::uint64_t seed);

/// Sidecar mapping vertex id to its colour sequence.
nlohmann::json labels_json(const ColouringGraph& cg);

}  // namespace chromagraph
