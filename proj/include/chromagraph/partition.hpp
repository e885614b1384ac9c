#pragma once

#include <cstdint>
#include <vector>

#include "chromagraph/budget.hpp"
#include "chromagraph/ffpoly.hpp"
#include "chromagraph/graph.hpp"

namespace chromagraph {

inline constexpr std::size_t kMaxPartitionElements = 14;

/// Raw tallies from the valid-partition enumeration for (G, H).
struct PartitionTally {
  /// accepted[t] = number of valid partitions of V(G) x [h] with t parts whose
  /// h columns are pairwise distinct colourings inducing a copy of H, with
  /// the columns in their labelled order.
  std::vector<std::uint64_t> accepted;
  std::uint64_t nodes_visited = 0;
  std::size_t pattern_size = 0;
};

/// Enumerates valid partitions of V(G) x [h] as restricted-growth strings,
/// layer by layer, pruning a prefix as soon as a layer is not independent, a
/// column repeats an earlier one, or the columns so far cannot extend to an
/// induced copy of H.
PartitionTally tally_valid_partitions(const Graph& g, const Graph& h, const Budget& budget = {});

/// Generalised chromatic polynomial for connected or disconnected H from the
/// partition tallies: N_t = accepted[t] / h!. Integrality of the values is
/// checked at k = 0..|V(G)||V(H)|.
FFPoly gcp_partition(const Graph& g, const Graph& h, const Budget& budget = {});

}  // namespace chromagraph
