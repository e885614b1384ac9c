#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "chromagraph/abstract_graph.hpp"
#include "chromagraph/budget.hpp"
#include "chromagraph/colouring.hpp"
#include "chromagraph/ffpoly.hpp"
#include "chromagraph/graph.hpp"

namespace chromagraph {

/// Visits every connected vertex set of the given size exactly once (ESU
/// enumeration, parallel over root vertices). `visit` receives the set and
/// the worker index; it may be called concurrently for distinct workers.
void for_each_connected_set(
    const AbstractGraph& ag, std::size_t size, const Budget& budget,
    const std::function<void(std::span<const VertexId>, unsigned worker)>& visit);

/// Subgraph of ag induced on `vertices`, in the given order.
Graph induced_pattern(const AbstractGraph& ag, std::span<const VertexId> vertices);

/// Number of vertex subsets of ag inducing a copy of h. Connected patterns
/// are counted by connected-set extension; disconnected ones by combining
/// counts through the product decomposition of their components.
Integer count_induced_copies(const AbstractGraph& ag, const Graph& h, const Budget& budget = {});
Integer count_induced_copies(const ColouringGraph& cg, const Graph& h, const Budget& budget = {});

/// Every induced copy of a connected pattern h, each as a sorted vertex list,
/// in lexicographic order.
std::vector<std::vector<VertexId>> collect_induced_copies(const AbstractGraph& ag, const Graph& h,
                                                          const Budget& budget = {});

}  // namespace chromagraph
