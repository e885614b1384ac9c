#pragma once

#include <functional>
#include <span>
#include <vector>

#include "chromagraph/abstract_graph.hpp"
#include "chromagraph/budget.hpp"
#include "chromagraph/ffpoly.hpp"
#include "chromagraph/graph.hpp"

namespace chromagraph {

inline constexpr std::size_t kMaxDecompositionVertices = 10;

struct DecompositionTerm {
  Graph graph;
  CanonicalCode code;
  /// Number of tuples (S_1, ..., S_t) of vertex subsets of F with F[S_i]
  /// isomorphic to R_i and the S_i covering V(F).
  Integer multiplicity;
};

/// Expansion of a product of induced-copy counts:
///   prod_i pi^(R_i) = sum_F M(F) pi^(F)   for every G and k.
struct DecompositionTable {
  std::vector<Graph> components;
  /// Sorted by (vertex count, edge count, code); every M(F) >= 1.
  std::vector<DecompositionTerm> terms;

  const DecompositionTerm* find(const CanonicalCode& code) const;
};

/// Builds the table by overlaying copies of the components in every
/// consistent way, deduplicating the unions by canonical code, and counting
/// subset tuples on each class directly.
DecompositionTable product_decomposition(std::span<const Graph> components, const Budget& budget = {});

/// Connected components of h as standalone graphs.
std::vector<Graph> component_graphs(const Graph& h);

/// pi^(H) for disconnected H: solves the product identity for the term
/// F = H, resolving every other F recursively (each has fewer components).
FFPoly gcp_disconnected(const Graph& g, const Graph& h, const Budget& budget = {});

/// gcp_partition for connected H, gcp_disconnected otherwise.
FFPoly generalised_chromatic_polynomial(const Graph& g, const Graph& h, const Budget& budget = {});

/// Numeric counterpart of gcp_disconnected on a concrete graph: counts of a
/// disconnected pattern from counts of connected ones.
Integer count_induced_copies_by_decomposition(const AbstractGraph& ag, const Graph& h,
                                              const Budget& budget = {});

/// Pointwise formula recovering pi^(H) for connected H from graphs that do
/// not include H, built from the product decomposition of H+ = H plus an
/// isolated vertex:
///   pi^(H) (pi^(K1) - |V(H)|) = sum_{F not iso H} M(F) pi^(F).
struct IsolationFormula {
  Graph pattern;
  Graph extended;  // H+
  /// Terms F with M(F) > 0 and F not isomorphic to H (H+ included).
  std::vector<DecompositionTerm> numerator;
  /// M(H) in the table, always |V(H)|.
  Integer pattern_multiplicity;

  /// Every graph whose count the formula consumes: H+, the other F, and K1.
  std::vector<Graph> family() const;

  /// Evaluates pi^(H) from counts supplied per family member. For H = K1 the
  /// identity is the quadratic pi^2 - pi = S and the non-negative root is
  /// returned. Throws SingularPoint when the value is not determined.
  Integer evaluate(const std::function<Integer(const Graph&)>& count_of) const;
};

IsolationFormula isolate_connected(const Graph& h, const Budget& budget = {});

}  // namespace chromagraph
