#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chromagraph/abstract_graph.hpp"
#include "chromagraph/budget.hpp"
#include "chromagraph/ffpoly.hpp"
#include "chromagraph/graph.hpp"
#include "json.hpp"

namespace chromagraph {

/// Maximal cliques through `center` in a colouring graph. Each clique lists
/// its members in increasing order and includes the center; cliques are
/// ordered lexicographically.
struct CliqueFan {
  VertexId center = 0;
  std::vector<std::vector<VertexId>> cliques;
};

/// Which vertices of the abstract graph are examined.
struct SampleSpec {
  bool full = false;
  std::size_t size = 200;
  std::uint64_t seed = 0;
};

/// Vertices selected by `spec`, in increasing order.
std::vector<VertexId> sample_vertices(const AbstractGraph& ag, const SampleSpec& spec);

/// Throws NotAColouringGraph (with an induced P3 as witness) when some
/// component of N(c) is not a clique.
CliqueFan clique_fan(const AbstractGraph& ag, VertexId c);

/// 4-cycles through the center meeting both cliques a and b away from it.
std::uint64_t count_t_uv(const AbstractGraph& ag, const CliqueFan& fan, std::size_t a, std::size_t b);

/// Threshold below which a pair of cliques is read as an edge.
Integer edge_threshold(unsigned k, std::size_t clique_a, std::size_t clique_b);

/// G_c: one vertex per clique of the fan, uv an edge iff t_uv < threshold.
Graph candidate_graph(const AbstractGraph& ag, unsigned k, VertexId c);

struct DegreeSequenceResult {
  std::vector<std::size_t> degrees;  // non-decreasing
  std::size_t support = 0;           // sampled vertices producing it
  std::size_t sampled = 0;
  std::vector<std::string> warnings;
};

/// Modal multiset {k - |J|} over the sampled fans. Throws AmbiguousMajority
/// when no multiset occurs for more than half of the sample.
DegreeSequenceResult degree_sequence(const AbstractGraph& ag, unsigned k, const SampleSpec& sample,
                                     const Budget& budget = {});

struct CandidateClass {
  CanonicalCode code;
  Graph graph;
  std::size_t count = 0;
};

struct ReconstructionReport {
  unsigned k = 0;
  std::size_t n_inferred = 0;
  std::vector<std::size_t> degree_sequence;
  std::size_t degree_sequence_support = 0;
  std::size_t candidates_sampled = 0;
  Graph majority_graph;
  CanonicalCode majority_code;
  std::size_t majority_count = 0;
  /// Descending count, then code.
  std::vector<CandidateClass> histogram;
  std::vector<std::pair<VertexId, CanonicalCode>> per_candidate;
  std::vector<std::string> warnings;
  SampleSpec sample;

  Rational majority_fraction() const;
};

/// Candidate graphs for every sampled vertex, grouped by canonical code. The
/// class holding a strict majority is the result.
ReconstructionReport reconstruct(const AbstractGraph& ag, unsigned k, const SampleSpec& sample,
                                 const Budget& budget = {});

nlohmann::json to_json(const ReconstructionReport& report);

}  // namespace chromagraph
