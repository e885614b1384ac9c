#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chromagraph/budget.hpp"
#include "chromagraph/colouring.hpp"
#include "chromagraph/ffpoly.hpp"
#include "chromagraph/graph.hpp"
#include "json.hpp"

namespace chromagraph {

inline constexpr std::size_t kMinPairEdges = 1;
inline constexpr std::size_t kMaxPairEdges = 3;

/// Two graphs on 3n+1 vertices sharing the path v_1..v_{3n} (ids 0..3n-1).
/// Id 3n is v in G (adjacent to v_{n-1}, v_n) and v' in G' (adjacent to v_n,
/// v_{n+1}).
struct LemmaPair {
  std::size_t m = 0;
  std::size_t n = 0;
  Graph g;
  Graph gprime;
  std::vector<std::string> roles;        // names of the ids of G
  std::vector<std::string> roles_prime;  // names of the ids of G'

  /// Id of path vertex v_i, 1 <= i <= 3n.
  std::size_t path(std::size_t i) const { return i - 1; }
  std::size_t extra() const { return 3 * n; }
};

enum class PairSide { G, Gprime };

/// n = m + 2. Throws InvalidArgument for m outside [1, 3].
LemmaPair build_pair(std::size_t m);

/// Least t >= 1 such that neither v_{n-t} nor v_{n+t} is the differing vertex
/// of an adjacent pair in X. X must be distinct proper colourings of the given
/// side inducing a connected subgraph; otherwise InvalidCopy.
std::size_t t_of_copy(const LemmaPair& pair, PairSide side, unsigned k, std::span<const Colouring> copy);

/// Residue of x in {1..k}.
Colour wrap_colour(std::int64_t x, unsigned k);

/// f_X: reflects the colours strictly between v_{n-t} and v_{n+t} through
/// their sum and sends c(v) to v'. Returns the images in input order.
std::vector<Colouring> f_map(const LemmaPair& pair, unsigned k, std::span<const Colouring> copy);

/// g_X': the same construction from G' back to G.
std::vector<Colouring> g_map(const LemmaPair& pair, unsigned k, std::span<const Colouring> copy);

struct PatternComparison {
  Graph pattern;
  CanonicalCode code;
  Integer count_g;
  Integer count_gprime;
  bool equal() const { return count_g == count_gprime; }
};

struct InverseCheck {
  Graph pattern;
  PairSide from = PairSide::G;
  std::size_t available = 0;
  std::size_t sampled = 0;
  std::size_t failures = 0;
  std::vector<std::string> failure_notes;  // first few only
};

struct PairReport {
  LemmaPair pair;
  unsigned k = 0;
  std::uint64_t seed = 0;
  std::size_t colourings_g = 0;
  std::size_t colourings_gprime = 0;
  bool isomorphic = false;
  std::vector<PatternComparison> patterns;
  bool pass = false;
  std::optional<PatternComparison> witness;
  std::string witness_status;
  std::vector<InverseCheck> inverse_checks;
  bool inverse_pass = false;
};

inline constexpr std::size_t kInverseSamplesPerPattern = 100;

/// Compares induced-copy counts of every connected pattern with at most m
/// edges in C_k(G) and C_k(G'), searches for a distinguishing larger pattern,
/// and checks f and g on sampled copies from both sides.
PairReport verify_pair(std::size_t m, unsigned k, std::uint64_t seed = 0, const Budget& budget = {});

nlohmann::json to_json(const LemmaPair& pair);
nlohmann::json to_json(const PairReport& report);

}  // namespace chromagraph
