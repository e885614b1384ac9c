#include "chromagraph/counterexample.hpp"

#include <algorithm>
#include <string>

#include "chromagraph/catalog.hpp"
#include "chromagraph/error.hpp"
#include "chromagraph/graph_io.hpp"
#include "chromagraph/induced.hpp"

namespace chromagraph {
namespace {

constexpr std::size_t kMaxFailureNotes = 5;
constexpr std::size_t kWitnessExtraEdges = 3;
constexpr std::uint64_t kWitnessSubsetCeiling = 10'000'000;

Graph path_plus(std::size_t n, std::size_t a, std::size_t b) {
  Graph g = path_graph(3 * n);
  g = disjoint_union(g, complete_graph(1));
  g.add_edge(3 * n, a);
  g.add_edge(3 * n, b);
  return g;
}

bool adjacent_colourings(std::span<const Colour> a, std::span<const Colour> b) {
  return hamming_distance(a, b) == 1;
}

std::string colouring_text(std::span<const Colour> c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
  return out;
}

std::vector<Colouring> transport(const LemmaPair& pair, unsigned k, std::span<const Colouring> copy,
                                 PairSide from) {
  const std::size_t t = t_of_copy(pair, from, k, copy);
  const std::size_t n = pair.n;
  std::vector<Colouring> out;
  out.reserve(copy.size());
  for (const Colouring& c : copy) {
    const std::int64_t s = std::int64_t{c[pair.path(n - t)]} + c[pair.path(n + t)];
    Colouring image = c;
    for (std::size_t d = 0; d + 1 < 2 * t; ++d) {
      // i = d - (t - 1) runs over (-t, t)
      const std::size_t target = n + d + 1 - t;
      const std::size_t mirror = n + t - 1 - d;
      image[pair.path(target)] = wrap_colour(s - c[pair.path(mirror)], k);
    }
    image[pair.extra()] = wrap_colour(s - c[pair.extra()], k);
    out.push_back(std::move(image));
  }
  return out;
}

PatternComparison compare(const Graph& h, const ColouringGraph& a, const ColouringGraph& b,
                          const Budget& budget) {
  return PatternComparison{h, canonical_form(h), count_induced_copies(a, h, budget),
                           count_induced_copies(b, h, budget)};
}

std::uint64_t sample_seed(std::uint64_t seed, std::size_t pattern, PairSide side) {
  return seed ^ (0x9e3779b97f4a7c15ull * (2 * pattern + (side == PairSide::G ? 1 : 2)));
}

InverseCheck check_inverse(const LemmaPair& pair, unsigned k, const Graph& h, PairSide from,
                           const ColouringGraph& src, const ColouringGraph& dst, std::uint64_t seed,
                           const Budget& budget) {
  InverseCheck check;
  check.pattern = h;
  check.from = from;
  const Graph& dst_graph = from == PairSide::G ? pair.gprime : pair.g;
  const PairSide to = from == PairSide::G ? PairSide::Gprime : PairSide::G;
  const auto copies = collect_induced_copies(src.topology(), h, budget);
  check.available = copies.size();
  std::vector<std::size_t> chosen;
  if (copies.size() <= kInverseSamplesPerPattern) {
    for (std::size_t i = 0; i < copies.size(); ++i) chosen.push_back(i);
  } else {
    const auto perm = seeded_permutation(copies.size(), seed);
    chosen.assign(perm.begin(), perm.begin() + kInverseSamplesPerPattern);
    std::sort(chosen.begin(), chosen.end());
  }
  check.sampled = chosen.size();

  auto note = [&](const std::vector<Colouring>& x, const std::string& why) {
    ++check.failures;
    if (check.failure_notes.size() < kMaxFailureNotes)
      check.failure_notes.push_back(why + " at copy containing " + colouring_text(x.front()));
  };

  for (std::size_t idx : chosen) {
    std::vector<Colouring> x;
    for (VertexId id : copies[idx]) {
      auto c = src.colouring(id);
      x.emplace_back(c.begin(), c.end());
    }
    try {
      const std::size_t t = t_of_copy(pair, from, k, x);
      const auto y = from == PairSide::G ? f_map(pair, k, x) : g_map(pair, k, x);
      bool ok = true;
      for (const auto& c : y) {
        if (!is_proper(dst_graph, c, k) || !dst.find(c)) {
          note(x, "image is not a proper colouring of the other graph");
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      for (std::size_t i = 0; i < x.size() && ok; ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
          if (y[i] == y[j] || adjacent_colourings(x[i], x[j]) != adjacent_colourings(y[i], y[j])) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) {
        note(x, "image does not preserve adjacency");
        continue;
      }
      if (t_of_copy(pair, to, k, y) != t) {
        note(x, "t changes under the map");
        continue;
      }
      const auto back = from == PairSide::G ? g_map(pair, k, y) : f_map(pair, k, y);
      if (back != x) note(x, "inverse map does not return the copy");
    } catch (const Error& e) {
      note(x, std::string("error: ") + e.what());
    }
  }
  return check;
}

}  // namespace

LemmaPair build_pair(std::size_t m) {
  if (m < kMinPairEdges || m > kMaxPairEdges) {
    fail(ErrorKind::InvalidArgument, "m must lie in [" + std::to_string(kMinPairEdges) + ", " +
                                         std::to_string(kMaxPairEdges) + "], got " + std::to_string(m));
  }
  LemmaPair pair;
  pair.m = m;
  pair.n = m + 2;
  const std::size_t n = pair.n;
  pair.g = path_plus(n, pair.path(n - 1), pair.path(n));
  pair.gprime = path_plus(n, pair.path(n), pair.path(n + 1));
  pair.g.set_name("G(m=" + std::to_string(m) + ")");
  pair.gprime.set_name("G'(m=" + std::to_string(m) + ")");
  for (std::size_t i = 1; i <= 3 * n; ++i) pair.roles.push_back("v" + std::to_string(i));
  pair.roles_prime = pair.roles;
  pair.roles.push_back("v");
  pair.roles_prime.push_back("v'");
  if (is_isomorphic(pair.g, pair.gprime)) fail(ErrorKind::Internal, "constructed pair is isomorphic");
  return pair;
}

Colour wrap_colour(std::int64_t x, unsigned k) {
  const auto kk = static_cast<std::int64_t>(k);
  return static_cast<Colour>(((x - 1) % kk + kk) % kk + 1);
}

std::size_t t_of_copy(const LemmaPair& pair, PairSide side, unsigned k, std::span<const Colouring> copy) {
  const Graph& g = side == PairSide::G ? pair.g : pair.gprime;
  if (copy.empty()) fail(ErrorKind::InvalidCopy, "empty copy");
  for (const auto& c : copy) {
    if (!is_proper(g, c, k)) fail(ErrorKind::InvalidCopy, "not a proper colouring: " + colouring_text(c));
  }
  std::vector<bool> used(g.size(), false);
  std::vector<std::size_t> reach(1, 0);
  std::vector<bool> seen(copy.size(), false);
  seen[0] = true;
  for (std::size_t i = 0; i < copy.size(); ++i) {
    for (std::size_t j = i + 1; j < copy.size(); ++j) {
      if (copy[i] == copy[j]) fail(ErrorKind::InvalidCopy, "repeated colouring " + colouring_text(copy[i]));
      if (auto at = differing_vertex(copy[i], copy[j])) used[*at] = true;
    }
  }
  for (std::size_t q = 0; q < reach.size(); ++q) {
    for (std::size_t j = 0; j < copy.size(); ++j) {
      if (!seen[j] && adjacent_colourings(copy[reach[q]], copy[j])) {
        seen[j] = true;
        reach.push_back(j);
      }
    }
  }
  if (reach.size() != copy.size()) fail(ErrorKind::InvalidCopy, "copy does not induce a connected subgraph");
  for (std::size_t t = 1; t < pair.n; ++t) {
    if (!used[pair.path(pair.n - t)] && !used[pair.path(pair.n + t)]) return t;
  }
  fail(ErrorKind::InvalidCopy, "every t in [1, n-1] meets a recoloured path vertex");
}

std::vector<Colouring> f_map(const LemmaPair& pair, unsigned k, std::span<const Colouring> copy) {
  return transport(pair, k, copy, PairSide::G);
}

std::vector<Colouring> g_map(const LemmaPair& pair, unsigned k, std::span<const Colouring> copy) {
  return transport(pair, k, copy, PairSide::Gprime);
}

PairReport verify_pair(std::size_t m, unsigned k, std::uint64_t seed, const Budget& budget) {
  PairReport report;
  report.pair = build_pair(m);
  report.k = k;
  report.seed = seed;
  report.isomorphic = is_isomorphic(report.pair.g, report.pair.gprime);
  const ColouringGraph cg = build_colouring_graph(report.pair.g, k, budget);
  const ColouringGraph cgp = build_colouring_graph(report.pair.gprime, k, budget);
  report.colourings_g = cg.size();
  report.colourings_gprime = cgp.size();

  const auto patterns = enumerate_connected_graphs(m);
  report.pass = true;
  for (const Graph& h : patterns) {
    report.patterns.push_back(compare(h, cg, cgp, budget));
    report.pass = report.pass && report.patterns.back().equal();
  }

  // Best effort: larger connected patterns by edge count, then 2K1.
  std::vector<Graph> probes;
  for (const Graph& h : enumerate_connected_graphs(std::min(m + kWitnessExtraEdges, kMaxCatalogEdges)))
    if (h.edge_count() > m) probes.push_back(h);
  probes.push_back(empty_graph(2));
  Budget witness_budget = budget;
  witness_budget.max_subsets = std::min(budget.max_subsets, kWitnessSubsetCeiling);
  report.witness_status = "none found";
  for (const Graph& h : probes) {
    try {
      auto cmp = compare(h, cg, cgp, witness_budget);
      if (!cmp.equal()) {
        report.witness = std::move(cmp);
        report.witness_status = "found";
        break;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
      report.witness_status = "budget exhausted at " + describe(h);
      break;
    }
  }

  report.inverse_pass = true;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    for (PairSide side : {PairSide::G, PairSide::Gprime}) {
      const auto& src = side == PairSide::G ? cg : cgp;
      const auto& dst = side == PairSide::G ? cgp : cg;
      auto check = check_inverse(report.pair, k, patterns[i], side, src, dst, sample_seed(seed, i, side), budget);
      report.inverse_pass = report.inverse_pass && check.failures == 0;
      report.inverse_checks.push_back(std::move(check));
    }
  }
  return report;
}

nlohmann::json to_json(const LemmaPair& pair) {
  return {{"m", pair.m},
          {"n", pair.n},
          {"G", {{"edge_list", to_edge_list(pair.g)}, {"roles", pair.roles}}},
          {"Gprime", {{"edge_list", to_edge_list(pair.gprime)}, {"roles", pair.roles_prime}}}};
}

nlohmann::json to_json(const PairReport& report) {
  auto comparison = [](const PatternComparison& c) {
    return nlohmann::json{{"pattern", describe(c.pattern)},
                          {"code", c.code.hex()},
                          {"vertices", c.pattern.size()},
                          {"edges", c.pattern.edge_count()},
                          {"count_G", to_decimal(c.count_g)},
                          {"count_Gprime", to_decimal(c.count_gprime)},
                          {"equal", c.equal()}};
  };
  nlohmann::json patterns = nlohmann::json::array();
  for (const auto& c : report.patterns) patterns.push_back(comparison(c));
  nlohmann::json inverse = nlohmann::json::array();
  for (const auto& c : report.inverse_checks) {
    inverse.push_back({{"pattern", describe(c.pattern)},
                       {"from", c.from == PairSide::G ? "G" : "Gprime"},
                       {"available", c.available},
                       {"sampled", c.sampled},
                       {"failures", c.failures},
                       {"notes", c.failure_notes}});
  }
  return {{"pair", to_json(report.pair)},
          {"k", report.k},
          {"seed", report.seed},
          {"colourings", {{"G", report.colourings_g}, {"Gprime", report.colourings_gprime}}},
          {"isomorphic", report.isomorphic},
          {"patterns", std::move(patterns)},
          {"pass", report.pass},
          {"witness", report.witness ? comparison(*report.witness) : nlohmann::json(nullptr)},
          {"witness_status", report.witness_status},
          {"inverse_checks", std::move(inverse)},
          {"inverse_pass", report.inverse_pass}};
}

}  // namespace chromagraph
