#include "chromagraph/reconstruct.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <string>
#include <unordered_map>

#include "chromagraph/catalog.hpp"
#include "chromagraph/colouring.hpp"
#include "chromagraph/error.hpp"
#include "chromagraph/graph_io.hpp"
#include "chromagraph/parallel.hpp"

namespace chromagraph {
namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

std::string join(const std::vector<std::size_t>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "}";
}

// Scratch arrays sized |V| reused across centers; entries are valid only when
// their stamp matches the current one.
class FanWorker {
 public:
  explicit FanWorker(const AbstractGraph& ag)
      : ag_(ag), mark_(ag.size(), 0), label_(ag.size(), kUnset), row_stamp_(ag.size(), 0) {}

  CliqueFan fan(VertexId c) {
    ++stamp_;
    const auto nbrs = ag_.neighbours(c);
    for (VertexId x : nbrs) {
      mark_[x] = stamp_;
      label_[x] = kUnset;
    }
    std::vector<std::vector<VertexId>> comps;
    std::vector<VertexId> queue;
    inside_.clear();
    for (VertexId x : nbrs) {
      if (label_[x] != kUnset) continue;
      const auto id = static_cast<std::uint32_t>(comps.size());
      comps.emplace_back();
      label_[x] = id;
      queue.assign(1, x);
      for (std::size_t q = 0; q < queue.size(); ++q) {
        const VertexId y = queue[q];
        comps.back().push_back(y);
        std::size_t inside = 0;
        for (VertexId z : ag_.neighbours(y)) {
          if (mark_[z] != stamp_) continue;
          ++inside;
          if (label_[z] == kUnset) {
            label_[z] = id;
            queue.push_back(z);
          }
        }
        inside_.emplace_back(y, inside);
      }
    }
    // Components are cliques iff every member sees all others.
    for (const auto& [x, inside] : inside_) {
      const auto& comp = comps[label_[x]];
      if (inside + 1 != comp.size()) throw_witness(c, comp, x);
    }
    CliqueFan fan;
    fan.center = c;
    for (auto& comp : comps) {
      comp.push_back(c);
      std::sort(comp.begin(), comp.end());
    }
    std::sort(comps.begin(), comps.end());
    // Labels follow the sorted clique order from here on.
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (VertexId x : comps[i])
        if (x != c) label_[x] = static_cast<std::uint32_t>(i);
    fan.cliques = std::move(comps);
    return fan;
  }

  // t[a][b] for the fan most recently returned by fan(): every y != c with
  // cnt_a(y) neighbours in clique a and cnt_b(y) in clique b closes
  // cnt_a(y) * cnt_b(y) of the counted 4-cycles.
  std::vector<std::uint64_t> t_matrix(const CliqueFan& fan) {
    const std::size_t s = fan.cliques.size();
    ++row_stamp_value_;
    touched_.clear();
    if (counts_.size() != ag_.size() * s) counts_.assign(ag_.size() * s, 0);
    const VertexId c = fan.center;
    for (VertexId x : ag_.neighbours(c)) {
      const std::uint32_t a = label_[x];
      for (VertexId y : ag_.neighbours(x)) {
        if (y == c) continue;
        std::uint32_t* row = counts_.data() + std::size_t{y} * s;
        if (row_stamp_[y] != row_stamp_value_) {
          row_stamp_[y] = row_stamp_value_;
          touched_.push_back(y);
          std::fill(row, row + s, 0);
        }
        ++row[a];
      }
    }
    std::vector<std::uint64_t> t(s * s, 0);
    for (VertexId y : touched_) {
      const std::uint32_t* row = counts_.data() + std::size_t{y} * s;
      for (std::size_t a = 0; a < s; ++a) {
        const std::uint64_t ca = row[a];
        if (!ca) continue;
        for (std::size_t b = a + 1; b < s; ++b) t[a * s + b] += ca * row[b];
      }
    }
    for (std::size_t a = 0; a < s; ++a)
      for (std::size_t b = a + 1; b < s; ++b) t[b * s + a] = t[a * s + b];
    return t;
  }

  Graph candidate(const CliqueFan& fan, unsigned k) {
    const std::size_t s = fan.cliques.size();
    if (s > Graph::kMaxVertices) {
      fail(ErrorKind::UnsupportedSize, "fan of " + std::to_string(s) + " cliques exceeds " +
                                           std::to_string(Graph::kMaxVertices) + " base vertices");
    }
    const auto t = t_matrix(fan);
    Graph g(s);
    for (std::size_t a = 0; a < s; ++a) {
      for (std::size_t b = a + 1; b < s; ++b) {
        if (Integer(t[a * s + b]) < edge_threshold(k, fan.cliques[a].size(), fan.cliques[b].size()))
          g.add_edge(a, b);
      }
    }
    return g;
  }

 private:
  [[noreturn]] void throw_witness(VertexId c, const std::vector<VertexId>& comp, VertexId x) {
    // x misses some member of its component; a BFS from x inside N(c) finds
    // one at distance two, giving an induced path.
    for (VertexId w : ag_.neighbours(x)) {
      if (mark_[w] != stamp_) continue;
      for (VertexId y : ag_.neighbours(w)) {
        if (y != x && mark_[y] == stamp_ && !ag_.adjacent(x, y)) {
          fail(ErrorKind::NotAColouringGraph,
               "neighbourhood of vertex " + std::to_string(c) + " has a non-clique component (induced P3 " +
                   std::to_string(x) + "-" + std::to_string(w) + "-" + std::to_string(y) + ")");
        }
      }
    }
    fail(ErrorKind::Internal, "component of size " + std::to_string(comp.size()) + " without witness");
  }

  const AbstractGraph& ag_;
  std::uint32_t stamp_ = 0;
  std::vector<std::uint32_t> mark_;
  std::vector<std::uint32_t> label_;
  std::uint32_t row_stamp_value_ = 0;
  std::vector<std::uint32_t> row_stamp_;
  std::vector<VertexId> touched_;
  std::vector<std::uint32_t> counts_;  // |V| x s, rows valid under row_stamp_
  std::vector<std::pair<VertexId, std::size_t>> inside_;
};

std::vector<std::size_t> fan_degrees(const CliqueFan& fan, unsigned k) {
  std::vector<std::size_t> degrees;
  for (const auto& clique : fan.cliques) {
    degrees.push_back(clique.size() <= k ? k - clique.size() : 0);
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

void check_vertex(const AbstractGraph& ag, VertexId c) {
  if (c >= ag.size()) fail(ErrorKind::InvalidArgument, "vertex " + std::to_string(c) + " out of range");
}

void regime_warnings(unsigned k, std::size_t n, std::vector<std::string>& out, bool degrees_only) {
  const std::size_t n2 = n * n;
  if (k <= 3 * n2) {
    out.push_back("k = " + std::to_string(k) + " <= 3n^2 = " + std::to_string(3 * n2) +
                  ": the degree sequence is not guaranteed");
  }
  if (!degrees_only && k <= 5 * n2) {
    out.push_back("k = " + std::to_string(k) + " <= 5n^2 = " + std::to_string(5 * n2) +
                  ": reconstruction is not guaranteed");
  }
}

struct Sampled {
  std::vector<CliqueFan> fans;
  std::vector<Graph> candidates;
};

Sampled run_fans(const AbstractGraph& ag, unsigned k, std::span<const VertexId> vertices,
                 bool candidates, const Budget& budget) {
  Sampled out;
  out.fans.resize(vertices.size());
  if (candidates) out.candidates.resize(vertices.size());
  const unsigned workers = resolve_threads(budget.threads);
  std::vector<std::unique_ptr<FanWorker>> scratch(workers);
  const std::size_t chunk = 16;
  const std::size_t tasks = (vertices.size() + chunk - 1) / chunk;
  detail::parallel_for(tasks, workers, [&](std::size_t task, unsigned worker) {
    auto& fw = scratch[worker];
    if (!fw) fw = std::make_unique<FanWorker>(ag);
    const std::size_t end = std::min(vertices.size(), (task + 1) * chunk);
    for (std::size_t i = task * chunk; i < end; ++i) {
      out.fans[i] = fw->fan(vertices[i]);
      if (candidates) out.candidates[i] = fw->candidate(out.fans[i], k);
    }
  });
  return out;
}

}  // namespace

std::vector<VertexId> sample_vertices(const AbstractGraph& ag, const SampleSpec& spec) {
  std::vector<VertexId> out;
  if (spec.full || spec.size >= ag.size()) {
    out.resize(ag.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<VertexId>(i);
    return out;
  }
  const auto perm = seeded_permutation(ag.size(), spec.seed);
  out.assign(perm.begin(), perm.begin() + static_cast<long>(spec.size));
  std::sort(out.begin(), out.end());
  return out;
}

CliqueFan clique_fan(const AbstractGraph& ag, VertexId c) {
  check_vertex(ag, c);
  return FanWorker(ag).fan(c);
}

std::uint64_t count_t_uv(const AbstractGraph& ag, const CliqueFan& fan, std::size_t a, std::size_t b) {
  if (a == b) fail(ErrorKind::InvalidArgument, "count_t_uv needs two distinct cliques");
  if (a >= fan.cliques.size() || b >= fan.cliques.size()) {
    fail(ErrorKind::InvalidArgument, "clique index out of range");
  }
  std::unordered_map<VertexId, std::uint64_t> reach;
  for (VertexId c1 : fan.cliques[a]) {
    if (c1 == fan.center) continue;
    for (VertexId y : ag.neighbours(c1))
      if (y != fan.center) ++reach[y];
  }
  std::uint64_t total = 0;
  for (VertexId c3 : fan.cliques[b]) {
    if (c3 == fan.center) continue;
    for (VertexId y : ag.neighbours(c3)) {
      if (y == fan.center) continue;
      auto it = reach.find(y);
      if (it != reach.end()) total += it->second;
    }
  }
  return total;
}

Integer edge_threshold(unsigned k, std::size_t clique_a, std::size_t clique_b) {
  const Integer kk = k;
  const Integer du = kk - Integer(clique_a);
  const Integer dv = kk - Integer(clique_b);
  return kk * kk - kk * (du + dv + 2);
}

Graph candidate_graph(const AbstractGraph& ag, unsigned k, VertexId c) {
  check_vertex(ag, c);
  FanWorker fw(ag);
  const CliqueFan fan = fw.fan(c);
  return fw.candidate(fan, k);
}

DegreeSequenceResult degree_sequence(const AbstractGraph& ag, unsigned k, const SampleSpec& sample,
                                     const Budget& budget) {
  const auto vertices = sample_vertices(ag, sample);
  if (vertices.empty()) fail(ErrorKind::InvalidArgument, "empty graph has no colouring vertices");
  const Sampled s = run_fans(ag, k, vertices, false, budget);
  std::map<std::vector<std::size_t>, std::size_t> freq;
  for (const auto& fan : s.fans) ++freq[fan_degrees(fan, k)];
  auto best = freq.begin();
  for (auto it = freq.begin(); it != freq.end(); ++it)
    if (it->second > best->second) best = it;
  DegreeSequenceResult result;
  result.sampled = vertices.size();
  if (2 * best->second <= vertices.size()) {
    std::string table;
    for (const auto& [seq, count] : freq) table += " " + join(seq) + ":" + std::to_string(count);
    fail(ErrorKind::AmbiguousMajority, "no degree multiset holds a strict majority;" + table);
  }
  result.degrees = best->first;
  result.support = best->second;
  regime_warnings(k, result.degrees.size(), result.warnings, true);
  return result;
}

Rational ReconstructionReport::majority_fraction() const {
  if (candidates_sampled == 0) return Rational(0);
  return Rational(Integer(majority_count), Integer(candidates_sampled));
}

ReconstructionReport reconstruct(const AbstractGraph& ag, unsigned k, const SampleSpec& sample,
                                 const Budget& budget) {
  if (k == 0) fail(ErrorKind::InvalidArgument, "palette size must be positive");
  const auto vertices = sample_vertices(ag, sample);
  if (vertices.empty()) fail(ErrorKind::InvalidArgument, "empty graph has no colouring vertices");
  const Sampled s = run_fans(ag, k, vertices, true, budget);

  std::map<std::size_t, std::size_t> fan_sizes;
  for (const auto& fan : s.fans) ++fan_sizes[fan.cliques.size()];
  if (fan_sizes.size() > 1) {
    std::string table;
    for (const auto& [size, count] : fan_sizes)
      table += " " + std::to_string(size) + " cliques:" + std::to_string(count);
    fail(ErrorKind::InconsistentFans, "sampled vertices disagree on the number of cliques;" + table);
  }

  ReconstructionReport report;
  report.k = k;
  report.sample = sample;
  report.n_inferred = fan_sizes.begin()->first;
  report.candidates_sampled = vertices.size();
  regime_warnings(k, report.n_inferred, report.warnings, false);

  std::map<std::vector<std::size_t>, std::size_t> degree_freq;
  for (const auto& fan : s.fans) ++degree_freq[fan_degrees(fan, k)];
  auto modal = degree_freq.begin();
  for (auto it = degree_freq.begin(); it != degree_freq.end(); ++it)
    if (it->second > modal->second) modal = it;
  report.degree_sequence = modal->first;
  report.degree_sequence_support = modal->second;
  if (2 * modal->second <= vertices.size()) {
    report.warnings.push_back("degree multiset " + join(modal->first) + " has no strict majority");
  }

  std::map<CanonicalCode, std::size_t> freq;
  report.per_candidate.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    auto code = canonical_form(s.candidates[i]);
    ++freq[code];
    report.per_candidate.emplace_back(vertices[i], std::move(code));
  }
  for (const auto& [code, count] : freq) {
    Graph g = from_canonical(code);
    g.set_name(describe(g));
    report.histogram.push_back(CandidateClass{code, std::move(g), count});
  }
  std::stable_sort(report.histogram.begin(), report.histogram.end(),
                   [](const CandidateClass& a, const CandidateClass& b) { return a.count > b.count; });
  const CandidateClass& top = report.histogram.front();
  if (2 * top.count <= vertices.size()) {
    std::string table;
    for (const auto& cls : report.histogram)
      table += " " + cls.graph.name() + ":" + std::to_string(cls.count);
    fail(ErrorKind::AmbiguousMajority, "no candidate class holds a strict majority;" + table);
  }
  report.majority_graph = top.graph;
  report.majority_code = top.code;
  report.majority_count = top.count;
  return report;
}

nlohmann::json to_json(const ReconstructionReport& report) {
  auto graph_json = [](const Graph& g, const CanonicalCode& code) {
    return nlohmann::json{{"name", g.name()}, {"code", code.hex()}, {"edge_list", to_edge_list(g)}};
  };
  nlohmann::json histogram = nlohmann::json::array();
  for (const auto& cls : report.histogram) {
    auto entry = graph_json(cls.graph, cls.code);
    entry["count"] = cls.count;
    histogram.push_back(std::move(entry));
  }
  nlohmann::json per_candidate = nlohmann::json::array();
  for (const auto& [v, code] : report.per_candidate) per_candidate.push_back({v, code.hex()});
  const Rational frac = report.majority_fraction();
  return {
      {"k", report.k},
      {"n_inferred", report.n_inferred},
      {"degree_sequence", report.degree_sequence},
      {"degree_sequence_support", report.degree_sequence_support},
      {"candidates_sampled", report.candidates_sampled},
      {"sample",
       {{"mode", report.sample.full ? "full" : "sample"},
        {"size", report.sample.size},
        {"seed", report.sample.seed}}},
      {"majority_graph", graph_json(report.majority_graph, report.majority_code)},
      {"majority_fraction",
       {{"numerator", report.majority_count},
        {"denominator", report.candidates_sampled},
        {"value", frac.convert_to<double>()}}},
      {"histogram", std::move(histogram)},
      {"per_candidate", std::move(per_candidate)},
      {"warnings", report.warnings},
  };
}

}  // namespace chromagraph
