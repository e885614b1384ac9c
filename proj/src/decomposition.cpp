#include "chromagraph/decomposition.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <string>

#include "chromagraph/error.hpp"
#include "chromagraph/induced.hpp"
#include "chromagraph/partition.hpp"

namespace chromagraph {
namespace {

constexpr std::size_t kMaxFreePairs = 24;
constexpr std::uint64_t kMaxOverlayGraphs = std::uint64_t{1} << 24;

// Pair requirements of a partial overlay: -1 open, 0 non-edge, 1 edge.
struct Overlay {
  std::size_t vertices = 0;
  std::array<std::int8_t, kMaxDecompositionVertices * kMaxDecompositionVertices> req;
  Overlay() { req.fill(-1); }
  std::int8_t& at(std::size_t a, std::size_t b) { return req[a * kMaxDecompositionVertices + b]; }
};

class OverlayBuilder {
 public:
  explicit OverlayBuilder(std::span<const Graph> comps) : comps_(comps) {}

  std::map<std::tuple<std::size_t, std::size_t, CanonicalCode>, Graph> run() {
    place(0, Overlay{});
    return std::move(found_);
  }

 private:
  void place(std::size_t i, const Overlay& ov) {
    if (i == comps_.size()) {
      finish(ov);
      return;
    }
    std::vector<std::size_t> map(comps_[i].size());
    assign(i, 0, ov, map, 0, 0);
  }

  // Maps vertex j of component i either onto an unused existing vertex or
  // onto the next fresh vertex.
  void assign(std::size_t i, std::size_t j, const Overlay& ov, std::vector<std::size_t>& map,
              std::uint64_t used, std::size_t fresh) {
    const Graph& r = comps_[i];
    if (j == r.size()) {
      Overlay next = ov;
      next.vertices = ov.vertices + fresh;
      for (std::size_t a = 0; a < r.size(); ++a) {
        for (std::size_t b = a + 1; b < r.size(); ++b) {
          const std::int8_t want = r.adjacent(a, b) ? 1 : 0;
          std::int8_t& cell = next.at(std::min(map[a], map[b]), std::max(map[a], map[b]));
          if (cell == -1) cell = want;
          else if (cell != want) return;
        }
      }
      place(i + 1, next);
      return;
    }
    for (std::size_t x = 0; x < ov.vertices; ++x) {
      if ((used >> x) & 1u) continue;
      map[j] = x;
      assign(i, j + 1, ov, map, used | (std::uint64_t{1} << x), fresh);
    }
    map[j] = ov.vertices + fresh;
    assign(i, j + 1, ov, map, used, fresh + 1);
  }

  void finish(Overlay ov) {
    const std::size_t v = ov.vertices;
    std::vector<std::pair<std::size_t, std::size_t>> open;
    Graph fixed(v);
    for (std::size_t a = 0; a < v; ++a) {
      for (std::size_t b = a + 1; b < v; ++b) {
        const auto cell = ov.at(a, b);
        if (cell == -1) open.emplace_back(a, b);
        else if (cell == 1) fixed.add_edge(a, b);
      }
    }
    if (open.size() > kMaxFreePairs) {
      fail(ErrorKind::BudgetExceeded, "product decomposition overlay has " +
                                          std::to_string(open.size()) + " undetermined pairs");
    }
    const std::uint64_t combos = std::uint64_t{1} << open.size();
    generated_ += combos;
    if (generated_ > kMaxOverlayGraphs) {
      fail(ErrorKind::BudgetExceeded, "product decomposition exceeds the overlay ceiling");
    }
    for (std::uint64_t s = 0; s < combos; ++s) {
      Graph g = fixed;
      for (std::size_t p = 0; p < open.size(); ++p)
        if ((s >> p) & 1u) g.add_edge(open[p].first, open[p].second);
      auto code = canonical_form(g);
      found_.try_emplace({g.size(), g.edge_count(), code}, from_canonical(code));
    }
  }

  std::span<const Graph> comps_;
  std::map<std::tuple<std::size_t, std::size_t, CanonicalCode>, Graph> found_;
  std::uint64_t generated_ = 0;
};

// Subset tuples covering V(F), by dynamic programming over covered masks.
Integer cover_tuples(const Graph& f, std::span<const Graph> comps) {
  const std::size_t v = f.size();
  const std::size_t full = (std::size_t{1} << v) - 1;
  std::map<CanonicalCode, std::vector<std::size_t>> copies;
  for (const Graph& r : comps) {
    auto code = canonical_form(r);
    if (copies.contains(code)) continue;
    std::vector<std::size_t>& list = copies[code];
    for (std::size_t s = 0; s <= full; ++s) {
      if (static_cast<std::size_t>(std::popcount(s)) != r.size()) continue;
      if (canonical_form(f.induced_mask(s)) == code) list.push_back(s);
    }
  }
  std::vector<Integer> ways(full + 1, 0);
  ways[0] = 1;
  for (const Graph& r : comps) {
    const auto& list = copies.at(canonical_form(r));
    std::vector<Integer> next(full + 1, 0);
    for (std::size_t m = 0; m <= full; ++m) {
      if (ways[m] == 0) continue;
      for (std::size_t s : list) next[m | s] += ways[m];
    }
    ways = std::move(next);
  }
  return ways[full];
}

using PolyMemo = std::map<CanonicalCode, FFPoly>;
using CountMemo = std::map<CanonicalCode, Integer>;

FFPoly gcp_recursive(const Graph& g, const Graph& h, const Budget& budget, PolyMemo& memo);

FFPoly solve_for_pattern(const Graph& g, const Graph& h, const Budget& budget, PolyMemo& memo) {
  const auto comps = component_graphs(h);
  const DecompositionTable table = product_decomposition(comps, budget);
  FFPoly rest = FFPoly::constant(1);
  for (const Graph& r : comps) rest = rest * gcp_recursive(g, r, budget, memo);
  const CanonicalCode self = canonical_form(h);
  Integer self_multiplicity = 0;
  for (const auto& term : table.terms) {
    if (term.code == self) {
      self_multiplicity = term.multiplicity;
      continue;
    }
    rest -= gcp_recursive(g, term.graph, budget, memo) * Rational(term.multiplicity);
  }
  if (self_multiplicity == 0) fail(ErrorKind::Internal, "pattern missing from its own decomposition table");
  return rest * Rational(Integer(1), self_multiplicity);
}

FFPoly gcp_recursive(const Graph& g, const Graph& h, const Budget& budget, PolyMemo& memo) {
  const CanonicalCode code = canonical_form(h);
  if (auto it = memo.find(code); it != memo.end()) return it->second;
  FFPoly p = h.is_connected() ? gcp_partition(g, h, budget) : solve_for_pattern(g, h, budget, memo);
  memo.emplace(code, p);
  return p;
}

Integer count_recursive(const AbstractGraph& ag, const Graph& h, const Budget& budget, CountMemo& memo) {
  const CanonicalCode code = canonical_form(h);
  if (auto it = memo.find(code); it != memo.end()) return it->second;
  Integer value;
  if (h.is_connected()) {
    value = count_induced_copies(ag, h, budget);
  } else {
    const auto comps = component_graphs(h);
    const DecompositionTable table = product_decomposition(comps, budget);
    Integer rest = 1;
    for (const Graph& r : comps) rest *= count_recursive(ag, r, budget, memo);
    Integer self_multiplicity = 0;
    for (const auto& term : table.terms) {
      if (term.code == code) {
        self_multiplicity = term.multiplicity;
        continue;
      }
      rest -= term.multiplicity * count_recursive(ag, term.graph, budget, memo);
    }
    if (self_multiplicity == 0 || rest % self_multiplicity != 0) {
      fail(ErrorKind::Internal, "product decomposition produced a non-integral count");
    }
    value = rest / self_multiplicity;
  }
  memo.emplace(code, value);
  return value;
}

}  // namespace

const DecompositionTerm* DecompositionTable::find(const CanonicalCode& code) const {
  for (const auto& t : terms)
    if (t.code == code) return &t;
  return nullptr;
}

std::vector<Graph> component_graphs(const Graph& h) {
  std::vector<Graph> out;
  for (const auto& comp : h.components()) out.push_back(h.induced(comp));
  return out;
}

DecompositionTable product_decomposition(std::span<const Graph> components, const Budget&) {
  std::size_t total = 0;
  for (const Graph& r : components) {
    if (r.size() == 0) fail(ErrorKind::InvalidArgument, "decomposition components must be non-empty");
    total += r.size();
  }
  if (total > kMaxDecompositionVertices) {
    fail(ErrorKind::UnsupportedSize, "product decomposition limited to " +
                                         std::to_string(kMaxDecompositionVertices) +
                                         " total component vertices");
  }
  DecompositionTable table;
  table.components.assign(components.begin(), components.end());
  if (components.empty()) return table;

  for (auto& [key, f] : OverlayBuilder(components).run()) {
    Integer m = cover_tuples(f, components);
    if (m == 0) fail(ErrorKind::Internal, "overlay class with no covering tuple");
    table.terms.push_back(DecompositionTerm{f, std::get<2>(key), std::move(m)});
  }
  return table;
}

FFPoly gcp_disconnected(const Graph& g, const Graph& h, const Budget& budget) {
  if (h.is_connected()) fail(ErrorKind::InvalidArgument, "gcp_disconnected needs a disconnected pattern");
  PolyMemo memo;
  return gcp_recursive(g, h, budget, memo);
}

FFPoly generalised_chromatic_polynomial(const Graph& g, const Graph& h, const Budget& budget) {
  PolyMemo memo;
  return gcp_recursive(g, h, budget, memo);
}

Integer count_induced_copies_by_decomposition(const AbstractGraph& ag, const Graph& h,
                                              const Budget& budget) {
  CountMemo memo;
  return count_recursive(ag, h, budget, memo);
}

std::vector<Graph> IsolationFormula::family() const {
  std::vector<Graph> out;
  out.push_back(extended);
  const CanonicalCode plus = canonical_form(extended);
  for (const auto& term : numerator)
    if (term.code != plus) out.push_back(term.graph);
  out.push_back(complete_graph(1));
  return out;
}

Integer IsolationFormula::evaluate(const std::function<Integer(const Graph&)>& count_of) const {
  Integer sum = 0;
  for (const auto& term : numerator) sum += term.multiplicity * count_of(term.graph);
  if (pattern.size() == 1) {
    // pi^2 - pi = sum
    if (sum == 0) fail(ErrorKind::SingularPoint, "pi^2 - pi = 0 has roots 0 and 1");
    const Integer disc = 1 + 4 * sum;
    const Integer root = boost::multiprecision::sqrt(disc);
    if (root * root != disc) fail(ErrorKind::Internal, "supplied counts admit no integral solution");
    return (1 + root) / 2;
  }
  const Integer denominator = count_of(complete_graph(1)) - pattern_multiplicity;
  if (denominator == 0) {
    fail(ErrorKind::SingularPoint, "pi^(K1)(k) equals |V(H)| = " + to_decimal(pattern_multiplicity));
  }
  if (sum % denominator != 0) fail(ErrorKind::Internal, "supplied counts give a non-integral value");
  return sum / denominator;
}

IsolationFormula isolate_connected(const Graph& h, const Budget& budget) {
  if (h.size() == 0 || !h.is_connected()) {
    fail(ErrorKind::InvalidArgument, "isolate_connected needs a connected non-empty pattern");
  }
  IsolationFormula formula;
  formula.pattern = h;
  formula.extended = disjoint_union(h, complete_graph(1));
  const std::vector<Graph> comps{h, complete_graph(1)};
  const DecompositionTable table = product_decomposition(comps, budget);
  const CanonicalCode self = canonical_form(h);
  for (const auto& term : table.terms) {
    if (term.code == self) formula.pattern_multiplicity = term.multiplicity;
    else formula.numerator.push_back(term);
  }
  return formula;
}

}  // namespace chromagraph
