#include "chromagraph/induced.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "chromagraph/decomposition.hpp"
#include "chromagraph/error.hpp"
#include "chromagraph/parallel.hpp"

namespace chromagraph {
namespace {

using Key = unsigned __int128;

struct KeyHash {
  std::size_t operator()(Key k) const noexcept {
    const auto lo = static_cast<std::uint64_t>(k);
    const auto hi = static_cast<std::uint64_t>(k >> 64);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ull));
  }
};

constexpr std::size_t kMaxPatternVertices = 16;

// Labelled adjacency of a small vertex set packed pair by pair.
Key pair_bits(const AbstractGraph& ag, std::span<const VertexId> vs, std::size_t& edges) {
  Key key = 0;
  std::size_t bit = 0;
  edges = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j, ++bit) {
      if (ag.adjacent(vs[i], vs[j])) {
        key |= Key{1} << bit;
        ++edges;
      }
    }
  }
  return key;
}

Graph from_pair_bits(std::size_t n, Key key) {
  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++bit)
      if ((key >> bit) & 1u) g.add_edge(i, j);
  return g;
}

class EsuWorker {
 public:
  EsuWorker(const AbstractGraph& ag, std::size_t size, std::uint64_t limit,
            std::atomic<std::uint64_t>& visited)
      : ag_(ag), size_(size), limit_(limit), visited_(visited), blocked_(ag.size(), 0) {}

  template <typename Visit>
  void run_root(VertexId root, Visit&& visit) {
    root_ = root;
    sub_.clear();
    std::vector<VertexId> ext;
    for (VertexId u : ag_.neighbours(root))
      if (u > root) ext.push_back(u);
    push(root);
    extend(ext, visit);
    pop(root);
  }

  void flush() {
    visited_.fetch_add(local_, std::memory_order_relaxed);
    local_ = 0;
  }

 private:
  void push(VertexId w) {
    sub_.push_back(w);
    ++blocked_[w];
    for (VertexId u : ag_.neighbours(w)) ++blocked_[u];
  }
  void pop(VertexId w) {
    sub_.pop_back();
    --blocked_[w];
    for (VertexId u : ag_.neighbours(w)) --blocked_[u];
  }

  template <typename Visit>
  void extend(std::vector<VertexId> ext, Visit& visit) {
    if (++local_ >= 4096) {
      if (visited_.fetch_add(local_, std::memory_order_relaxed) + local_ > limit_) {
        fail(ErrorKind::BudgetExceeded,
             "connected-set enumeration exceeds the ceiling of " + std::to_string(limit_));
      }
      local_ = 0;
    }
    if (sub_.size() == size_) {
      visit(std::span<const VertexId>(sub_));
      return;
    }
    while (!ext.empty()) {
      const VertexId w = ext.back();
      ext.pop_back();
      std::vector<VertexId> next = ext;
      for (VertexId u : ag_.neighbours(w)) {
        if (u > root_ && blocked_[u] == 0) next.push_back(u);
      }
      push(w);
      extend(std::move(next), visit);
      pop(w);
    }
  }

  const AbstractGraph& ag_;
  std::size_t size_;
  std::uint64_t limit_;
  std::atomic<std::uint64_t>& visited_;
  std::vector<std::uint32_t> blocked_;
  std::vector<VertexId> sub_;
  VertexId root_ = 0;
  std::uint64_t local_ = 0;
};

// Answers "is this labelled pattern isomorphic to h" with a per-worker cache.
class PatternMatcher {
 public:
  explicit PatternMatcher(const Graph& h)
      : n_(h.size()), edges_(h.edge_count()), code_(canonical_form(h)) {}

  bool matches(const AbstractGraph& ag, std::span<const VertexId> vs) {
    std::size_t edges = 0;
    const Key key = pair_bits(ag, vs, edges);
    if (edges != edges_) return false;
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const bool ok = canonical_form(from_pair_bits(n_, key)) == code_;
    cache_.emplace(key, ok);
    return ok;
  }

 private:
  std::size_t n_;
  std::size_t edges_;
  CanonicalCode code_;
  std::unordered_map<Key, bool, KeyHash> cache_;
};

void check_pattern(const Graph& h) {
  if (h.size() > kMaxPatternVertices) {
    fail(ErrorKind::UnsupportedSize, "pattern graphs are limited to " +
                                         std::to_string(kMaxPatternVertices) + " vertices");
  }
}

}  // namespace

void for_each_connected_set(
    const AbstractGraph& ag, std::size_t size, const Budget& budget,
    const std::function<void(std::span<const VertexId>, unsigned worker)>& visit) {
  if (size == 0) return;
  const unsigned workers = resolve_threads(budget.threads);
  std::atomic<std::uint64_t> visited{0};
  std::vector<std::unique_ptr<EsuWorker>> scratch(workers);
  const std::size_t chunk = 256;
  const std::size_t tasks = (ag.size() + chunk - 1) / chunk;
  detail::parallel_for(tasks, workers, [&](std::size_t task, unsigned worker) {
    auto& esu = scratch[worker];
    if (!esu) esu = std::make_unique<EsuWorker>(ag, size, budget.max_subsets, visited);
    const std::size_t end = std::min(ag.size(), (task + 1) * chunk);
    for (std::size_t v = task * chunk; v < end; ++v) {
      esu->run_root(static_cast<VertexId>(v),
                    [&](std::span<const VertexId> set) { visit(set, worker); });
    }
    esu->flush();
  });
}

Graph induced_pattern(const AbstractGraph& ag, std::span<const VertexId> vertices) {
  Graph g(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (ag.adjacent(vertices[i], vertices[j])) g.add_edge(i, j);
  return g;
}

Integer count_induced_copies(const AbstractGraph& ag, const Graph& h, const Budget& budget) {
  check_pattern(h);
  if (h.size() == 0) return 1;
  if (!h.is_connected()) return count_induced_copies_by_decomposition(ag, h, budget);
  if (h.size() == 1) return ag.size();
  if (h.size() == 2) return ag.edge_count();

  const unsigned workers = resolve_threads(budget.threads);
  std::vector<std::uint64_t> counts(workers, 0);
  std::vector<std::unique_ptr<PatternMatcher>> matchers(workers);
  for_each_connected_set(ag, h.size(), budget, [&](std::span<const VertexId> set, unsigned worker) {
    auto& m = matchers[worker];
    if (!m) m = std::make_unique<PatternMatcher>(h);
    if (m->matches(ag, set)) ++counts[worker];
  });
  Integer total = 0;
  for (auto c : counts) total += c;
  return total;
}

Integer count_induced_copies(const ColouringGraph& cg, const Graph& h, const Budget& budget) {
  return count_induced_copies(cg.topology(), h, budget);
}

std::vector<std::vector<VertexId>> collect_induced_copies(const AbstractGraph& ag, const Graph& h,
                                                          const Budget& budget) {
  check_pattern(h);
  if (!h.is_connected() || h.size() == 0) {
    fail(ErrorKind::InvalidArgument, "collect_induced_copies needs a connected non-empty pattern");
  }
  const unsigned workers = resolve_threads(budget.threads);
  std::vector<std::vector<std::vector<VertexId>>> found(workers);
  std::vector<std::unique_ptr<PatternMatcher>> matchers(workers);
  for_each_connected_set(ag, h.size(), budget, [&](std::span<const VertexId> set, unsigned worker) {
    auto& m = matchers[worker];
    if (!m) m = std::make_unique<PatternMatcher>(h);
    if (m->matches(ag, set)) {
      std::vector<VertexId> copy(set.begin(), set.end());
      std::sort(copy.begin(), copy.end());
      found[worker].push_back(std::move(copy));
    }
  });
  std::vector<std::vector<VertexId>> out;
  for (auto& part : found) {
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace chromagraph
