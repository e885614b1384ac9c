#include "chromagraph/partition.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <memory>
#include <string>
#include <unordered_map>
#include <unordered_set>

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

// Bit index of column pair (j, i), j < i, in the packed prefix key.
constexpr std::size_t pair_index(std::size_t j, std::size_t i) { return i * (i - 1) / 2 + j; }

// allowed[p] = canonical codes of the p-vertex induced subgraphs of H. The
// first p columns of an accepted tuple always induce one of them.
std::vector<std::unordered_set<CanonicalCode, CanonicalCodeHash>> induced_subgraph_codes(const Graph& h) {
  const std::size_t size = h.size();
  std::vector<std::unordered_set<CanonicalCode, CanonicalCodeHash>> allowed(size + 1);
  for (Graph::Mask s = 1; s < (Graph::Mask{1} << size); ++s) {
    allowed[static_cast<std::size_t>(std::popcount(s))].insert(canonical_form(h.induced_mask(s)));
  }
  return allowed;
}

struct Prefix {
  std::array<std::uint8_t, kMaxPartitionElements> labels{};
  Key key = 0;
  std::size_t next = 0;    // next element to assign
  std::uint8_t blocks = 0; // labels in use
};

class Enumerator {
 public:
  Enumerator(const Graph& g, const Graph& h,
             const std::vector<std::unordered_set<CanonicalCode, CanonicalCodeHash>>& allowed,
             std::uint64_t limit, std::atomic<std::uint64_t>& visited)
      : g_(g), n_(g.size()), h_(h.size()), total_(g.size() * h.size()), allowed_(allowed),
        limit_(limit), visited_(visited), accepted_(total_ + 1, 0), cache_(h.size() + 1) {}

  // Explores below `start`; prefixes reaching depth `stop` are handed to
  // `emit` instead of being expanded further.
  template <typename Emit>
  void run(Prefix p, std::size_t stop, Emit&& emit) {
    labels_ = p.labels;
    explore(p.next, p.blocks, p.key, stop, emit);
  }

  void flush() {
    visited_.fetch_add(local_, std::memory_order_relaxed);
    local_ = 0;
  }

  const std::vector<std::uint64_t>& accepted() const { return accepted_; }

 private:
  template <typename Emit>
  void explore(std::size_t e, std::uint8_t blocks, Key key, std::size_t stop, Emit& emit) {
    if (e == stop && e < total_) {
      Prefix p;
      p.labels = labels_;
      p.key = key;
      p.next = e;
      p.blocks = blocks;
      emit(p);
      return;
    }
    if (e == total_) {
      ++accepted_[blocks];
      return;
    }
    if (++local_ >= 4096) {
      if (visited_.fetch_add(local_, std::memory_order_relaxed) + local_ > limit_) {
        fail(ErrorKind::BudgetExceeded,
             "partition enumeration exceeds the ceiling of " + std::to_string(limit_));
      }
      local_ = 0;
    }
    const std::size_t layer = e / n_;
    const std::size_t v = e % n_;
    const std::size_t base = layer * n_;
    const Graph::Mask earlier = g_.row(v) & ((Graph::Mask{1} << v) - 1);
    for (std::uint8_t label = 0; label <= blocks && label < total_; ++label) {
      bool independent = true;
      for (Graph::Mask r = earlier; r; r &= r - 1) {
        if (labels_[base + static_cast<std::size_t>(std::countr_zero(r))] == label) {
          independent = false;
          break;
        }
      }
      if (!independent) continue;
      labels_[e] = label;
      const std::uint8_t next_blocks = label == blocks ? blocks + 1 : blocks;
      if (v + 1 < n_) {
        explore(e + 1, next_blocks, key, stop, emit);
        continue;
      }
      Key next_key = key;
      if (close_layer(layer, next_key)) explore(e + 1, next_blocks, next_key, stop, emit);
    }
  }

  // Column `layer` is complete: it must differ from every earlier column, and
  // the labelled graph on columns 0..layer must be an induced subgraph of H.
  bool close_layer(std::size_t layer, Key& key) {
    const std::size_t base = layer * n_;
    for (std::size_t j = 0; j < layer; ++j) {
      std::size_t diff = 0;
      for (std::size_t v = 0; v < n_; ++v) diff += labels_[j * n_ + v] != labels_[base + v];
      if (diff == 0) return false;
      if (diff == 1) key |= Key{1} << pair_index(j, layer);
    }
    const std::size_t cols = layer + 1;
    auto& cache = cache_[cols];
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Graph prefix(cols);
    for (std::size_t i = 1; i < cols; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if ((key >> pair_index(j, i)) & 1u) prefix.add_edge(j, i);
    const bool ok = allowed_[cols].contains(canonical_form(prefix));
    cache.emplace(key, ok);
    return ok;
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t h_;
  std::size_t total_;
  const std::vector<std::unordered_set<CanonicalCode, CanonicalCodeHash>>& allowed_;
  std::uint64_t limit_;
  std::atomic<std::uint64_t>& visited_;
  std::uint64_t local_ = 0;
  std::array<std::uint8_t, kMaxPartitionElements> labels_{};
  std::vector<std::uint64_t> accepted_;
  std::vector<std::unordered_map<Key, bool, KeyHash>> cache_;
};

}  // namespace

PartitionTally tally_valid_partitions(const Graph& g, const Graph& h, const Budget& budget) {
  const std::size_t total = g.size() * h.size();
  if (total > kMaxPartitionElements) {
    fail(ErrorKind::UnsupportedSize, "|V(G)|*|V(H)| = " + std::to_string(total) +
                                         " exceeds the partition limit of " +
                                         std::to_string(kMaxPartitionElements));
  }
  PartitionTally tally;
  tally.pattern_size = h.size();
  tally.accepted.assign(total + 1, 0);
  if (h.size() == 0) {
    tally.accepted[0] = 1;
    return tally;
  }
  if (g.size() == 0) {
    // The empty graph has one colouring, so only a single-vertex pattern fits.
    if (h.size() == 1) tally.accepted[0] = 1;
    return tally;
  }

  const auto allowed = induced_subgraph_codes(h);
  std::atomic<std::uint64_t> visited{0};
  const unsigned workers = resolve_threads(budget.threads);

  // Split the search tree at a fixed depth so that subtrees can run on
  // separate workers; accumulators merge by addition.
  std::vector<Prefix> tasks;
  const std::size_t split = workers > 1 ? std::min<std::size_t>(total, std::max<std::size_t>(g.size(), 6)) : 0;
  std::vector<std::unique_ptr<Enumerator>> engines(std::max(workers, 1u));
  if (split == 0) {
    tasks.push_back(Prefix{});
  } else {
    Enumerator seed(g, h, allowed, budget.max_partitions, visited);
    seed.run(Prefix{}, split, [&](const Prefix& p) { tasks.push_back(p); });
    seed.flush();
    for (std::size_t t = 0; t < tally.accepted.size(); ++t) tally.accepted[t] += seed.accepted()[t];
  }
  detail::parallel_for(tasks.size(), workers, [&](std::size_t task, unsigned worker) {
    auto& engine = engines[worker];
    if (!engine) engine = std::make_unique<Enumerator>(g, h, allowed, budget.max_partitions, visited);
    engine->run(tasks[task], total + 1, [](const Prefix&) {});
    engine->flush();
  });
  for (const auto& engine : engines) {
    if (!engine) continue;
    for (std::size_t t = 0; t < tally.accepted.size(); ++t) tally.accepted[t] += engine->accepted()[t];
  }
  tally.nodes_visited = visited.load();
  return tally;
}

FFPoly gcp_partition(const Graph& g, const Graph& h, const Budget& budget) {
  const PartitionTally tally = tally_valid_partitions(g, h, budget);
  const Integer orderings = factorial(h.size());
  FFPoly p;
  for (std::size_t t = 0; t < tally.accepted.size(); ++t) {
    if (tally.accepted[t]) p.set_coeff(t, Rational(Integer(tally.accepted[t]), orderings));
  }
  // Degree <= |V(G)||V(H)|, so integrality on that many consecutive points
  // makes the polynomial integer-valued everywhere.
  for (std::size_t k = 0; k <= tally.accepted.size(); ++k) (void)p.eval(static_cast<std::int64_t>(k));
  return p;
}

}  // namespace chromagraph
