#include "chromagraph/colouring.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <random>
#include <string>
#include <thread>

#include "chromagraph/error.hpp"
#include "chromagraph/parallel.hpp"

namespace chromagraph {
namespace {

constexpr std::size_t kChromaticPolyMaxVertices = 16;
constexpr std::size_t kPrecountMaxVertices = 12;

void check_palette(unsigned k) {
  if (k > kMaxPalette) {
    fail(ErrorKind::UnsupportedSize,
         "palette size " + std::to_string(k) + " exceeds " + std::to_string(kMaxPalette));
  }
}

[[noreturn]] void over_budget(std::uint64_t limit) {
  fail(ErrorKind::BudgetExceeded,
       "colouring count exceeds the configured ceiling of " + std::to_string(limit));
}

// Backtracking over vertices in id order; colours tried in ascending order so
// visits happen in lexicographic order.
template <typename Visit>
void for_each_colouring(const Graph& g, unsigned k, Visit&& visit) {
  const std::size_t n = g.size();
  Colouring c(n, 0);
  if (n == 0) {
    visit(c);
    return;
  }
  std::size_t v = 0;
  while (true) {
    // advance c[v] to the next admissible colour
    Colour next = static_cast<Colour>(c[v] + 1);
    for (; next <= k; ++next) {
      bool ok = true;
      for (Graph::Mask r = g.row(v) & ((Graph::Mask{1} << v) - 1); r; r &= r - 1) {
        if (c[std::countr_zero(r)] == next) {
          ok = false;
          break;
        }
      }
      if (ok) break;
    }
    if (next > k) {
      c[v] = 0;
      if (v == 0) return;
      --v;
      continue;
    }
    c[v] = next;
    if (v + 1 == n) {
      visit(c);
    } else {
      ++v;
    }
  }
}

}  // namespace

bool is_proper(const Graph& g, std::span<const Colour> c, unsigned k) {
  if (c.size() != g.size()) return false;
  for (Colour x : c)
    if (x < 1 || x > k) return false;
  for (const auto& [u, v] : g.edges())
    if (c[u] == c[v]) return false;
  return true;
}

bool is_rainbow(std::span<const Colour> c) {
  std::array<bool, 256> seen{};
  for (Colour x : c) {
    if (seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

std::optional<std::size_t> differing_vertex(std::span<const Colour> a, std::span<const Colour> b) {
  std::optional<std::size_t> at;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) {
      if (at) return std::nullopt;
      at = i;
    }
  }
  return at;
}

std::size_t hamming_distance(std::span<const Colour> a, std::span<const Colour> b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

std::uint64_t count_colourings(const Graph& g, unsigned k, const Budget& budget) {
  check_palette(k);
  const std::size_t n = g.size();
  if (n == 0) return 1;
  // Count completions of the last vertex directly instead of visiting them.
  const std::size_t last = n - 1;
  Graph prefix(last);
  for (const auto& [u, v] : g.edges())
    if (v < last) prefix.add_edge(u, v);
  std::uint64_t total = 0;
  std::array<bool, 256> used{};
  for_each_colouring(prefix, k, [&](const Colouring& c) {
    std::size_t blocked = 0;
    for (Graph::Mask r = g.row(last); r; r &= r - 1) {
      const Colour x = c[std::countr_zero(r)];
      if (!used[x]) {
        used[x] = true;
        ++blocked;
      }
    }
    for (Graph::Mask r = g.row(last); r; r &= r - 1) used[c[std::countr_zero(r)]] = false;
    total += k - blocked;
    if (total > budget.max_colourings) over_budget(budget.max_colourings);
  });
  return total;
}

std::vector<Colouring> enumerate_colourings(const Graph& g, unsigned k, const Budget& budget) {
  check_palette(k);
  std::vector<Colouring> out;
  if (g.size() <= kPrecountMaxVertices) {
    const Integer expected = chromatic_polynomial(g).eval(k);
    if (expected > budget.max_colourings) over_budget(budget.max_colourings);
    out.reserve(static_cast<std::size_t>(expected));
  }
  for_each_colouring(g, k, [&](const Colouring& c) {
    if (out.size() >= budget.max_colourings) over_budget(budget.max_colourings);
    out.push_back(c);
  });
  return out;
}

FFPoly chromatic_polynomial(const Graph& g) {
  const std::size_t n = g.size();
  if (n > kChromaticPolyMaxVertices) {
    fail(ErrorKind::UnsupportedSize, "chromatic polynomial limited to " +
                                         std::to_string(kChromaticPolyMaxVertices) + " vertices");
  }
  // parts[S][t] = number of partitions of S into t independent sets, built by
  // always placing the lowest vertex of S.
  const std::size_t full = std::size_t{1} << n;
  std::vector<std::array<std::uint64_t, kChromaticPolyMaxVertices + 1>> parts(full);
  parts[0][0] = 1;
  for (std::size_t s = 1; s < full; ++s) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(s));
    const std::size_t free = s & ~(std::size_t{1} << low) & ~static_cast<std::size_t>(g.row(low));
    const std::size_t rest_all = s & ~(std::size_t{1} << low);
    // submasks J of `free` that are independent; I = {low} + J
    for (std::size_t j = free;; j = (j - 1) & free) {
      bool independent = true;
      for (std::size_t r = j; r && independent; r &= r - 1) {
        if (g.row(static_cast<std::size_t>(std::countr_zero(r))) & j) independent = false;
      }
      if (independent) {
        const std::size_t rest = rest_all & ~j;
        const std::size_t max_t = static_cast<std::size_t>(std::popcount(rest));
        for (std::size_t t = 0; t <= max_t; ++t) parts[s][t + 1] += parts[rest][t];
      }
      if (j == 0) break;
    }
  }
  FFPoly p;
  for (std::size_t t = 0; t <= n; ++t) {
    if (parts[full - 1][t]) p.set_coeff(t, Rational(parts[full - 1][t]));
  }
  return p;
}

Integer count_rainbow(const Graph& g, unsigned k) { return falling_factorial(k, g.size()); }

std::optional<VertexId> ColouringGraph::find(std::span<const Colour> c) const {
  if (c.size() != base_.size()) return std::nullopt;
  auto it = index_.find(std::string_view(reinterpret_cast<const char*>(c.data()), c.size()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ColouringGraph build_colouring_graph(const Graph& g, unsigned k, const Budget& budget) {
  check_palette(k);
  const std::size_t n = g.size();
  ColouringGraph cg;
  cg.base_ = g;
  cg.k_ = k;

  std::size_t count = 0;
  if (n <= kPrecountMaxVertices) {
    const Integer expected = chromatic_polynomial(g).eval(k);
    if (expected > budget.max_colourings) over_budget(budget.max_colourings);
    cg.colours_.reserve(static_cast<std::size_t>(expected) * n);
  }
  for_each_colouring(g, k, [&](const Colouring& c) {
    if (++count > budget.max_colourings) over_budget(budget.max_colourings);
    cg.colours_.insert(cg.colours_.end(), c.begin(), c.end());
  });
  if (n == 0) count = 1;
  if (count > std::numeric_limits<VertexId>::max()) over_budget(std::numeric_limits<VertexId>::max());

  cg.index_.reserve(count);
  for (std::size_t id = 0; id < count; ++id) {
    cg.index_.emplace(std::string_view(reinterpret_cast<const char*>(cg.colours_.data() + id * n), n),
                      static_cast<VertexId>(id));
  }

  const unsigned workers = resolve_threads(budget.threads);
  const std::size_t chunk = 4096;
  const std::size_t tasks = (count + chunk - 1) / chunk;

  // Each neighbour of c is a proper recolouring of a single vertex, so the
  // degree pass needs no lookups.
  std::vector<std::uint64_t> offsets(count + 1, 0);
  detail::parallel_for(tasks, workers, [&](std::size_t task, unsigned) {
    std::array<bool, 256> used{};
    const std::size_t end = std::min(count, (task + 1) * chunk);
    for (std::size_t id = task * chunk; id < end; ++id) {
      auto c = cg.colouring(static_cast<VertexId>(id));
      std::uint64_t deg = 0;
      for (std::size_t v = 0; v < n; ++v) {
        std::size_t blocked = 1;
        used[c[v]] = true;
        for (Graph::Mask r = g.row(v); r; r &= r - 1) {
          const Colour x = c[std::countr_zero(r)];
          if (!used[x]) {
            used[x] = true;
            ++blocked;
          }
        }
        used[c[v]] = false;
        for (Graph::Mask r = g.row(v); r; r &= r - 1) used[c[std::countr_zero(r)]] = false;
        deg += k - blocked;
      }
      offsets[id + 1] = deg;
    }
  });
  for (std::size_t i = 0; i < count; ++i) offsets[i + 1] += offsets[i];

  std::vector<VertexId> targets(offsets[count]);
  detail::parallel_for(tasks, workers, [&](std::size_t task, unsigned) {
    Colouring scratch(n);
    const std::size_t end = std::min(count, (task + 1) * chunk);
    for (std::size_t id = task * chunk; id < end; ++id) {
      auto c = cg.colouring(static_cast<VertexId>(id));
      std::copy(c.begin(), c.end(), scratch.begin());
      auto out = targets.begin() + static_cast<long>(offsets[id]);
      const auto start = out;
      for (std::size_t v = 0; v < n; ++v) {
        const Colour original = scratch[v];
        for (unsigned x = 1; x <= k; ++x) {
          if (x == original) continue;
          scratch[v] = static_cast<Colour>(x);
          auto hit = cg.find(scratch);
          if (hit) *out++ = *hit;
        }
        scratch[v] = original;
      }
      if (static_cast<std::uint64_t>(out - targets.begin()) != offsets[id + 1]) {
        fail(ErrorKind::Internal, "neighbour count mismatch while building colouring graph");
      }
      std::sort(start, out);
    }
  });
  cg.topology_ = AbstractGraph::from_csr(std::move(offsets), std::move(targets));
  return cg;
}

std::vector<VertexId> seeded_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<VertexId> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<VertexId>(i);
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

AbstractGraph strip_labels(const ColouringGraph& cg, std::uint64_t seed) {
  return cg.topology().permuted(seeded_permutation(cg.size(), seed));
}

nlohmann::json labels_json(const ColouringGraph& cg) {
  nlohmann::json rows = nlohmann::json::array();
  for (VertexId id = 0; id < cg.size(); ++id) {
    auto c = cg.colouring(id);
    rows.push_back(std::vector<int>(c.begin(), c.end()));
  }
  return {{"k", cg.k()}, {"n", cg.base().size()}, {"colourings", std::move(rows)}};
}

unsigned resolve_threads(unsigned hint) {
  if (hint) return hint;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace chromagraph
