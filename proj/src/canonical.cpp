#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chromagraph/error.hpp"
#include "chromagraph/graph.hpp"

namespace chromagraph {
namespace {

using Cell = std::vector<std::uint8_t>;
using Partition = std::vector<Cell>;

// Splits cells by the number of neighbours each vertex has in every cell,
// until the ordered partition is equitable. Sub-cells are ordered by their
// signatures, so the result depends only on the isomorphism class.
Partition refine(const Graph& g, Partition cells) {
  const std::size_t n = g.size();
  std::array<std::uint8_t, kMaxCanonicalVertices> cell_of{};
  for (;;) {
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (auto v : cells[c]) cell_of[v] = static_cast<std::uint8_t>(c);

    Partition next;
    next.reserve(n);
    for (const Cell& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<std::uint8_t>, std::uint8_t>> keyed;
      keyed.reserve(cell.size());
      for (auto v : cell) {
        std::vector<std::uint8_t> sig(cells.size(), 0);
        for (Graph::Mask r = g.row(v); r; r &= r - 1) ++sig[cell_of[std::countr_zero(r)]];
        keyed.emplace_back(std::move(sig), v);
      }
      std::stable_sort(keyed.begin(), keyed.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      Cell current{keyed.front().second};
      for (std::size_t i = 1; i < keyed.size(); ++i) {
        if (keyed[i].first != keyed[i - 1].first) {
          next.push_back(std::move(current));
          current.clear();
        }
        current.push_back(keyed[i].second);
      }
      next.push_back(std::move(current));
    }
    if (next.size() == cells.size()) return next;
    cells = std::move(next);
  }
}

// True when adjacency is constant inside each cell and between each pair of
// cells; every ordering consistent with the partition then yields the same
// matrix.
bool homogeneous(const Graph& g, const Partition& cells) {
  for (std::size_t a = 0; a < cells.size(); ++a) {
    for (std::size_t b = a; b < cells.size(); ++b) {
      std::optional<bool> seen;
      for (auto u : cells[a]) {
        for (auto v : cells[b]) {
          if (u == v) continue;
          const bool e = g.adjacent(u, v);
          if (!seen) seen = e;
          else if (*seen != e) return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::uint8_t> encode(const Graph& g, const Partition& cells) {
  std::vector<std::uint8_t> order;
  order.reserve(g.size());
  for (const Cell& c : cells) order.insert(order.end(), c.begin(), c.end());

  const std::size_t n = g.size();
  std::vector<std::uint8_t> bytes(1 + (n * (n - (n ? 1 : 0)) / 2 + 7) / 8, 0);
  bytes[0] = static_cast<std::uint8_t>(n);
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++bit) {
      if (g.adjacent(order[i], order[j])) bytes[1 + bit / 8] |= std::uint8_t(0x80u >> (bit % 8));
    }
  }
  return bytes;
}

void search(const Graph& g, Partition cells, std::optional<std::vector<std::uint8_t>>& best) {
  cells = refine(g, std::move(cells));
  if (cells.size() == g.size() || homogeneous(g, cells)) {
    auto code = encode(g, cells);
    if (!best || code < *best) best = std::move(code);
    return;
  }
  std::size_t target = cells.size();
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size()))
      target = c;
  }
  for (std::size_t i = 0; i < cells[target].size(); ++i) {
    Partition branch;
    branch.reserve(cells.size() + 1);
    branch.insert(branch.end(), cells.begin(), cells.begin() + static_cast<long>(target));
    const auto v = cells[target][i];
    branch.push_back(Cell{v});
    Cell rest;
    for (auto u : cells[target])
      if (u != v) rest.push_back(u);
    branch.push_back(std::move(rest));
    branch.insert(branch.end(), cells.begin() + static_cast<long>(target) + 1, cells.end());
    search(g, std::move(branch), best);
  }
}

}  // namespace

CanonicalCode canonical_form(const Graph& g) {
  if (g.size() > kMaxCanonicalVertices) {
    fail(ErrorKind::UnsupportedSize, "canonical form supports at most " +
                                         std::to_string(kMaxCanonicalVertices) +
                                         " vertices, got " + std::to_string(g.size()));
  }
  if (g.empty()) return CanonicalCode{{0}};
  Cell all(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) all[v] = static_cast<std::uint8_t>(v);
  std::optional<std::vector<std::uint8_t>> best;
  search(g, Partition{std::move(all)}, best);
  return CanonicalCode{std::move(*best)};
}

Graph from_canonical(const CanonicalCode& code) {
  if (code.bytes.empty()) fail(ErrorKind::InvalidArgument, "empty canonical code");
  const std::size_t n = code.bytes[0];
  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++bit) {
      if (code.bytes.at(1 + bit / 8) & (0x80u >> (bit % 8))) g.add_edge(i, j);
    }
  }
  return g;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::string CanonicalCode::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

std::size_t CanonicalCodeHash::operator()(const CanonicalCode& code) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto b : code.bytes) h = (h ^ b) * 1099511628211ull;
  return h;
}

}  // namespace chromagraph
