#include "chromagraph/abstract_graph.hpp"

#include <algorithm>
#include <charconv>

#include "chromagraph/error.hpp"

namespace chromagraph {

AbstractGraph AbstractGraph::from_edges(std::size_t n,
                                        std::span<const std::pair<VertexId, VertexId>> edges) {
  std::vector<std::uint64_t> offsets(n + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) fail(ErrorKind::InvalidArgument, "edge endpoint out of range");
    if (u == v) fail(ErrorKind::InvalidArgument, "self-loop at vertex " + std::to_string(u));
    ++offsets[u + 1];
    ++offsets[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  std::vector<VertexId> targets(offsets[n]);
  std::vector<std::uint64_t> fill(offsets.begin(), offsets.end() - 1);
  for (const auto& [u, v] : edges) {
    targets[fill[u]++] = v;
    targets[fill[v]++] = u;
  }
  // Sort and dedupe each list, then compact.
  std::vector<std::uint64_t> compact(n + 1, 0);
  std::uint64_t write = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto first = targets.begin() + static_cast<long>(offsets[v]);
    auto last = targets.begin() + static_cast<long>(offsets[v + 1]);
    std::sort(first, last);
    auto unique_end = std::unique(first, last);
    for (auto it = first; it != unique_end; ++it) targets[write++] = *it;
    compact[v + 1] = write;
  }
  targets.resize(write);
  return from_csr(std::move(compact), std::move(targets));
}

AbstractGraph AbstractGraph::from_csr(std::vector<std::uint64_t> offsets,
                                      std::vector<VertexId> targets) {
  if (offsets.empty() || offsets.back() != targets.size()) {
    fail(ErrorKind::Internal, "inconsistent CSR arrays");
  }
  AbstractGraph g;
  g.offsets_ = std::move(offsets);
  g.targets_ = std::move(targets);
  return g;
}

bool AbstractGraph::adjacent(VertexId u, VertexId v) const {
  auto nb = neighbours(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

AbstractGraph AbstractGraph::permuted(std::span<const VertexId> perm) const {
  const std::size_t n = size();
  if (perm.size() != n) fail(ErrorKind::InvalidArgument, "permutation has wrong length");
  std::vector<std::uint64_t> offsets(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets[perm[v] + 1] = degree(static_cast<VertexId>(v));
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  std::vector<VertexId> targets(targets_.size());
  for (std::size_t v = 0; v < n; ++v) {
    auto out = targets.begin() + static_cast<long>(offsets[perm[v]]);
    auto start = out;
    for (VertexId w : neighbours(static_cast<VertexId>(v))) *out++ = perm[w];
    std::sort(start, out);
  }
  return from_csr(std::move(offsets), std::move(targets));
}

std::string to_edge_list(const AbstractGraph& g) {
  std::string out = std::to_string(g.size()) + " " + std::to_string(g.edge_count()) + "\n";
  out.reserve(out.size() + g.edge_count() * 14);
  char buf[32];
  for (VertexId u = 0; u < g.size(); ++u) {
    for (VertexId v : g.neighbours(u)) {
      if (v <= u) continue;
      auto p = std::to_chars(buf, buf + sizeof buf, u).ptr;
      *p++ = ' ';
      p = std::to_chars(p, buf + sizeof buf, v).ptr;
      *p++ = '\n';
      out.append(buf, p);
    }
  }
  return out;
}

AbstractGraph parse_abstract_graph(std::string_view text) {
  std::size_t pos = 0;
  std::size_t line_no = 0;
  auto next_line = [&](std::string_view& line) {
    while (pos < text.size()) {
      std::size_t nl = text.find('\n', pos);
      if (nl == std::string_view::npos) nl = text.size();
      line = text.substr(pos, nl - pos);
      pos = nl + 1;
      ++line_no;
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
      if (!line.empty()) return true;
    }
    return false;
  };
  auto read_two = [&](std::string_view line, std::uint64_t& a, std::uint64_t& b) {
    const char* p = line.data();
    const char* end = p + line.size();
    while (p != end && *p == ' ') ++p;
    auto r = std::from_chars(p, end, a);
    if (r.ec != std::errc{}) return false;
    p = r.ptr;
    if (p == end || *p != ' ') return false;
    while (p != end && *p == ' ') ++p;
    r = std::from_chars(p, end, b);
    return r.ec == std::errc{} && r.ptr == end;
  };

  std::string_view line;
  std::uint64_t n = 0, m = 0;
  if (!next_line(line) || !read_two(line, n, m)) {
    fail(ErrorKind::Parse, "line " + std::to_string(line_no) + ": malformed header");
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    std::uint64_t u = 0, v = 0;
    if (!next_line(line)) fail(ErrorKind::Parse, "header declares " + std::to_string(m) + " edges, found " + std::to_string(i));
    if (!read_two(line, u, v)) fail(ErrorKind::Parse, "line " + std::to_string(line_no) + ": malformed edge");
    if (u >= n || v >= n) fail(ErrorKind::Parse, "line " + std::to_string(line_no) + ": vertex id out of range");
    if (u == v) fail(ErrorKind::Parse, "line " + std::to_string(line_no) + ": self-loop");
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  if (next_line(line)) fail(ErrorKind::Parse, "line " + std::to_string(line_no) + ": trailing data after declared edges");
  return AbstractGraph::from_edges(n, edges);
}

}  // namespace chromagraph
