#include "chromagraph/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "chromagraph/error.hpp"

namespace chromagraph {
namespace {

constexpr int kGraph6Offset = 63;
constexpr std::size_t kGraph6MaxVertices = 62;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Parses exactly two non-negative integers separated by whitespace.
bool parse_pair(std::string_view line, std::size_t& a, std::size_t& b) {
  const char* p = line.data();
  const char* end = line.data() + line.size();
  auto skip = [&] {
    while (p != end && (*p == ' ' || *p == '\t')) ++p;
  };
  skip();
  auto r1 = std::from_chars(p, end, a);
  if (r1.ec != std::errc{} || r1.ptr == p) return false;
  p = r1.ptr;
  if (p == end || (*p != ' ' && *p != '\t')) return false;
  skip();
  auto r2 = std::from_chars(p, end, b);
  if (r2.ec != std::errc{} || r2.ptr == p) return false;
  p = r2.ptr;
  skip();
  return p == end;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  fail(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + what);
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start <= text.size();) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(trim(text.substr(start, nl - start)));
    start = nl + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) parse_fail(1, "missing header \"n m\"");

  std::size_t n = 0, m = 0;
  if (!parse_pair(lines[0], n, m)) parse_fail(1, "malformed header \"" + std::string(lines[0]) + "\"");
  if (n > Graph::kMaxVertices) parse_fail(1, "vertex count " + std::to_string(n) + " exceeds limit");
  if (lines.size() - 1 != m) {
    parse_fail(lines.size(), "header declares " + std::to_string(m) + " edges but " +
                                 std::to_string(lines.size() - 1) + " edge lines follow");
  }
  Graph g(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::size_t u = 0, v = 0;
    if (!parse_pair(lines[i], u, v)) parse_fail(i + 1, "malformed edge \"" + std::string(lines[i]) + "\"");
    if (u >= n || v >= n) parse_fail(i + 1, "vertex id out of range for n=" + std::to_string(n));
    if (u == v) parse_fail(i + 1, "self-loop at vertex " + std::to_string(u));
    g.add_edge(u, v);
  }
  return g;
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  while (!text.empty() && text.back() == '\n') text = trim(text.substr(0, text.size() - 1));
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) parse_fail(1, "empty graph6 string");
  for (char ch : text) {
    if (ch < kGraph6Offset || ch > 126) parse_fail(1, "invalid graph6 character");
  }
  if (text[0] == 126) parse_fail(1, "graph6 supports at most 62 vertices here");
  const std::size_t n = static_cast<std::size_t>(text[0] - kGraph6Offset);
  const std::size_t bits = n * (n ? n - 1 : 0) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (text.size() != expected) {
    parse_fail(1, "graph6 length " + std::to_string(text.size()) + ", expected " + std::to_string(expected));
  }
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int chunk = text[1 + k / 6] - kGraph6Offset;
      if (chunk & (1 << (5 - k % 6))) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace

GraphFormat parse_format(std::string_view name) {
  if (name == "edge-list" || name == "el") return GraphFormat::EdgeList;
  if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
  fail(ErrorKind::InvalidArgument, "unknown graph format \"" + std::string(name) + "\"");
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::EdgeList ? parse_edge_list(text) : parse_graph6(text);
}

std::string to_edge_list(const Graph& g) {
  const auto edges = g.edges();
  std::string out = std::to_string(g.size()) + " " + std::to_string(edges.size()) + "\n";
  for (const auto& [u, v] : edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.size();
  if (n > kGraph6MaxVertices) fail(ErrorKind::UnsupportedSize, "graph6 output limited to 62 vertices");
  std::string out(1, static_cast<char>(n + kGraph6Offset));
  int chunk = 0, filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kGraph6Offset));
        chunk = filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((chunk << (6 - filled)) + kGraph6Offset));
  return out;
}

std::string serialize(const Graph& g, GraphFormat format) {
  return format == GraphFormat::EdgeList ? to_edge_list(g) : to_graph6(g) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::InvalidArgument, "cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

}  // namespace chromagraph
