#include "doctest.h"

#include <set>

#include "chromagraph/catalog.hpp"
#include "chromagraph/colouring.hpp"
#include "chromagraph/error.hpp"
#include "chromagraph/reconstruct.hpp"
#include "oracles.hpp"

using namespace chromagraph;

namespace {

std::vector<std::vector<int>> as_ints(const std::vector<Colouring>& cs) {
  std::vector<std::vector<int>> out;
  for (const auto& c : cs) out.emplace_back(c.begin(), c.end());
  return out;
}

std::set<std::pair<std::size_t, std::size_t>> edge_set(const AbstractGraph& ag) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (VertexId u = 0; u < ag.size(); ++u)
    for (VertexId v : ag.neighbours(u))
      if (u < v) out.emplace(u, v);
  return out;
}

std::set<std::pair<std::size_t, std::size_t>> edge_set(const oracle::Adjacency& g) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v : g.adj[u])
      if (u < v) out.emplace(u, v);
  return out;
}

std::vector<Graph> small_graphs() {
  std::vector<Graph> out;
  for (std::size_t n = 0; n <= 4; ++n)
    for (Graph& g : enumerate_graphs(n)) out.push_back(std::move(g));
  return out;
}

}  // namespace

TEST_CASE("enumerate_colourings examples") {
  CHECK(as_ints(enumerate_colourings(complete_graph(2), 2)) == std::vector<std::vector<int>>{{1, 2}, {2, 1}});
  CHECK(enumerate_colourings(complete_graph(3), 2).empty());
  CHECK(enumerate_colourings(path_graph(3), 3).size() == 12);
}

TEST_CASE("enumerate_colourings matches the naive enumerator in order") {
  for (const Graph& g : small_graphs()) {
    for (unsigned k = 0; k <= 4; ++k) {
      CHECK(as_ints(enumerate_colourings(g, k)) == oracle::colourings(g, static_cast<int>(k)));
    }
  }
}

TEST_CASE("budget ceiling on colourings") {
  Budget b;
  b.max_colourings = 10;
  try {
    enumerate_colourings(path_graph(3), 3, b);
    FAIL("expected a budget error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
  try {
    build_colouring_graph(path_graph(3), 3, b);
    FAIL("expected a budget error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
  try {
    count_colourings(path_graph(3), 3, b);
    FAIL("expected a budget error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("chromatic polynomial examples") {
  const FFPoly p3 = chromatic_polynomial(path_graph(3));
  const FFPoly k3 = chromatic_polynomial(complete_graph(3));
  for (std::int64_t k = 0; k <= 10; ++k) {
    CHECK(p3.eval(k) == Integer(k * (k - 1) * (k - 1)));
    CHECK(k3.eval(k) == Integer(k * (k - 1) * (k - 2)));
  }
  Graph g = disjoint_union(path_graph(9), complete_graph(1));
  g.add_edge(9, 1);
  g.add_edge(9, 2);
  CHECK(chromatic_polynomial(g).eval(3) == Integer(oracle::count_colourings(g, 3)));
}

TEST_CASE("chromatic polynomial agrees with naive counts") {
  for (const Graph& g : small_graphs()) {
    const FFPoly p = chromatic_polynomial(g);
    CHECK(p.has_integer_coeffs());
    for (unsigned k = 0; k <= 5; ++k) {
      CHECK(p.eval(k) == Integer(oracle::count_colourings(g, static_cast<int>(k))));
      CHECK(count_colourings(g, k) == oracle::count_colourings(g, static_cast<int>(k)));
    }
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = oracle::random_graph(8, 0.4, seed);
    CHECK(chromatic_polynomial(g).eval(4) == Integer(oracle::count_colourings(g, 4)));
  }
}

TEST_CASE("build_colouring_graph examples") {
  const auto k1 = build_colouring_graph(complete_graph(1), 3);
  CHECK(k1.size() == 3);
  CHECK(k1.topology().edge_count() == 3);
  const auto k2 = build_colouring_graph(complete_graph(2), 2);
  CHECK(k2.size() == 2);
  CHECK(k2.topology().edge_count() == 0);
  const auto p3 = build_colouring_graph(path_graph(3), 3);
  const auto naive = oracle::colouring_graph(path_graph(3), 3);
  CHECK(p3.size() == 12);
  CHECK(edge_set(p3.topology()) == edge_set(naive.graph));
}

TEST_CASE("colouring graph matches the pairwise oracle") {
  for (const Graph& g : small_graphs()) {
    for (unsigned k = 0; k <= 4; ++k) {
      const auto cg = build_colouring_graph(g, k);
      const auto naive = oracle::colouring_graph(g, static_cast<int>(k));
      REQUIRE(cg.size() == naive.vertices.size());
      for (VertexId id = 0; id < cg.size(); ++id) {
        auto c = cg.colouring(id);
        CHECK(std::vector<int>(c.begin(), c.end()) == naive.vertices[id]);
        CHECK(cg.find(c) == id);
      }
      CHECK(edge_set(cg.topology()) == edge_set(naive.graph));
    }
  }
}

TEST_CASE("colouring graph is independent of the thread count") {
  Budget one;
  one.threads = 1;
  Budget four;
  four.threads = 4;
  const Graph g = cycle_graph(5);
  const auto a = build_colouring_graph(g, 5, one);
  const auto b = build_colouring_graph(g, 5, four);
  CHECK(edge_set(a.topology()) == edge_set(b.topology()));
}

TEST_CASE("rainbow counts") {
  CHECK(count_rainbow(path_graph(3), 3) == 6);
  CHECK(count_rainbow(complete_graph(3), 28) == 19656);
  CHECK(count_rainbow(empty_graph(3), 28) == 19656);
  const Rational fraction(count_rainbow(path_graph(3), 28), chromatic_polynomial(path_graph(3)).eval(28));
  CHECK(fraction > Rational(1, 2));
  for (const Graph& g : small_graphs()) {
    for (unsigned k = static_cast<unsigned>(g.size()); k <= 6; ++k) {
      std::uint64_t rainbow = 0;
      for (const auto& c : oracle::colourings(g, static_cast<int>(k))) {
        std::set<int> distinct(c.begin(), c.end());
        rainbow += distinct.size() == c.size();
      }
      CHECK(count_rainbow(g, k) == Integer(rainbow));
    }
  }
}

TEST_CASE("strip_labels examples") {
  const auto k1 = build_colouring_graph(complete_graph(1), 3);
  const AbstractGraph s = strip_labels(k1, 5);
  CHECK(s.size() == 3);
  CHECK(s.edge_count() == 3);
  const auto p3 = build_colouring_graph(path_graph(3), 4);
  const AbstractGraph a = strip_labels(p3, 1);
  const AbstractGraph b = strip_labels(p3, 2);
  CHECK(a.size() == p3.size());
  CHECK(a.edge_count() == p3.topology().edge_count());
  CHECK(edge_set(a) != edge_set(b));
  const auto small = build_colouring_graph(path_graph(2), 3);
  auto to_graph = [](const AbstractGraph& ag) {
    Graph g(ag.size());
    for (VertexId u = 0; u < ag.size(); ++u)
      for (VertexId v : ag.neighbours(u)) g.add_edge(u, v);
    return g;
  };
  CHECK(canonical_form(to_graph(strip_labels(small, 1))) == canonical_form(to_graph(strip_labels(small, 99))));
}

TEST_CASE("triangles of colouring graphs are generated by one vertex") {
  for (const Graph& g : {path_graph(3), complete_graph(3), cycle_graph(4), star_graph(3)}) {
    for (unsigned k = 2; k <= 5; ++k) {
      const auto cg = build_colouring_graph(g, k);
      const auto& ag = cg.topology();
      std::size_t violations = 0;
      for (VertexId a = 0; a < ag.size(); ++a) {
        for (VertexId b : ag.neighbours(a)) {
          if (b <= a) continue;
          for (VertexId c : ag.neighbours(b)) {
            if (c <= b || !ag.adjacent(a, c)) continue;
            const auto ab = differing_vertex(cg.colouring(a), cg.colouring(b));
            const auto bc = differing_vertex(cg.colouring(b), cg.colouring(c));
            const auto ac = differing_vertex(cg.colouring(a), cg.colouring(c));
            violations += !(ab && ab == bc && bc == ac);
          }
        }
      }
      CHECK(violations == 0);
    }
  }
}

TEST_CASE("neighbourhoods split into n cliques with rainbow sizes k - deg(v)") {
  for (const Graph& g : {path_graph(3), complete_graph(3), cycle_graph(4), star_graph(3)}) {
    const std::size_t n = g.size();
    for (unsigned k = static_cast<unsigned>(n) + 3; k <= n + 4; ++k) {
      const auto cg = build_colouring_graph(g, k);
      for (VertexId c = 0; c < cg.size(); ++c) {
        const CliqueFan fan = clique_fan(cg.topology(), c);
        REQUIRE(fan.cliques.size() == n);
        // Each clique is generated by one vertex of G.
        std::vector<std::size_t> size_by_vertex(n, 0);
        for (const auto& clique : fan.cliques) {
          std::optional<std::size_t> v;
          for (VertexId x : clique) {
            if (x == c) continue;
            const auto at = differing_vertex(cg.colouring(c), cg.colouring(x));
            REQUIRE(at.has_value());
            if (v) CHECK(*v == *at);
            v = at;
          }
          REQUIRE(v.has_value());
          size_by_vertex[*v] = clique.size();
        }
        if (is_rainbow(cg.colouring(c))) {
          for (std::size_t v = 0; v < n; ++v) CHECK(size_by_vertex[v] == k - g.degree(v));
        }
      }
    }
  }
}
