#include <doctest.h>

#include <vector>

#include "k4tri/error.hpp"
#include "k4tri/graph.hpp"
#include "k4tri/random_graph.hpp"
#include "oracles.hpp"

using namespace k4tri;

TEST_SUITE("graph") {
  TEST_CASE("construction and edge bookkeeping") {
    Graph g(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
    CHECK(g.order() == 5);
    CHECK(g.edge_count() == 4);
    CHECK(g.degree(0) == 2);
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 3));
    g.remove_edge(0, 1);
    CHECK(g.edge_count() == 3);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}, {3, 4}});
  }

  TEST_CASE("invalid input is rejected with typed errors") {
    CHECK_THROWS_AS(Graph(65), Error);
    CHECK_THROWS_AS(Graph(-1), Error);
    Graph g(3);
    try {
      g.add_edge(1, 1);
      FAIL("self loop accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kInvalidArgument);
    }
    CHECK_THROWS_AS(g.add_edge(0, 3), Error);
    try {
      (void)is_kk_free(g, 1);
      FAIL("k = 1 accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kInvalidArgument);
    }
  }

  TEST_CASE("64-vertex graphs use every bit") {
    Graph g(64);
    g.add_edge(62, 63);
    g.add_edge(0, 63);
    g.add_edge(0, 62);
    CHECK(triangle_count(g) == 1);
    CHECK(g.vertex_mask() == ~VertexMask{0});
    CHECK(triangle_list(g) == TriangleSet{{0, 62, 63}});
  }

  TEST_CASE("triangle counts agree with the triple-loop oracle") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      const int n = 3 + static_cast<int>(seed % 20);
      SeededRng rng(seed);
      Graph g(n);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (rng.unit() < 0.5) g.add_edge(u, v);
        }
      }
      const auto m = oracle::matrix(g);
      CHECK(triangle_count(g) == oracle::triangles(m));
      CHECK(static_cast<std::int64_t>(triangle_list(g).size()) == oracle::triangles(m));
      std::vector<int> all(n);
      for (int i = 0; i < n; ++i) all[i] = i;
      CHECK(is_k4_free(g) == !oracle::has_clique(m, all, 4));
      CHECK(is_kk_free(g, 3) == !oracle::has_clique(m, all, 3));
      CHECK(is_kk_free(g, 5) == !oracle::has_clique(m, all, 5));
      std::int64_t per_vertex = 0;
      for (int c : vertex_triangle_counts(g)) per_vertex += c;
      CHECK(per_vertex == 3 * triangle_count(g));
    }
  }

  TEST_CASE("induced subgraphs and permutations") {
    const Graph k4 = complete_graph(4);
    CHECK(k4.edge_count() == 6);
    CHECK_FALSE(is_k4_free(k4));
    const Graph sub = induced_subgraph(k4, VertexMask{0b1011});
    CHECK(sub.order() == 3);
    CHECK(triangle_count(sub) == 1);
    const std::vector<int> perm = {2, 0, 1};
    const Graph path(3, {{0, 1}, {1, 2}});
    const Graph moved = path.permuted(perm);
    CHECK(moved.has_edge(2, 0));
    CHECK(moved.has_edge(0, 1));
    CHECK_FALSE(moved.has_edge(2, 1));
  }

  TEST_CASE("complete multipartite graphs") {
    const std::vector<int> sizes = {3, 3, 3};
    const Graph g = complete_multipartite(sizes);
    CHECK(g.order() == 9);
    CHECK(g.edge_count() == 27);
    CHECK(triangle_count(g) == 27);
    CHECK(is_k4_free(g));
  }
}
