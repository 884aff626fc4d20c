#include <doctest.h>

#include "k4tri/atlas.hpp"
#include "k4tri/error.hpp"
#include "k4tri/packing.hpp"
#include "k4tri/random_graph.hpp"
#include "oracles.hpp"

using namespace k4tri;

TEST_SUITE("packing") {
  TEST_CASE("small cases") {
    CHECK(max_edge_disjoint_triangles(complete_graph(3)).size() == 1);
    CHECK(max_edge_disjoint_triangles(complete_graph(4)).size() == 1);
    CHECK(max_edge_disjoint_triangles(Graph(5)).size() == 0);
    const std::vector<int> k333 = {3, 3, 3};
    CHECK(max_edge_disjoint_triangles(complete_multipartite(k333)).size() == 9);
    const std::vector<int> k222 = {2, 2, 2};
    CHECK(max_edge_disjoint_triangles(complete_multipartite(k222)).size() == 4);
  }

  TEST_CASE("atlas graphs") {
    const AtlasEntry f1 = base_graph(BaseGraphId::kF1);
    const TrianglePacking p = max_edge_disjoint_triangles(f1.graph);
    CHECK(p.size() >= 4);
    CHECK(static_cast<int>(p.size()) == oracle::max_packing(oracle::matrix(f1.graph)));
    CHECK(is_valid_packing(f1.graph, p));
    CHECK(check_huang_shi(f1.graph, f1.partition).holds);
    const auto te = check_conjecture_te(f1.graph, f1.partition);
    CHECK(te.holds);
    CHECK(te.rhs == 4);
    const AtlasEntry f2 = base_graph(BaseGraphId::kF2);
    CHECK(check_conjecture_te(f2.graph, f2.partition).rhs == 5);
    CHECK(check_conjecture_te(f2.graph, f2.partition).holds);
  }

  TEST_CASE("matches exhaustive search on graphs with few triangles") {
    int compared = 0;
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
      const Graph g = random_k4free(6 + static_cast<int>(seed % 9), 0.25 * (1 + seed % 4), seed);
      if (triangle_count(g) > 20) continue;
      const TrianglePacking p = max_edge_disjoint_triangles(g);
      CHECK(is_valid_packing(g, p));
      CHECK(static_cast<int>(p.size()) == oracle::max_packing(oracle::matrix(g)));
      ++compared;
    }
    CHECK(compared > 100);
  }

  TEST_CASE("validity checker rejects shared edges and non-triangles") {
    const Graph k4 = complete_graph(4);
    TrianglePacking bad;
    bad.triples = {{0, 1, 2}, {0, 1, 3}};
    CHECK_FALSE(is_valid_packing(k4, bad));
    TrianglePacking missing;
    missing.triples = {{0, 1, 2}};
    CHECK_FALSE(is_valid_packing(Graph(3, {{0, 1}, {1, 2}}), missing));
  }

  TEST_CASE("packings above the Turan excess on complete multipartite graphs") {
    const std::vector<int> k222 = {2, 2, 2};
    const auto r = check_theorem11(complete_multipartite(k222));
    CHECK(r.holds);
    CHECK(r.rhs == 3);
    const std::vector<int> k33 = {3, 3};
    CHECK(check_theorem11(complete_multipartite(k33)).holds);
  }

  TEST_CASE("budget") {
    const std::vector<int> big = {5, 5, 5};  // 125 triangles
    CHECK_NOTHROW(max_edge_disjoint_triangles(complete_multipartite(big)));
    const std::vector<int> huge = {6, 6, 6};  // 216 triangles
    try {
      (void)max_edge_disjoint_triangles(complete_multipartite(huge));
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kUnsupportedSize);
    }
  }

  TEST_CASE("certificates above the exact limit") {
    // K(6,6,6) decomposes into 36 edge-disjoint triangles.
    const Graph g = complete_multipartite(std::vector<int>{6, 6, 6});
    const PackingCertificate cert = packing_at_least(g, 30);
    CHECK(cert.packing.size() >= 30);
    CHECK(is_valid_packing(g, cert.packing));
    CHECK(packing_at_least(g, 30).packing.triples == cert.packing.triples);
    try {
      (void)packing_at_least(g, 37);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kUnsupportedSize);
    }
    const Graph too_big = complete_multipartite(std::vector<int>{11, 11, 11});
    CHECK_THROWS_AS((void)packing_at_least(too_big, 1), Error);
  }
}
