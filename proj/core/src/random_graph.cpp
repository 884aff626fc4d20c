#include "k4tri/random_graph.hpp"

#include <bit>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "k4tri/error.hpp"

namespace k4tri {

std::uint64_t SeededRng::below(std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x < limit) return x % bound;
  }
}

double SeededRng::unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

Graph random_k4free(int n, double density, std::uint64_t seed) {
  if (n < 1 || n > Graph::kMaxVertices) {
    throw Error(ErrorKind::kInvalidArgument,
                "random_k4free needs 1 <= n <= 64, got " + std::to_string(n));
  }
  if (!(density >= 0.0 && density <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "density must lie in [0, 1]");
  }
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  SeededRng rng(seed);
  for (std::size_t i = pairs.size(); i > 1; --i) {
    std::swap(pairs[i - 1], pairs[rng.below(i)]);
  }

  Graph g(n);
  for (auto [u, v] : pairs) {
    if (rng.unit() >= density) continue;
    // uv closes a K4 iff the common neighbourhood already holds an edge.
    const VertexMask common = g.row(u) & g.row(v);
    bool closes = false;
    for (VertexMask m = common; m && !closes; m &= m - 1) {
      closes = (g.row(std::countr_zero(m)) & common) != 0;
    }
    if (!closes) g.add_edge(u, v);
  }
  return g;
}

}  // namespace k4tri
