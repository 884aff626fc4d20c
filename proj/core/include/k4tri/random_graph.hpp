#pragma once

#include <cstdint>
#include <random>

#include "k4tri/graph.hpp"

namespace k4tri {

/// Reproducible stream on top of std::mt19937_64, whose output sequence is
/// fixed by the standard. Bounded integers use rejection sampling and
/// reals take the top 53 bits, so nothing depends on the library's
/// distribution implementations.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform on [0, 1).
  double unit();

 private:
  std::mt19937_64 engine_;
};

/// K4-free graph on n vertices (1 <= n <= 64). All vertex pairs are
/// shuffled (Fisher-Yates, last index first); each pair in turn draws one
/// unit() and is inserted when the draw is below `density` and the edge
/// closes no K4. density 1.0 yields a maximal K4-free graph.
Graph random_k4free(int n, double density, std::uint64_t seed);

}  // namespace k4tri
