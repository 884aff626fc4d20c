#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "k4tri/graph.hpp"

namespace k4tri {

/// Ordered vertex-disjoint cliques T_1..T_r covering the host graph, sizes
/// non-increasing. Parts are stored as bitmasks over the host's vertices.
struct CliquePartition {
  std::vector<VertexMask> parts;

  int size() const noexcept { return static_cast<int>(parts.size()); }
  int part_order(int i) const;
  std::vector<std::vector<int>> as_lists() const;
  static CliquePartition from_lists(const std::vector<std::vector<int>>& lists);

  friend bool operator==(const CliquePartition&, const CliquePartition&) = default;
};

struct PairStats {
  int i, j;
  int edges;      // e_ij
  int triangles;  // t_ij
};

struct TripleStats {
  int i, j, k;
  int edges;      // e_ijk
  int triangles;  // t_ijk
};

/// Every statistic of a (graph, greedy partition) pair. All values exact.
struct PartitionStats {
  int n = 0;
  int e = 0;
  std::int64_t t = 0;
  int r = 0;
  int a = 0, b = 0, c = 0;  // parts of size 3, 2, 1
  std::vector<PairStats> pairs;      // lexicographic (i < j)
  std::vector<TripleStats> triples;  // lexicographic (i < j < k)
  std::int64_t m1 = 0, m2 = 0, m3 = 0;
  std::int64_t m0 = 0;  // may be negative
  std::int64_t f0 = 0;
  std::int64_t omega = 0;
  std::int64_t g = 0;  // r(e - r(n - r)) - t

  std::int64_t sum_pair_triangles() const;
  std::int64_t sum_triple_triangles() const;
};

/// Repeatedly removes the lexicographically smallest maximum clique.
/// Throws kNotK4Free if g contains K4.
CliquePartition greedy_partition(const Graph& g);

/// Throws kInvalidPartition when p is not a set partition of V(g);
/// otherwise reports whether p is a greedy clique partition.
bool verify_greedy(const Graph& g, const CliquePartition& p);

/// Every greedy partition of g, one per set partition (equal-size parts in
/// increasing lexicographic order), stopping after `limit` results.
/// Requires n <= 12 (kUnsupportedSize otherwise).
std::vector<CliquePartition> enumerate_greedy_partitions(const Graph& g,
                                                         std::size_t limit);

/// Throws kInvalidPartition unless verify_greedy(g, p).
PartitionStats partition_stats(const Graph& g, const CliquePartition& p);

/// Triples of parts whose union induces a copy of F1, F2, F3 or F4.
std::int64_t bad_triple_count(const Graph& g, const CliquePartition& p);

/// True iff h is isomorphic to one of F1..F4.
bool is_bad_configuration(const Graph& h);

/// Closed forms of M0 and F0 in terms of (n, e, r, a).
std::int64_t m0_closed_form(std::int64_t n, std::int64_t e, std::int64_t r,
                            std::int64_t a);
std::int64_t f0_closed_form(std::int64_t n, std::int64_t e, std::int64_t r,
                            std::int64_t a);

/// r(e - r(n - r)).
inline std::int64_t conjectured_bound(std::int64_t n, std::int64_t e,
                                      std::int64_t r) {
  return r * (e - r * (n - r));
}

}  // namespace k4tri
