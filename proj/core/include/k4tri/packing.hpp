#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "k4tri/checks.hpp"
#include "k4tri/graph.hpp"
#include "k4tri/partition.hpp"

namespace k4tri {

/// Pairwise edge-disjoint triangles of a host graph.
struct TrianglePacking {
  std::vector<Triangle> triples;
  int size() const noexcept { return static_cast<int>(triples.size()); }
};

/// Exact search is attempted only up to this many triangles.
inline constexpr std::size_t kMaxPackingTriangles = 200;

/// packing_at_least accepts graphs up to this size. Above
/// kMaxPackingTriangles it runs seeded local search instead of exact search
/// and succeeds only by reaching the target.
inline constexpr std::size_t kMaxCertifiedTriangles = 1024;

/// Search nodes allowed per solve before giving up with kUnsupportedSize.
/// Counted, not timed, so the outcome is reproducible.
inline constexpr std::uint64_t kPackingNodeBudget = 20'000'000;

/// Maximum-cardinality edge-disjoint triangle packing by branch and bound.
/// Throws kUnsupportedSize when g has more than kMaxPackingTriangles
/// triangles or the node budget runs out.
TrianglePacking max_edge_disjoint_triangles(const Graph& g);

struct PackingCertificate {
  TrianglePacking packing;
  /// True when the search proved packing is maximum. Always true when the
  /// packing is smaller than the target.
  bool optimal = false;
};

/// Stops as soon as a packing of size >= target is known; otherwise returns a
/// proven maximum packing. Throws kUnsupportedSize past
/// kMaxCertifiedTriangles, when the node budget runs out, or when a graph
/// with more than kMaxPackingTriangles triangles has no packing of size
/// target found.
PackingCertificate packing_at_least(const Graph& g, std::int64_t target);

/// Every triple is a triangle of g and no edge is used twice.
bool is_valid_packing(const Graph& g, const TrianglePacking& packing);

/// Packing sizes that make each check hold: ceil(t / r), m = e - floor(n^2/4)
/// and e - r(n - r).
std::int64_t huang_shi_target(const PartitionStats& s);
std::int64_t theorem11_target(const Graph& g);
std::int64_t conjecture_te_target(const PartitionStats& s);

/// Target of a packing-based check; kInvalidArgument for other checks.
std::int64_t packing_target(Check check, const Graph& g, const PartitionStats& s);

// The checks take a packing number: t_e itself, or the size of a packing
// that already meets the target (a certified lower bound). The short forms
// certify against the target themselves. The witness records it as
// "packing".

/// t_e * r >= t.
VerificationReport check_huang_shi(const Graph& g, const CliquePartition& p);
VerificationReport check_huang_shi(const Graph& g, const CliquePartition& p,
                                   const PartitionStats& stats, int packing_number);

/// With m = e - floor(n^2/4): m <= 0 or t_e >= m.
VerificationReport check_theorem11(const Graph& g);
VerificationReport check_theorem11(const Graph& g, int packing_number);

/// t_e >= e - r(n - r).
VerificationReport check_conjecture_te(const Graph& g, const CliquePartition& p);
VerificationReport check_conjecture_te(const Graph& g, const CliquePartition& p,
                                       const PartitionStats& stats,
                                       int packing_number);

/// Dispatch over the three packing-based checks.
VerificationReport run_packing_check(Check check, const Graph& g, const CliquePartition& p,
                                     const PartitionStats& stats, int packing_number);

}  // namespace k4tri
