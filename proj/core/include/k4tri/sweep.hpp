#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "k4tri/atlas.hpp"
#include "k4tri/checks.hpp"

namespace k4tri {

enum class PartitionMode {
  kDeterministic,  // greedy_partition only
  kExhaustive,     // every greedy partition; instances must have n <= 10
};

struct SweepConfig {
  // Random instances: n in [n_lo, n_hi], `seeds` graphs per n.
  int n_lo = 5;
  int n_hi = 10;
  int seeds = 100;
  std::uint64_t seed = 1;
  /// Fixed density; when unset, graph s of each n uses 0.25 * (1 + s % 4).
  std::optional<double> density;
  /// Atlas mode replaces the random instances by every blow-up of `family`
  /// with multiplicities in 1..kmax (n <= 64).
  std::optional<BaseGraphId> family;
  int kmax = 4;
  std::vector<Check> checks{std::begin(kTheoremChecks), std::end(kTheoremChecks)};
  PartitionMode mode = PartitionMode::kDeterministic;
  int jobs = 1;
};

struct CheckTally {
  Check check;
  std::uint64_t evaluated = 0;
  std::uint64_t violations = 0;
  std::uint64_t skipped = 0;  // packing budget exceeded
};

struct SweepReport {
  std::uint64_t graphs = 0;
  std::uint64_t partitions = 0;
  std::vector<CheckTally> tallies;          // one per configured check
  std::vector<VerificationReport> failures; // in instance order

  std::uint64_t total_violations() const;
};

/// Seed of the s-th graph on n vertices: splitmix-style mix of (seed, n, s),
/// so runs with different n ranges share instances.
std::uint64_t instance_seed(std::uint64_t seed, int n, int s);

/// Throws kInvalidArgument for an invalid configuration. The report does not
/// depend on `jobs`.
SweepReport sweep(const SweepConfig& config);

}  // namespace k4tri
