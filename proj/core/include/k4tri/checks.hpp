#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "k4tri/graph.hpp"
#include "k4tri/partition.hpp"

namespace k4tri {

/// Outcome of one inequality or identity on one (graph, partition) pair.
/// `lhs` and `rhs` are the two sides as stated by the check; `witness`
/// carries every scalar statistic needed to reproduce the verdict.
struct VerificationReport {
  std::string check;
  std::string graph6;
  std::vector<std::vector<int>> partition;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds = false;
  std::vector<std::pair<std::string, std::int64_t>> witness;

  std::optional<std::int64_t> value(std::string_view name) const;
};

enum class Check {
  kMainTheorem,   // t >= r(e - r(n-r)) - omega
  kConjecture12,  // t >= r(e - r(n-r))
  kEq3,           // t = sum t_ijk - (r-3) M2 - a(r-1)(r-2)/2 + a
  kLemma31,       // M2 >= M0 and t_ij >= 2(e_ij - 2(|Ti|+|Tj|-2)) per pair
  kKeyLemma,      // sum t_ijk >= F0 + (r-2)(M2 - M0) - omega
  kAppendixA,     // F0 - (r-3) M0 - a(r-1)(r-2)/2 + a = r(e - r(n-r))
  kHuangShi,      // t_e * r >= t
  kTheorem11,     // m = e - floor(n^2/4) <= 0 or t_e >= m
  kConjectureTe,  // t_e >= e - r(n-r)
};

inline constexpr Check kAllChecks[] = {
    Check::kMainTheorem, Check::kConjecture12, Check::kEq3,
    Check::kLemma31,     Check::kKeyLemma,     Check::kAppendixA,
    Check::kHuangShi,    Check::kTheorem11,    Check::kConjectureTe};

/// The proven statements. `--checks all` means these; the two conjectures
/// (conjecture12, conjecture-te) have to be asked for by name.
inline constexpr Check kTheoremChecks[] = {
    Check::kMainTheorem, Check::kEq3,      Check::kLemma31,  Check::kKeyLemma,
    Check::kAppendixA,   Check::kHuangShi, Check::kTheorem11};

std::string_view to_string(Check check) noexcept;
std::optional<Check> parse_check(std::string_view name);
bool needs_packing(Check check) noexcept;

/// Report skeleton: graph6, partition and all scalar statistics.
VerificationReport report_skeleton(std::string_view check, const Graph& g,
                                   const CliquePartition& p,
                                   const PartitionStats& stats);

VerificationReport check_main_theorem(const Graph& g, const CliquePartition& p,
                                      const PartitionStats& stats);
VerificationReport check_conjecture12(const Graph& g, const CliquePartition& p,
                                      const PartitionStats& stats);
VerificationReport check_eq3_identity(const Graph& g, const CliquePartition& p,
                                      const PartitionStats& stats);
VerificationReport check_lemma31(const Graph& g, const CliquePartition& p,
                                 const PartitionStats& stats);
VerificationReport check_key_lemma(const Graph& g, const CliquePartition& p,
                                   const PartitionStats& stats);
VerificationReport check_appendixA_identity(const Graph& g, const CliquePartition& p,
                                            const PartitionStats& stats);

// Convenience overloads computing the statistics first. They throw
// kNotK4Free / kInvalidPartition when the preconditions fail.
VerificationReport check_main_theorem(const Graph& g, const CliquePartition& p);
VerificationReport check_conjecture12(const Graph& g, const CliquePartition& p);
VerificationReport check_eq3_identity(const Graph& g, const CliquePartition& p);
VerificationReport check_lemma31(const Graph& g, const CliquePartition& p);
VerificationReport check_key_lemma(const Graph& g, const CliquePartition& p);
VerificationReport check_appendixA_identity(const Graph& g, const CliquePartition& p);

/// Dispatch for the partition-only checks. Throws kInvalidArgument for the
/// packing-based ones.
VerificationReport run_partition_check(Check check, const Graph& g,
                                       const CliquePartition& p,
                                       const PartitionStats& stats);

/// a(r-1)(r-2)/2, always integral.
inline std::int64_t half_a_r1_r2(std::int64_t a, std::int64_t r) {
  return a * ((r - 1) * (r - 2) / 2);
}

}  // namespace k4tri
