#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "k4tri/atlas.hpp"
#include "k4tri/canonical.hpp"
#include "k4tri/checks.hpp"
#include "k4tri/graph.hpp"
#include "k4tri/partition.hpp"

namespace k4tri {

/// An r = 3 case: a triangles, b edges and c single vertices as parts.
struct BaseCaseSpec {
  int a = 0;
  int b = 0;
  int c = 0;

  int order() const noexcept { return 3 * a + 2 * b + c; }
  /// The constant C in t >= M2 + e - C, equal to 3(n-3).
  int constant() const noexcept { return 3 * (order() - 3); }
  /// Part sizes in non-increasing order.
  std::array<int, 3> part_sizes() const;
  std::string label() const;  // "a,b,c"

  friend bool operator==(const BaseCaseSpec&, const BaseCaseSpec&) = default;
};

/// The six cases with a >= 1, in table order.
inline constexpr std::array<BaseCaseSpec, 6> kBaseCases = {
    {{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1}, {1, 0, 2}}};

/// Parses "a,b,c"; throws kInvalidArgument unless it names one of kBaseCases.
BaseCaseSpec parse_base_case(const std::string& text);

/// One isomorphism class of violators of t >= M2 + e - 3(n-3).
struct CounterexampleRecord {
  std::string graph6;  // smallest labelled instance found, parts contiguous
  CanonicalForm form;
  std::int64_t t = 0;
  std::int64_t m2 = 0;
  std::int64_t e = 0;
  std::optional<BaseGraphId> match;
};

enum class SeedMode {
  kIsomorphismClasses,  // fixed pair iterated over one representative per class
  kNaive,               // every cross-edge subset of every pair
};

struct BaseCaseOptions {
  SeedMode seed_mode = SeedMode::kIsomorphismClasses;
  /// When false the two free pairs start from one cross edge, which is what
  /// the original search program did.
  bool include_empty_subsets = true;
  int jobs = 1;
  /// Called on every graph that passes the greedy conditions, with the
  /// contiguous three-part partition. Must be thread-safe when jobs > 1.
  std::function<void(const Graph&, const CliquePartition&)> visit;
};

struct BaseCaseResult {
  BaseCaseSpec spec;
  std::vector<CounterexampleRecord> records;  // sorted by canonical form
  std::size_t seed_classes = 0;
  std::uint64_t visited = 0;          // graphs passing the greedy conditions
  std::uint64_t violating_graphs = 0; // labelled violators before dedup
};

/// Cross-edge subsets (as lists of vertex pairs in the case's layout) for the
/// pair whose structure is fixed: one per isomorphism class in
/// kIsomorphismClasses mode, all admissible ones in kNaive mode.
std::vector<std::vector<std::pair<int, int>>> fixed_pair_seeds(const BaseCaseSpec& spec,
                                                               SeedMode mode);

/// Throws kInvalidArgument for a case outside kBaseCases.
BaseCaseResult enumerate_base_case(const BaseCaseSpec& spec,
                                   const BaseCaseOptions& options = {});

/// Exhaustive check of the four a = 0 cases: e - 3n + 9 <= 0 and
/// t = M2 = omega = 0 on every greedy-partitioned instance.
VerificationReport check_a0_cases();

/// Verifies the tabulated constants against the r = 3 closed forms of F0 and
/// M0. Returns failure messages; empty on success.
std::vector<std::string> table1_constant_failures();

struct Table1Expected {
  BaseGraphId id;
  std::int64_t t, m2, e;
};

/// Reference rows: (3,0,0) -> F1, F2, F3; (2,1,0) -> F4; the rest empty.
std::vector<Table1Expected> table1_reference(const BaseCaseSpec& spec);

struct Table1Result {
  std::vector<BaseCaseResult> rows;
  std::optional<VerificationReport> a0;  // absent when a single case was run
};

Table1Result reproduce_table1(const BaseCaseOptions& options,
                              std::optional<BaseCaseSpec> only = std::nullopt);

/// Differences against the reference table; empty iff it matches exactly.
std::vector<std::string> table1_diff(const Table1Result& result);

/// Columns a,b,c,constant,class-count,graph6-list,t,M2,e. Multi-class rows
/// use ';' inside the list columns, aligned with graph6-list.
std::string table1_csv(const Table1Result& result);
nlohmann::json table1_json(const Table1Result& result);
std::string table1_text(const Table1Result& result);

}  // namespace k4tri
