#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "k4tri/graph.hpp"
#include "k4tri/partition.hpp"

namespace k4tri {

/// The four extremal configurations on three parts.
///   F1, F2, F3: three triangles T1 = {a,b,c}, T2 = {d,e,f}, T3 = {g,h,i}.
///   F4: triangles T1 = {a,b,c}, T3 = {f,g,h} and the edge T2 = {d,e}.
enum class BaseGraphId { kF1, kF2, kF3, kF4 };

inline constexpr std::array<BaseGraphId, 4> kBaseGraphIds = {
    BaseGraphId::kF1, BaseGraphId::kF2, BaseGraphId::kF3, BaseGraphId::kF4};

std::string_view to_string(BaseGraphId id) noexcept;
std::optional<BaseGraphId> parse_base_graph_id(std::string_view name);

struct BlowUpSpec {
  BaseGraphId base = BaseGraphId::kF1;
  std::array<int, 3> k = {1, 1, 1};
  friend bool operator==(const BlowUpSpec&, const BlowUpSpec&) = default;
};

struct AtlasEntry {
  BlowUpSpec spec;
  Graph graph;
  CliquePartition partition;
  std::vector<std::string> labels;  // labels[v] names vertex v
};

struct ClosedFormStats {
  std::int64_t v = 0, e = 0, r = 0, t = 0;
  std::int64_t g = 0;  // r(e - r(n - r)) - t, from the discrepancy polynomial
  friend bool operator==(const ClosedFormStats&, const ClosedFormStats&) = default;
};

AtlasEntry base_graph(BaseGraphId id);

/// Each vertex of part j becomes an independent set of k_j copies; copies
/// are adjacent exactly when their originals are. Vertices are grouped part
/// by part, copy-index-major, so every copy T_j^(c) is contiguous.
/// Throws kInvalidArgument for k_j < 1, kUnsupportedSize past 64 vertices.
AtlasEntry blow_up(const BlowUpSpec& spec);

ClosedFormStats closed_form_stats(const BlowUpSpec& spec);

/// Blow-up specs with closed-form g >= g_min, ordered by vertex count and
/// then lexicographically by k, limited to graphs on at most 64 vertices.
/// Each returned spec has been rebuilt and its g recomputed directly.
std::vector<BlowUpSpec> counterexample_stream(BaseGraphId id, std::int64_t g_min,
                                              std::size_t limit);

/// Reference triangle lists, e.g. "abc", in the atlas labeling.
std::vector<std::string> reference_triangles(BaseGraphId id);

/// Number of cross edges between (T1,T2), (T2,T3), (T1,T3).
std::array<int, 3> reference_cross_edge_counts(BaseGraphId id);

/// Checks one base graph against its reference data: K4-free, cross-edge
/// counts, triangle list and (v, e, t). Returns a list of failures, empty
/// when everything matches.
std::vector<std::string> validate_base_graph(BaseGraphId id);

}  // namespace k4tri
