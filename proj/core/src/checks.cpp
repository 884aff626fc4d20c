#include "k4tri/checks.hpp"

#include <algorithm>

#include "k4tri/error.hpp"
#include "k4tri/graph6.hpp"

namespace k4tri {

std::optional<std::int64_t> VerificationReport::value(std::string_view name) const {
  for (const auto& [key, v] : witness) {
    if (key == name) return v;
  }
  return std::nullopt;
}

std::string_view to_string(Check check) noexcept {
  switch (check) {
    case Check::kMainTheorem: return "main-theorem";
    case Check::kConjecture12: return "conjecture12";
    case Check::kEq3: return "eq3";
    case Check::kLemma31: return "lemma31";
    case Check::kKeyLemma: return "key-lemma";
    case Check::kAppendixA: return "appendixA";
    case Check::kHuangShi: return "huang-shi";
    case Check::kTheorem11: return "theorem11";
    case Check::kConjectureTe: return "conjecture-te";
  }
  return "?";
}

std::optional<Check> parse_check(std::string_view name) {
  for (Check c : kAllChecks) {
    if (name == to_string(c)) return c;
  }
  return std::nullopt;
}

bool needs_packing(Check check) noexcept {
  return check == Check::kHuangShi || check == Check::kTheorem11 ||
         check == Check::kConjectureTe;
}

namespace {

void require_k4_free(const Graph& g) {
  if (!is_k4_free(g)) {
    throw Error(ErrorKind::kNotK4Free, "check requires a K4-free graph");
  }
}

VerificationReport finish(VerificationReport r, std::int64_t lhs, std::int64_t rhs,
                          bool holds) {
  r.lhs = lhs;
  r.rhs = rhs;
  r.holds = holds;
  return r;
}

}  // namespace

VerificationReport report_skeleton(std::string_view check, const Graph& g,
                                   const CliquePartition& p,
                                   const PartitionStats& s) {
  VerificationReport r;
  r.check = std::string(check);
  r.graph6 = encode_graph6(g);
  r.partition = p.as_lists();
  r.witness = {{"n", s.n},       {"e", s.e},         {"t", s.t},
               {"r", s.r},       {"a", s.a},         {"b", s.b},
               {"c", s.c},       {"m0", s.m0},       {"m1", s.m1},
               {"m2", s.m2},     {"m3", s.m3},       {"f0", s.f0},
               {"omega", s.omega}, {"g", s.g},
               {"sum_t_ij", s.sum_pair_triangles()},
               {"sum_t_ijk", s.sum_triple_triangles()}};
  return r;
}

VerificationReport check_main_theorem(const Graph& g, const CliquePartition& p,
                                      const PartitionStats& s) {
  const std::int64_t rhs = conjectured_bound(s.n, s.e, s.r) - s.omega;
  return finish(report_skeleton("main-theorem", g, p, s), s.t, rhs, s.t >= rhs);
}

VerificationReport check_conjecture12(const Graph& g, const CliquePartition& p,
                                      const PartitionStats& s) {
  const std::int64_t rhs = conjectured_bound(s.n, s.e, s.r);
  return finish(report_skeleton("conjecture12", g, p, s), s.t, rhs, s.g <= 0);
}

VerificationReport check_eq3_identity(const Graph& g, const CliquePartition& p,
                                      const PartitionStats& s) {
  const std::int64_t rhs = s.sum_triple_triangles() -
                           static_cast<std::int64_t>(s.r - 3) * s.m2 -
                           half_a_r1_r2(s.a, s.r) + s.a;
  return finish(report_skeleton("eq3", g, p, s), s.t, rhs, s.t == rhs);
}

VerificationReport check_lemma31(const Graph& g, const CliquePartition& p,
                                 const PartitionStats& s) {
  std::int64_t pair_violations = 0;
  std::int64_t worst_slack = 0;
  bool first = true;
  for (const PairStats& pair : s.pairs) {
    const int size = p.part_order(pair.i) + p.part_order(pair.j);
    const std::int64_t bound = 2 * (pair.edges - 2 * (size - 2));
    const std::int64_t slack = pair.triangles - bound;
    if (slack < 0) ++pair_violations;
    if (first || slack < worst_slack) worst_slack = slack;
    first = false;
  }
  VerificationReport r = report_skeleton("lemma31", g, p, s);
  r.witness.emplace_back("pair_violations", pair_violations);
  r.witness.emplace_back("min_pair_slack", worst_slack);
  return finish(std::move(r), s.m2, s.m0, s.m2 >= s.m0 && pair_violations == 0);
}

VerificationReport check_key_lemma(const Graph& g, const CliquePartition& p,
                                   const PartitionStats& s) {
  const std::int64_t c = s.m2 - s.m0;
  const std::int64_t lhs = s.sum_triple_triangles();
  const std::int64_t rhs = s.f0 + static_cast<std::int64_t>(s.r - 2) * c - s.omega;
  return finish(report_skeleton("key-lemma", g, p, s), lhs, rhs, lhs >= rhs);
}

VerificationReport check_appendixA_identity(const Graph& g, const CliquePartition& p,
                                            const PartitionStats& s) {
  const std::int64_t lhs = s.f0 - static_cast<std::int64_t>(s.r - 3) * s.m0 -
                           half_a_r1_r2(s.a, s.r) + s.a;
  const std::int64_t rhs = conjectured_bound(s.n, s.e, s.r);
  return finish(report_skeleton("appendixA", g, p, s), lhs, rhs, lhs == rhs);
}

#define K4TRI_STATS_OVERLOAD(name)                                          \
  VerificationReport name(const Graph& g, const CliquePartition& p) {       \
    require_k4_free(g);                                                     \
    return name(g, p, partition_stats(g, p));                               \
  }

K4TRI_STATS_OVERLOAD(check_main_theorem)
K4TRI_STATS_OVERLOAD(check_conjecture12)
K4TRI_STATS_OVERLOAD(check_eq3_identity)
K4TRI_STATS_OVERLOAD(check_lemma31)
K4TRI_STATS_OVERLOAD(check_key_lemma)
K4TRI_STATS_OVERLOAD(check_appendixA_identity)

#undef K4TRI_STATS_OVERLOAD

VerificationReport run_partition_check(Check check, const Graph& g,
                                       const CliquePartition& p,
                                       const PartitionStats& s) {
  switch (check) {
    case Check::kMainTheorem: return check_main_theorem(g, p, s);
    case Check::kConjecture12: return check_conjecture12(g, p, s);
    case Check::kEq3: return check_eq3_identity(g, p, s);
    case Check::kLemma31: return check_lemma31(g, p, s);
    case Check::kKeyLemma: return check_key_lemma(g, p, s);
    case Check::kAppendixA: return check_appendixA_identity(g, p, s);
    default: break;
  }
  throw Error(ErrorKind::kInvalidArgument,
              std::string(to_string(check)) + " needs a triangle packing");
}

}  // namespace k4tri
