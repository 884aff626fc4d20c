#include "k4tri/packing.hpp"

#include <algorithm>
#include <bit>
#include <array>
#include <bitset>
#include <limits>
#include <string>

#include "k4tri/error.hpp"
#include "k4tri/graph6.hpp"
#include "k4tri/random_graph.hpp"

namespace k4tri {

namespace {

constexpr int kLocalSearchRestarts = 64;
constexpr std::uint64_t kLocalSearchSeed = 0x9e3779b97f4a7c15ULL;

// Maximum independent set in the triangle conflict graph. Each node picks
// the usable edge lying on the fewest available triangles and branches on
// which of them (if any) uses it; the branches partition the search space.
template <std::size_t Bits>
class PackingSolver {
  using TriangleSetBits = std::bitset<Bits>;

 public:
  explicit PackingSolver(const Graph& g) : g_(g), triangles_(triangle_list(g)) {
    const int n = g.order();
    edge_id_.assign(static_cast<std::size_t>(n) * n, -1);
    for (auto [u, v] : g.edges()) {
      edge_id_[u * n + v] = edge_id_[v * n + u] = static_cast<int>(ends_.size());
      ends_.emplace_back(u, v);
    }
    const std::size_t count = triangles_.size();
    edges_of_.resize(count);
    conflicts_.resize(count);
    on_edge_.resize(ends_.size());
    for (std::size_t i = 0; i < count; ++i) {
      const Triangle& t = triangles_[i];
      edges_of_[i] = {id(t.a, t.b), id(t.a, t.c), id(t.b, t.c)};
      for (int e : edges_of_[i]) on_edge_[e].set(i);
    }
    for (std::size_t i = 0; i < count; ++i) {
      for (int e : edges_of_[i]) conflicts_[i] |= on_edge_[e];
      conflicts_[i].reset(i);
    }
  }

  // With exhaustive == false only the heuristics run; the result is then
  // optimal only when it meets the root bound.
  PackingCertificate solve(std::int64_t target, bool exhaustive) {
    TriangleSetBits all;
    for (std::size_t i = 0; i < triangles_.size(); ++i) all.set(i);
    seed_incumbent(all);
    root_bound_ = upper_bound(all);
    stop_at_ = static_cast<int>(std::clamp<std::int64_t>(target, 0, root_bound_));
    if (!exhaustive) local_search(all);
    std::vector<int> chosen;
    if (exhaustive && static_cast<int>(best_.size()) < stop_at_) branch(all, chosen);

    PackingCertificate out;
    for (int i : best_) out.packing.triples.push_back(triangles_[i]);
    std::sort(out.packing.triples.begin(), out.packing.triples.end());
    out.optimal = (exhaustive && static_cast<int>(best_.size()) < stop_at_) ||
                  static_cast<int>(best_.size()) == root_bound_;
    return out;
  }

 private:
  int id(int u, int v) const { return edge_id_[u * g_.order() + v]; }

  // Repeatedly takes the available triangle with fewest available
  // conflicts, lowest index first on ties.
  void seed_incumbent(TriangleSetBits avail) {
    while (avail.any()) {
      int pick = -1;
      std::size_t pick_degree = 0;
      for (std::size_t i = 0; i < triangles_.size(); ++i) {
        if (!avail.test(i)) continue;
        const std::size_t d = (conflicts_[i] & avail).count();
        if (pick < 0 || d < pick_degree) {
          pick = static_cast<int>(i);
          pick_degree = d;
        }
      }
      best_.push_back(pick);
      avail &= ~conflicts_[pick];
      avail.reset(pick);
    }
  }

  // Restarts of a noisy min-degree greedy, each followed by (1,2)-swaps:
  // drop one packed triangle and add two that conflicted only with it.
  void local_search(const TriangleSetBits& all) {
    SeededRng rng(kLocalSearchSeed);
    const std::size_t count = triangles_.size();
    for (int restart = 0; restart < kLocalSearchRestarts; ++restart) {
      if (static_cast<int>(best_.size()) >= stop_at_) return;
      TriangleSetBits packed, avail = all;
      while (avail.any()) {
        int pick = -1;
        double pick_score = 0;
        for (std::size_t i = 0; i < count; ++i) {
          if (!avail.test(i)) continue;
          const double score =
              static_cast<double>((conflicts_[i] & avail).count()) + 2.0 * rng.unit();
          if (pick < 0 || score < pick_score) {
            pick = static_cast<int>(i);
            pick_score = score;
          }
        }
        packed.set(pick);
        avail &= ~conflicts_[pick];
        avail.reset(pick);
      }
      while (swap_one_for_two(packed)) {
      }
      if (packed.count() > best_.size()) {
        best_.clear();
        for (std::size_t i = 0; i < count; ++i) {
          if (packed.test(i)) best_.push_back(static_cast<int>(i));
        }
      }
    }
  }

  bool swap_one_for_two(TriangleSetBits& packed) const {
    const std::size_t count = triangles_.size();
    for (std::size_t x = 0; x < count; ++x) {
      if (!packed.test(x)) continue;
      TriangleSetBits others = packed;
      others.reset(x);
      TriangleSetBits blocked_by_others;
      for (std::size_t i = 0; i < count; ++i) {
        if (others.test(i)) blocked_by_others |= conflicts_[i];
      }
      // Triangles freed by removing x.
      const TriangleSetBits free = conflicts_[x] & ~blocked_by_others & ~others;
      for (std::size_t u = 0; u < count; ++u) {
        if (!free.test(u)) continue;
        const TriangleSetBits rest = free & ~conflicts_[u];
        for (std::size_t v = u + 1; v < count; ++v) {
          if (!rest.test(v)) continue;
          packed.reset(x);
          packed.set(u);
          packed.set(v);
          return true;
        }
      }
    }
    return false;
  }

  // min(|A|, floor(usable edges / 3), floor(sum_v floor(d_v / 2) / 3)), where
  // usable edges lie on an available triangle and d_v counts them at v.
  int upper_bound(const TriangleSetBits& avail) const {
    std::array<int, Graph::kMaxVertices> degree{};
    int edges = 0;
    for (std::size_t e = 0; e < ends_.size(); ++e) {
      if ((on_edge_[e] & avail).none()) continue;
      ++edges;
      ++degree[ends_[e].first];
      ++degree[ends_[e].second];
    }
    int half_degrees = 0;
    for (int d : degree) half_degrees += d / 2;
    return std::min({static_cast<int>(avail.count()), edges / 3, half_degrees / 3});
  }

  void branch(const TriangleSetBits& avail, std::vector<int>& chosen) {
    if (++nodes_ > kPackingNodeBudget) {
      throw Error(ErrorKind::kUnsupportedSize,
                  "exact packing exceeded its search budget of " +
                      std::to_string(kPackingNodeBudget) + " nodes");
    }
    if (chosen.size() > best_.size()) best_ = chosen;
    if (static_cast<int>(best_.size()) >= stop_at_ || avail.none()) return;
    if (static_cast<int>(chosen.size()) + upper_bound(avail) <=
        static_cast<int>(best_.size())) {
      return;
    }

    int edge = -1;
    std::size_t fewest = 0;
    for (std::size_t e = 0; e < ends_.size(); ++e) {
      const std::size_t k = (on_edge_[e] & avail).count();
      if (k > 0 && (edge < 0 || k < fewest)) {
        edge = static_cast<int>(e);
        fewest = k;
      }
    }
    const TriangleSetBits here = on_edge_[edge] & avail;
    // Triangles on the edge, fewest remaining conflicts first.
    std::vector<std::pair<std::size_t, int>> order;
    for (std::size_t i = 0; i < triangles_.size(); ++i) {
      if (here.test(i)) order.emplace_back((conflicts_[i] & avail).count(), static_cast<int>(i));
    }
    std::sort(order.begin(), order.end());
    for (auto [degree, i] : order) {
      chosen.push_back(i);
      TriangleSetBits next = avail & ~conflicts_[i];
      next.reset(static_cast<std::size_t>(i));
      branch(next, chosen);
      chosen.pop_back();
      if (static_cast<int>(best_.size()) >= stop_at_) return;
    }
    branch(avail & ~here, chosen);
  }

  const Graph& g_;
  TriangleSet triangles_;
  std::vector<int> edge_id_;
  std::vector<std::pair<int, int>> ends_;
  std::vector<std::array<int, 3>> edges_of_;
  std::vector<TriangleSetBits> on_edge_;
  std::vector<TriangleSetBits> conflicts_;
  std::vector<int> best_;
  int root_bound_ = 0;
  int stop_at_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

namespace {

void require_budget(const Graph& g, std::size_t limit, const char* what) {
  const std::int64_t t = triangle_count(g);
  if (t > static_cast<std::int64_t>(limit)) {
    throw Error(ErrorKind::kUnsupportedSize,
                std::string(what) + " supports at most " + std::to_string(limit) +
                    " triangles, graph has " + std::to_string(t));
  }
}

PackingCertificate solve(const Graph& g, std::int64_t target) {
  const std::int64_t t = triangle_count(g);
  const bool exhaustive = t <= static_cast<std::int64_t>(kMaxPackingTriangles);
  if (t <= 256) return PackingSolver<256>(g).solve(target, exhaustive);
  return PackingSolver<kMaxCertifiedTriangles>(g).solve(target, exhaustive);
}

}  // namespace

TrianglePacking max_edge_disjoint_triangles(const Graph& g) {
  require_budget(g, kMaxPackingTriangles, "exact packing");
  return solve(g, std::numeric_limits<std::int64_t>::max()).packing;
}

PackingCertificate packing_at_least(const Graph& g, std::int64_t target) {
  require_budget(g, kMaxCertifiedTriangles, "packing certification");
  if (triangle_count(g) > static_cast<std::int64_t>(kMaxPackingTriangles)) {
    PackingCertificate cert = solve(g, target);
    if (cert.packing.size() < target) {
      throw Error(ErrorKind::kUnsupportedSize,
                  "no packing of size " + std::to_string(target) +
                      " found and exact search is limited to " +
                      std::to_string(kMaxPackingTriangles) + " triangles");
    }
    return cert;
  }
  return solve(g, target);
}

std::int64_t huang_shi_target(const PartitionStats& s) {
  return s.r == 0 ? 0 : (s.t + s.r - 1) / s.r;
}

std::int64_t theorem11_target(const Graph& g) {
  const std::int64_t n = g.order();
  return g.edge_count() - n * n / 4;
}

std::int64_t conjecture_te_target(const PartitionStats& s) {
  return s.e - s.r * (s.n - s.r);
}

bool is_valid_packing(const Graph& g, const TrianglePacking& packing) {
  std::vector<std::pair<int, int>> used;
  for (const Triangle& t : packing.triples) {
    if (!(t.a < t.b && t.b < t.c) || t.c >= g.order()) return false;
    if (!g.has_edge(t.a, t.b) || !g.has_edge(t.a, t.c) || !g.has_edge(t.b, t.c)) {
      return false;
    }
    used.insert(used.end(), {{t.a, t.b}, {t.a, t.c}, {t.b, t.c}});
  }
  std::sort(used.begin(), used.end());
  return std::adjacent_find(used.begin(), used.end()) == used.end();
}

VerificationReport check_huang_shi(const Graph& g, const CliquePartition& p,
                                   const PartitionStats& s, int packing_number) {
  VerificationReport r = report_skeleton("huang-shi", g, p, s);
  r.witness.emplace_back("packing", packing_number);
  r.lhs = static_cast<std::int64_t>(packing_number) * s.r;
  r.rhs = s.t;
  r.holds = r.lhs >= r.rhs;
  return r;
}

VerificationReport check_huang_shi(const Graph& g, const CliquePartition& p) {
  if (!is_k4_free(g)) throw Error(ErrorKind::kNotK4Free, "huang-shi needs K4-free");
  const PartitionStats s = partition_stats(g, p);
  const auto cert = packing_at_least(g, huang_shi_target(s));
  return check_huang_shi(g, p, s, static_cast<int>(cert.packing.size()));
}

VerificationReport check_theorem11(const Graph& g, int packing_number) {
  const std::int64_t n = g.order();
  const std::int64_t e = g.edge_count();
  const std::int64_t m = e - n * n / 4;
  VerificationReport r;
  r.check = "theorem11";
  r.graph6 = encode_graph6(g);
  r.witness = {{"n", n}, {"e", e}, {"t", triangle_count(g)},
               {"packing", packing_number}, {"m", m}};
  r.lhs = packing_number;
  r.rhs = m;
  r.holds = m <= 0 || packing_number >= m;
  return r;
}

VerificationReport check_theorem11(const Graph& g) {
  if (!is_k4_free(g)) throw Error(ErrorKind::kNotK4Free, "theorem11 needs K4-free");
  const auto cert = packing_at_least(g, theorem11_target(g));
  return check_theorem11(g, static_cast<int>(cert.packing.size()));
}

VerificationReport check_conjecture_te(const Graph& g, const CliquePartition& p,
                                       const PartitionStats& s, int packing_number) {
  VerificationReport r = report_skeleton("conjecture-te", g, p, s);
  r.witness.emplace_back("packing", packing_number);
  r.lhs = packing_number;
  r.rhs = static_cast<std::int64_t>(s.e) - static_cast<std::int64_t>(s.r) * (s.n - s.r);
  r.holds = r.lhs >= r.rhs;
  return r;
}

VerificationReport check_conjecture_te(const Graph& g, const CliquePartition& p) {
  if (!is_k4_free(g)) throw Error(ErrorKind::kNotK4Free, "conjecture-te needs K4-free");
  const PartitionStats s = partition_stats(g, p);
  const auto cert = packing_at_least(g, conjecture_te_target(s));
  return check_conjecture_te(g, p, s, static_cast<int>(cert.packing.size()));
}

std::int64_t packing_target(Check check, const Graph& g, const PartitionStats& s) {
  switch (check) {
    case Check::kHuangShi: return huang_shi_target(s);
    case Check::kTheorem11: return theorem11_target(g);
    case Check::kConjectureTe: return conjecture_te_target(s);
    default: break;
  }
  throw Error(ErrorKind::kInvalidArgument,
              std::string(to_string(check)) + " does not use a triangle packing");
}

VerificationReport run_packing_check(Check check, const Graph& g, const CliquePartition& p,
                                     const PartitionStats& s, int packing_number) {
  switch (check) {
    case Check::kHuangShi: return check_huang_shi(g, p, s, packing_number);
    case Check::kTheorem11: return check_theorem11(g, packing_number);
    case Check::kConjectureTe: return check_conjecture_te(g, p, s, packing_number);
    default: break;
  }
  throw Error(ErrorKind::kInvalidArgument,
              std::string(to_string(check)) + " does not use a triangle packing");
}

}  // namespace k4tri
