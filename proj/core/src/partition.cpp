#include "k4tri/partition.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <string>

#include "k4tri/atlas.hpp"
#include "k4tri/canonical.hpp"
#include "k4tri/error.hpp"

namespace k4tri {

int CliquePartition::part_order(int i) const {
  return std::popcount(parts.at(static_cast<std::size_t>(i)));
}

std::vector<std::vector<int>> CliquePartition::as_lists() const {
  std::vector<std::vector<int>> out;
  for (VertexMask part : parts) {
    auto& list = out.emplace_back();
    for (VertexMask m = part; m; m &= m - 1) list.push_back(std::countr_zero(m));
  }
  return out;
}

CliquePartition CliquePartition::from_lists(
    const std::vector<std::vector<int>>& lists) {
  CliquePartition p;
  for (const auto& list : lists) {
    VertexMask mask = 0;
    for (int v : list) {
      if (v < 0 || v >= Graph::kMaxVertices || (mask & bit(v))) {
        throw Error(ErrorKind::kInvalidPartition,
                    "bad vertex " + std::to_string(v) + " in partition part");
      }
      mask |= bit(v);
    }
    p.parts.push_back(mask);
  }
  return p;
}

std::int64_t PartitionStats::sum_pair_triangles() const {
  std::int64_t s = 0;
  for (const auto& p : pairs) s += p.triangles;
  return s;
}

std::int64_t PartitionStats::sum_triple_triangles() const {
  std::int64_t s = 0;
  for (const auto& t : triples) s += t.triangles;
  return s;
}

namespace {

bool is_clique(const Graph& g, VertexMask part) {
  for (VertexMask m = part; m; m &= m - 1) {
    const int v = std::countr_zero(m);
    if (((g.row(v) | bit(v)) & part) != part) return false;
  }
  return true;
}

int max_clique_size(const Graph& g, VertexMask within) {
  int k = within ? 1 : 0;
  while (contains_clique(g, within, k + 1)) ++k;
  return k;
}

// Calls visit(mask) for each k-clique inside `within`, in lexicographic
// order of the sorted vertex tuple. Stops early if visit returns false.
template <typename Visit>
bool for_each_clique(const Graph& g, VertexMask within, int k, VertexMask chosen,
                     Visit& visit) {
  if (k == 0) return visit(chosen);
  for (VertexMask m = within; m; m &= m - 1) {
    const int v = std::countr_zero(m);
    const VertexMask rest = within & g.row(v) & above(v);
    if (std::popcount(rest) < k - 1) continue;
    if (!for_each_clique(g, rest, k - 1, chosen | bit(v), visit)) return false;
  }
  return true;
}

void require_set_partition(const Graph& g, const CliquePartition& p) {
  VertexMask seen = 0;
  for (VertexMask part : p.parts) {
    if (part == 0) throw Error(ErrorKind::kInvalidPartition, "empty part");
    if (part & ~g.vertex_mask()) {
      throw Error(ErrorKind::kInvalidPartition, "part has a vertex outside the graph");
    }
    if (part & seen) throw Error(ErrorKind::kInvalidPartition, "parts overlap");
    seen |= part;
  }
  if (seen != g.vertex_mask()) {
    throw Error(ErrorKind::kInvalidPartition, "parts do not cover every vertex");
  }
}

void enumerate_from(const Graph& g, VertexMask remaining, int prev_size,
                    int prev_min, CliquePartition& current, std::size_t limit,
                    std::vector<CliquePartition>& out) {
  if (out.size() >= limit) return;
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  const int s = max_clique_size(g, remaining);
  auto visit = [&](VertexMask clique) {
    // Equal-size parts are listed by increasing smallest vertex so each set
    // partition is produced once.
    if (s == prev_size && std::countr_zero(clique) <= prev_min) return true;
    current.parts.push_back(clique);
    enumerate_from(g, remaining & ~clique, s, std::countr_zero(clique), current,
                   limit, out);
    current.parts.pop_back();
    return out.size() < limit;
  };
  for_each_clique(g, remaining, s, 0, visit);
}

}  // namespace

CliquePartition greedy_partition(const Graph& g) {
  if (!is_k4_free(g)) {
    throw Error(ErrorKind::kNotK4Free, "greedy partition requires a K4-free graph");
  }
  CliquePartition p;
  VertexMask remaining = g.vertex_mask();
  while (remaining) {
    const int s = max_clique_size(g, remaining);
    VertexMask pick = 0;
    auto first = [&](VertexMask clique) {
      pick = clique;
      return false;
    };
    for_each_clique(g, remaining, s, 0, first);
    p.parts.push_back(pick);
    remaining &= ~pick;
  }
  return p;
}

bool verify_greedy(const Graph& g, const CliquePartition& p) {
  require_set_partition(g, p);
  int largest = 0;
  for (int i = 0; i < p.size(); ++i) {
    if (!is_clique(g, p.parts[i])) return false;
    if (i > 0 && p.part_order(i) > p.part_order(i - 1)) return false;
    largest = std::max(largest, p.part_order(i));
  }
  for (int ell = 1; ell <= largest; ++ell) {
    VertexMask small = 0;
    for (VertexMask part : p.parts) {
      if (std::popcount(part) <= ell) small |= part;
    }
    if (contains_clique(g, small, ell + 1)) return false;
  }
  return true;
}

std::vector<CliquePartition> enumerate_greedy_partitions(const Graph& g,
                                                         std::size_t limit) {
  if (g.order() > 12) {
    throw Error(ErrorKind::kUnsupportedSize,
                "greedy partition enumeration supports at most 12 vertices");
  }
  std::vector<CliquePartition> out;
  CliquePartition current;
  enumerate_from(g, g.vertex_mask(), 0, -1, current, limit, out);
  return out;
}

std::int64_t m0_closed_form(std::int64_t n, std::int64_t e, std::int64_t r,
                            std::int64_t a) {
  return 2 * e - 2 * (n - r) * r + a * (r - 3);
}

std::int64_t f0_closed_form(std::int64_t n, std::int64_t e, std::int64_t r,
                            std::int64_t a) {
  // (r-2)(r-3) is a product of consecutive integers, hence even.
  return 3 * e * (r - 2) - 3 * (n - r) * r * (r - 2) +
         3 * a * ((r - 2) * (r - 3) / 2);
}

bool is_bad_configuration(const Graph& h) {
  struct Key {
    int n = 0;
    int e = 0;
    std::int64_t t = 0;
    CanonicalForm form;
  };
  static const std::array<Key, 4> keys = [] {
    std::array<Key, 4> out;
    for (std::size_t i = 0; i < kBaseGraphIds.size(); ++i) {
      const Graph f = base_graph(kBaseGraphIds[i]).graph;
      out[i] = {f.order(), f.edge_count(), triangle_count(f), canonical_form(f)};
    }
    return out;
  }();

  const int n = h.order();
  if (n != 8 && n != 9) return false;
  const int e = h.edge_count();
  std::int64_t t = -1;
  std::optional<CanonicalForm> form;
  for (const auto& key : keys) {
    if (key.n != n || key.e != e) continue;
    if (t < 0) t = triangle_count(h);
    if (key.t != t) continue;
    if (!form) form = canonical_form(h);
    if (*form == key.form) return true;
  }
  return false;
}

std::int64_t bad_triple_count(const Graph& g, const CliquePartition& p) {
  std::int64_t count = 0;
  const int r = p.size();
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      for (int k = j + 1; k < r; ++k) {
        const VertexMask u = p.parts[i] | p.parts[j] | p.parts[k];
        const int size = std::popcount(u);
        if (size != 8 && size != 9) continue;
        if (is_bad_configuration(induced_subgraph(g, u))) ++count;
      }
    }
  }
  return count;
}

PartitionStats partition_stats(const Graph& g, const CliquePartition& p) {
  if (!verify_greedy(g, p)) {
    throw Error(ErrorKind::kInvalidPartition, "partition is not greedy");
  }
  PartitionStats s;
  s.n = g.order();
  s.e = g.edge_count();
  s.r = p.size();
  const int r = s.r;
  const auto ur = static_cast<std::size_t>(r);

  std::array<int, Graph::kMaxVertices> part_of{};
  std::vector<int> size(ur);
  for (int i = 0; i < r; ++i) {
    size[i] = p.part_order(i);
    for (VertexMask m = p.parts[i]; m; m &= m - 1) part_of[std::countr_zero(m)] = i;
    if (size[i] == 3) ++s.a;
    if (size[i] == 2) ++s.b;
    if (size[i] == 1) ++s.c;
  }

  // Edges and triangles bucketed by the exact set of parts they touch.
  std::vector<int> inner_edges(ur, 0), inner_tri(ur, 0);
  std::vector<int> cross_edges(ur * ur, 0), cross_tri(ur * ur, 0);
  std::vector<int> span3_tri(ur * ur * ur, 0);
  for (auto [u, v] : g.edges()) {
    const std::size_t pu = part_of[u], pv = part_of[v];
    if (pu == pv) {
      ++inner_edges[pu];
    } else {
      ++cross_edges[std::min(pu, pv) * ur + std::max(pu, pv)];
    }
  }
  for (const Triangle& tri : triangle_list(g)) {
    std::array<std::size_t, 3> q = {static_cast<std::size_t>(part_of[tri.a]),
                                    static_cast<std::size_t>(part_of[tri.b]),
                                    static_cast<std::size_t>(part_of[tri.c])};
    std::sort(q.begin(), q.end());
    ++s.t;
    if (q[0] == q[2]) {
      ++inner_tri[q[0]];
      ++s.m1;
    } else if (q[0] == q[1] || q[1] == q[2]) {
      ++cross_tri[q[0] * ur + q[2]];
      ++s.m2;
    } else {
      ++span3_tri[(q[0] * ur + q[1]) * ur + q[2]];
      ++s.m3;
    }
  }

  for (std::size_t i = 0; i < ur; ++i) {
    for (std::size_t j = i + 1; j < ur; ++j) {
      const int e_ij = inner_edges[i] + inner_edges[j] + cross_edges[i * ur + j];
      const int t_ij = inner_tri[i] + inner_tri[j] + cross_tri[i * ur + j];
      s.pairs.push_back({static_cast<int>(i), static_cast<int>(j), e_ij, t_ij});
      s.m0 += 2 * (e_ij - 2 * (size[i] + size[j] - 2));
    }
  }
  s.m0 -= static_cast<std::int64_t>(s.a) * (r - 1);

  for (std::size_t i = 0; i < ur; ++i) {
    for (std::size_t j = i + 1; j < ur; ++j) {
      for (std::size_t k = j + 1; k < ur; ++k) {
        const int e_ijk = inner_edges[i] + inner_edges[j] + inner_edges[k] +
                          cross_edges[i * ur + j] + cross_edges[i * ur + k] +
                          cross_edges[j * ur + k];
        const int t_ijk = inner_tri[i] + inner_tri[j] + inner_tri[k] +
                          cross_tri[i * ur + j] + cross_tri[i * ur + k] +
                          cross_tri[j * ur + k] + span3_tri[(i * ur + j) * ur + k];
        s.triples.push_back({static_cast<int>(i), static_cast<int>(j),
                             static_cast<int>(k), e_ijk, t_ijk});
        s.f0 += 3 * (e_ijk - 3 * (size[i] + size[j] + size[k] - 3));
      }
    }
  }

  s.omega = bad_triple_count(g, p);
  s.g = conjectured_bound(s.n, s.e, s.r) - s.t;
  return s;
}

}  // namespace k4tri
