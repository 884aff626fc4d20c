#include "k4tri/atlas.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "k4tri/error.hpp"

namespace k4tri {

namespace {

struct BaseData {
  std::array<std::string_view, 3> parts;  // T1, T2, T3
  std::vector<std::string_view> cross;    // non-clique edges
  std::vector<std::string_view> triangles;
  std::array<int, 3> cross_counts;  // (T1,T2), (T2,T3), (T1,T3)
  int v, e, t;
};

const BaseData& data(BaseGraphId id) {
  static const BaseData f1{
      {"abc", "def", "ghi"},
      {"ae", "af", "bd", "ce", "dh", "eg", "fg", "fi", "ah", "bg", "bi", "ch", "ci"},
      {"abc", "ace", "ach", "aef", "bci", "bgi", "chi", "def", "efg", "fgi", "ghi"},
      {4, 4, 5},
      9, 22, 11};
  static const BaseData f2{
      {"abc", "def", "ghi"},
      {"ad", "af", "bf", "cd", "ce", "dg", "di", "eg", "eh", "fi", "ah", "bg", "bh", "ci"},
      {"abc", "abf", "abh", "acd", "adf", "bgh", "cde", "cdi", "def", "deg", "dfi",
       "dgi", "egh", "ghi"},
      {5, 5, 4},
      9, 23, 14};
  static const BaseData f3{
      {"abc", "def", "ghi"},
      {"ad", "af", "bf", "cd", "ce", "dg", "di", "eg", "eh", "fi", "ah", "bg", "bh"},
      {"abc", "abf", "abh", "acd", "adf", "bgh", "cde", "def", "deg", "dfi", "dgi",
       "egh", "ghi"},
      {5, 5, 3},
      9, 22, 13};
  static const BaseData f4{
      {"abc", "de", "fgh"},
      {"ad", "ae", "cd", "df", "ef", "eh", "ag", "bf", "bh", "cg", "ch"},
      {"abc", "acd", "acg", "ade", "bch", "bfh", "cgh", "def", "efh", "fgh"},
      {3, 3, 5},
      8, 18, 10};
  switch (id) {
    case BaseGraphId::kF1: return f1;
    case BaseGraphId::kF2: return f2;
    case BaseGraphId::kF3: return f3;
    case BaseGraphId::kF4: return f4;
  }
  throw std::logic_error("unknown base graph id");
}

int label_index(char label) { return label - 'a'; }

std::int64_t discrepancy(BaseGraphId id, std::int64_t k1, std::int64_t k2,
                         std::int64_t k3) {
  switch (id) {
    case BaseGraphId::kF1:
    case BaseGraphId::kF2: return k1 * k2 * k3;
    case BaseGraphId::kF3: return k1 * k3 * (k2 - k1 - k3);
    case BaseGraphId::kF4: return k2 * (k1 * k3 - k1 * k2 - k2 * k3);
  }
  throw std::logic_error("unknown base graph id");
}

}  // namespace

std::string_view to_string(BaseGraphId id) noexcept {
  switch (id) {
    case BaseGraphId::kF1: return "F1";
    case BaseGraphId::kF2: return "F2";
    case BaseGraphId::kF3: return "F3";
    case BaseGraphId::kF4: return "F4";
  }
  return "?";
}

std::optional<BaseGraphId> parse_base_graph_id(std::string_view name) {
  for (BaseGraphId id : kBaseGraphIds) {
    if (name == to_string(id)) return id;
  }
  if (name.size() == 2 && name[0] == 'f') {
    const char upper[] = {'F', name[1], '\0'};
    return parse_base_graph_id(upper);
  }
  return std::nullopt;
}

AtlasEntry base_graph(BaseGraphId id) { return blow_up({id, {1, 1, 1}}); }

AtlasEntry blow_up(const BlowUpSpec& spec) {
  const BaseData& d = data(spec.base);
  int n = 0;
  for (int j = 0; j < 3; ++j) {
    if (spec.k[j] < 1) {
      throw Error(ErrorKind::kInvalidArgument, "blow-up multiplicities must be >= 1");
    }
    n += spec.k[j] * static_cast<int>(d.parts[j].size());
    if (n > Graph::kMaxVertices) {
      throw Error(ErrorKind::kUnsupportedSize, "blow-up exceeds 64 vertices");
    }
  }
  const bool plain = spec.k == std::array<int, 3>{1, 1, 1};

  // copies[label] lists the new vertices standing for that base vertex.
  std::array<std::vector<int>, 26> copies;
  std::array<int, 26> part_of{};
  AtlasEntry out{spec, Graph(n), {}, {}};
  std::vector<VertexMask> ordered_parts;
  int next = 0;
  for (int j = 0; j < 3; ++j) {
    for (int c = 0; c < spec.k[j]; ++c) {
      VertexMask part = 0;
      for (char label : d.parts[j]) {
        copies[label_index(label)].push_back(next);
        part_of[label_index(label)] = j;
        out.labels.push_back(plain ? std::string(1, label)
                                   : std::string(1, label) + std::to_string(c + 1));
        part |= bit(next++);
      }
      ordered_parts.push_back(part);
    }
  }

  auto join = [&](char x, char y) {
    for (int u : copies[label_index(x)]) {
      for (int v : copies[label_index(y)]) out.graph.add_edge(u, v);
    }
  };
  for (std::string_view part : d.parts) {
    for (std::size_t i = 0; i < part.size(); ++i) {
      for (std::size_t k = i + 1; k < part.size(); ++k) join(part[i], part[k]);
    }
  }
  for (std::string_view edge : d.cross) join(edge[0], edge[1]);

  std::stable_sort(ordered_parts.begin(), ordered_parts.end(),
                   [](VertexMask x, VertexMask y) {
                     return std::popcount(x) > std::popcount(y);
                   });
  out.partition.parts = std::move(ordered_parts);
  return out;
}

ClosedFormStats closed_form_stats(const BlowUpSpec& spec) {
  const std::int64_t k1 = spec.k[0], k2 = spec.k[1], k3 = spec.k[2];
  const std::int64_t sq = k1 * k1 + k2 * k2 + k3 * k3;
  const std::int64_t cube = k1 * k1 * k1 + k2 * k2 * k2 + k3 * k3 * k3;
  ClosedFormStats s;
  s.r = k1 + k2 + k3;
  switch (spec.base) {
    case BaseGraphId::kF1:
      s.v = 3 * (k1 + k2 + k3);
      s.e = 3 * sq + 4 * k1 * k2 + 5 * k1 * k3 + 4 * k2 * k3;
      s.t = cube + k1 * k1 * k2 + 2 * k1 * k1 * k3 + k2 * k2 * k1 + k2 * k2 * k3 +
            2 * k3 * k3 * k1 + k3 * k3 * k2;
      break;
    case BaseGraphId::kF2:
      s.v = 3 * (k1 + k2 + k3);
      s.e = 3 * sq + 5 * k1 * k2 + 4 * k1 * k3 + 5 * k2 * k3;
      s.t = cube + 2 * k1 * k1 * k2 + k1 * k1 * k3 + 2 * k2 * k2 * k1 +
            2 * k2 * k2 * k3 + k3 * k3 * k1 + 2 * k3 * k3 * k2 + k1 * k2 * k3;
      break;
    case BaseGraphId::kF3:
      s.v = 3 * (k1 + k2 + k3);
      s.e = 3 * sq + 5 * k1 * k2 + 3 * k1 * k3 + 5 * k2 * k3;
      s.t = cube + 2 * k1 * k1 * k2 + k1 * k1 * k3 + 2 * k2 * k2 * k1 +
            2 * k2 * k2 * k3 + k3 * k3 * k1 + 2 * k3 * k3 * k2;
      break;
    case BaseGraphId::kF4:
      s.v = 3 * k1 + 2 * k2 + 3 * k3;
      s.e = 3 * k1 * k1 + k2 * k2 + 3 * k3 * k3 + 3 * k1 * k2 + 5 * k1 * k3 +
            3 * k2 * k3;
      s.t = k1 * k1 * k1 + k3 * k3 * k3 + k1 * k1 * k2 + 2 * k1 * k1 * k3 +
            k2 * k2 * k1 + k2 * k2 * k3 + 2 * k3 * k3 * k1 + k3 * k3 * k2;
      break;
  }
  s.g = discrepancy(spec.base, k1, k2, k3);
  return s;
}

std::vector<BlowUpSpec> counterexample_stream(BaseGraphId id, std::int64_t g_min,
                                              std::size_t limit) {
  std::vector<BlowUpSpec> out;
  const BaseData& d = data(id);
  const std::array<int, 3> width = {static_cast<int>(d.parts[0].size()),
                                    static_cast<int>(d.parts[1].size()),
                                    static_cast<int>(d.parts[2].size())};
  for (int n = 1; n <= Graph::kMaxVertices && out.size() < limit; ++n) {
    for (int k1 = 1; width[0] * k1 < n && out.size() < limit; ++k1) {
      for (int k2 = 1; width[0] * k1 + width[1] * k2 < n && out.size() < limit; ++k2) {
        const int rest = n - width[0] * k1 - width[1] * k2;
        if (rest % width[2] != 0) continue;
        const BlowUpSpec spec{id, {k1, k2, rest / width[2]}};
        if (closed_form_stats(spec).g < g_min) continue;
        const AtlasEntry entry = blow_up(spec);
        const std::int64_t direct =
            conjectured_bound(entry.graph.order(), entry.graph.edge_count(),
                              entry.partition.size()) -
            triangle_count(entry.graph);
        if (direct != closed_form_stats(spec).g) {
          throw std::logic_error("closed-form discrepancy disagrees with direct count");
        }
        out.push_back(spec);
      }
    }
  }
  return out;
}

std::vector<std::string> reference_triangles(BaseGraphId id) {
  const auto& tri = data(id).triangles;
  return {tri.begin(), tri.end()};
}

std::array<int, 3> reference_cross_edge_counts(BaseGraphId id) {
  return data(id).cross_counts;
}

std::vector<std::string> validate_base_graph(BaseGraphId id) {
  const BaseData& d = data(id);
  const AtlasEntry entry = base_graph(id);
  const Graph& g = entry.graph;
  std::vector<std::string> failures;
  const std::string name(to_string(id));

  if (!is_k4_free(g)) failures.push_back(name + ": contains K4");

  auto part_mask = [&](int j) {
    VertexMask m = 0;
    for (char label : d.parts[j]) m |= bit(label_index(label));
    return m;
  };
  const std::array<std::pair<int, int>, 3> pairs = {{{0, 1}, {1, 2}, {0, 2}}};
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const VertexMask x = part_mask(pairs[p].first), y = part_mask(pairs[p].second);
    int count = 0;
    for (VertexMask m = x; m; m &= m - 1) {
      count += std::popcount(g.row(std::countr_zero(m)) & y);
    }
    if (count != d.cross_counts[p]) {
      failures.push_back(name + ": cross edge count " + std::to_string(count) +
                         " between T" + std::to_string(pairs[p].first + 1) + " and T" +
                         std::to_string(pairs[p].second + 1) + ", expected " +
                         std::to_string(d.cross_counts[p]));
    }
  }

  std::vector<std::string> found;
  for (const Triangle& t : triangle_list(g)) {
    std::string s = entry.labels[t.a] + entry.labels[t.b] + entry.labels[t.c];
    std::sort(s.begin(), s.end());
    found.push_back(s);
  }
  std::sort(found.begin(), found.end());
  std::vector<std::string> expected = reference_triangles(id);
  std::sort(expected.begin(), expected.end());
  if (found != expected) failures.push_back(name + ": triangle list differs");

  if (g.order() != d.v || g.edge_count() != d.e ||
      triangle_count(g) != static_cast<std::int64_t>(d.t)) {
    failures.push_back(name + ": (v, e, t) mismatch");
  }
  if (!verify_greedy(g, entry.partition)) {
    failures.push_back(name + ": partition is not greedy");
  }
  return failures;
}

}  // namespace k4tri
