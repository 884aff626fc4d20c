#include "k4tri/graph.hpp"

#include <bit>
#include <string>

#include "k4tri/error.hpp"

namespace k4tri {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kUnsupportedSize: return "unsupported-size";
    case ErrorKind::kParseError: return "parse-error";
    case ErrorKind::kNotK4Free: return "not-k4-free";
    case ErrorKind::kInvalidPartition: return "invalid-partition";
  }
  return "unknown";
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(ErrorKind::kUnsupportedSize,
                "graph order " + std::to_string(n) + " outside [0, 64]");
  }
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

int Graph::edge_count() const noexcept {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

int Graph::degree(int v) const noexcept { return std::popcount(row(v)); }

VertexMask Graph::vertex_mask() const noexcept {
  return n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
}

void Graph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
    throw Error(ErrorKind::kInvalidArgument,
                "bad edge {" + std::to_string(u) + "," + std::to_string(v) +
                    "} for graph of order " + std::to_string(n_));
  }
}

void Graph::add_edge(int u, int v) {
  check_pair(u, v);
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_pair(u, v);
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (VertexMask m = adj_[u] & above(u); m; m &= m - 1) {
      out.emplace_back(u, std::countr_zero(m));
    }
  }
  return out;
}

Graph Graph::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw Error(ErrorKind::kInvalidArgument, "permutation length mismatch");
  }
  Graph out(n_);
  for (auto [u, v] : edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

bool operator==(const Graph& a, const Graph& b) noexcept {
  if (a.n_ != b.n_) return false;
  for (int v = 0; v < a.n_; ++v) {
    if (a.adj_[v] != b.adj_[v]) return false;
  }
  return true;
}

std::int64_t triangle_count(const Graph& g) {
  std::int64_t total = 0;
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (VertexMask m = g.row(u) & above(u); m; m &= m - 1) {
      const int v = std::countr_zero(m);
      total += std::popcount(g.row(u) & g.row(v) & above(v));
    }
  }
  return total;
}

TriangleSet triangle_list(const Graph& g) {
  TriangleSet out;
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (VertexMask m = g.row(u) & above(u); m; m &= m - 1) {
      const int v = std::countr_zero(m);
      for (VertexMask w = g.row(u) & g.row(v) & above(v); w; w &= w - 1) {
        out.push_back({u, v, std::countr_zero(w)});
      }
    }
  }
  return out;
}

std::vector<int> vertex_triangle_counts(const Graph& g) {
  std::vector<int> out(static_cast<std::size_t>(g.order()), 0);
  for (const auto& t : triangle_list(g)) {
    ++out[t.a];
    ++out[t.b];
    ++out[t.c];
  }
  return out;
}

namespace {

// Does `candidates` contain a clique of size `need`?
bool has_clique(const Graph& g, VertexMask candidates, int need) {
  if (need <= 0) return true;
  if (std::popcount(candidates) < need) return false;
  if (need == 1) return candidates != 0;
  while (candidates) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    if (has_clique(g, candidates & g.row(v), need - 1)) return true;
  }
  return false;
}

}  // namespace

bool is_kk_free(const Graph& g, int k) {
  if (k < 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "clique size must be at least 2, got " + std::to_string(k));
  }
  if (k == 4) return is_k4_free(g);
  return !has_clique(g, g.vertex_mask(), k);
}

bool contains_clique(const Graph& g, VertexMask within, int k) {
  return has_clique(g, within & g.vertex_mask(), k);
}

bool is_k4_free(const Graph& g) noexcept {
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (VertexMask m = g.row(u) & above(u); m; m &= m - 1) {
      const int v = std::countr_zero(m);
      const VertexMask common = g.row(u) & g.row(v) & above(v);
      for (VertexMask w = common; w; w &= w - 1) {
        if (g.row(std::countr_zero(w)) & common) return false;
      }
    }
  }
  return true;
}

Graph induced_subgraph(const Graph& g, VertexMask vertices) {
  if (vertices & ~g.vertex_mask()) {
    throw Error(ErrorKind::kInvalidArgument,
                "vertex set contains a vertex outside the graph");
  }
  std::array<int, Graph::kMaxVertices> index{};
  std::vector<int> members;
  for (VertexMask m = vertices; m; m &= m - 1) {
    const int v = std::countr_zero(m);
    index[v] = static_cast<int>(members.size());
    members.push_back(v);
  }
  Graph out(static_cast<int>(members.size()));
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (VertexMask m = g.row(members[i]) & vertices & above(members[i]); m;
         m &= m - 1) {
      out.add_edge(static_cast<int>(i), index[std::countr_zero(m)]);
    }
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  VertexMask mask = 0;
  for (int v : vertices) {
    if (v < 0 || v >= g.order()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "vertex " + std::to_string(v) + " not in graph of order " +
                      std::to_string(g.order()));
    }
    mask |= bit(v);
  }
  return induced_subgraph(g, mask);
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph complete_multipartite(std::span<const int> part_sizes) {
  int n = 0;
  std::vector<int> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    if (part_sizes[p] < 0) {
      throw Error(ErrorKind::kInvalidArgument, "negative part size");
    }
    n += part_sizes[p];
    part_of.insert(part_of.end(), static_cast<std::size_t>(part_sizes[p]),
                   static_cast<int>(p));
  }
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace k4tri
