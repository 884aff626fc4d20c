#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace k4tri {

using VertexMask = std::uint64_t;

/// Undirected simple graph on at most 64 vertices. Row v holds the
/// neighbourhood of v as a bitmask; rows are kept symmetric, loop-free and
/// clear above bit n-1.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);
  Graph(int n, std::span<const std::pair<int, int>> edges);

  int order() const noexcept { return n_; }
  int edge_count() const noexcept;
  int degree(int v) const noexcept;

  VertexMask row(int v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }
  std::span<const VertexMask> rows() const noexcept {
    return {adj_.data(), static_cast<std::size_t>(n_)};
  }
  VertexMask vertex_mask() const noexcept;

  bool has_edge(int u, int v) const noexcept { return (row(u) >> v) & 1U; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  std::vector<std::pair<int, int>> edges() const;

  /// Relabels vertex v to perm[v].
  Graph permuted(std::span<const int> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) noexcept;

 private:
  void check_pair(int u, int v) const;

  int n_ = 0;
  std::array<VertexMask, kMaxVertices> adj_{};
};

struct Triangle {
  int a, b, c;  // a < b < c
  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

/// Sorted, duplicate-free triangle list.
using TriangleSet = std::vector<Triangle>;

inline VertexMask bit(int v) noexcept { return VertexMask{1} << v; }

/// Mask of vertices strictly greater than v.
inline VertexMask above(int v) noexcept {
  return v >= 63 ? VertexMask{0} : ~VertexMask{0} << (v + 1);
}

std::int64_t triangle_count(const Graph& g);
TriangleSet triangle_list(const Graph& g);

/// Triangles through each vertex.
std::vector<int> vertex_triangle_counts(const Graph& g);

/// True iff g has no clique on k vertices. Throws kInvalidArgument for k < 2.
bool is_kk_free(const Graph& g, int k);

/// True iff the subgraph induced on `within` contains a k-clique.
bool contains_clique(const Graph& g, VertexMask within, int k);

/// Fast path for the common k = 4 case.
bool is_k4_free(const Graph& g) noexcept;

/// Vertices of `vertices` renumbered 0..|s|-1 in increasing original order.
Graph induced_subgraph(const Graph& g, VertexMask vertices);
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

Graph complete_graph(int n);
Graph complete_multipartite(std::span<const int> part_sizes);

}  // namespace k4tri
