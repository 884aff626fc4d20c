#include "k4tri/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "k4tri/error.hpp"
#include "k4tri/graph6.hpp"

namespace k4tri {

namespace {

// Colour refinement seeded with (degree, triangles at v). Colours are dense
// ranks of sorted signatures, so the final colouring and its order are
// invariant under relabelling.
std::vector<int> refined_colours(const Graph& g) {
  const int n = g.order();
  const std::vector<int> tri = vertex_triangle_counts(g);
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) sig[v] = {g.degree(v), tri[v]};

  std::vector<int> colour(static_cast<std::size_t>(n));
  int classes = 0;
  for (;;) {
    std::map<std::vector<int>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int next = 0;
    for (auto& [key, r] : rank) r = next++;
    for (int v = 0; v < n; ++v) colour[v] = rank[sig[v]];
    if (next == classes) break;
    classes = next;
    for (int v = 0; v < n; ++v) {
      std::vector<int> around;
      for (VertexMask m = g.row(v); m; m &= m - 1) {
        around.push_back(colour[std::countr_zero(m)]);
      }
      std::sort(around.begin(), around.end());
      sig[v].clear();
      sig[v].push_back(colour[v]);
      sig[v].insert(sig[v].end(), around.begin(), around.end());
    }
  }
  return colour;
}

class Labeller {
 public:
  explicit Labeller(const Graph& g) : g_(g), n_(g.order()) {
    const std::vector<int> colour = refined_colours(g);
    std::vector<int> order(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return colour[a] < colour[b]; });
    slot_colour_.resize(static_cast<std::size_t>(n_));
    for (int p = 0; p < n_; ++p) slot_colour_[p] = colour[order[p]];
    colour_ = colour;

    // Twins (equal open or closed neighbourhoods) are swapped by an
    // automorphism fixing everything else, so only the first unused one of
    // each class needs to be tried at a given slot.
    twin_rep_.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      twin_rep_[v] = v;
      for (int u = 0; u < v; ++u) {
        const bool open = (g.row(u) & ~bit(v)) == (g.row(v) & ~bit(u)) &&
                          !g.has_edge(u, v);
        const bool closed = (g.row(u) | bit(u)) == (g.row(v) | bit(v));
        if (open || closed) {
          twin_rep_[v] = twin_rep_[u];
          break;
        }
      }
    }
    current_.resize(static_cast<std::size_t>(n_));
    best_.resize(static_cast<std::size_t>(n_));
    columns_.resize(static_cast<std::size_t>(n_));
    best_columns_.resize(static_cast<std::size_t>(n_));
  }

  std::vector<int> run() {
    if (n_ > 0) search(0, 0, false);
    return best_;
  }

 private:
  // Column p of the upper-triangular adjacency: bit q (q < p) set iff the
  // vertices at slots q and p are adjacent.
  VertexMask column(int p, int v) const {
    VertexMask col = 0;
    for (int q = 0; q < p; ++q) {
      if (g_.has_edge(current_[q], v)) col |= bit(q);
    }
    return col;
  }

  // Lexicographic order on columns read from slot 0 upward, 1 > 0.
  static int compare(VertexMask a, VertexMask b) {
    if (a == b) return 0;
    const VertexMask diff = a ^ b;
    return (a & diff & (~diff + 1)) ? 1 : -1;
  }

  void search(int p, VertexMask used, bool ahead) {
    if (p == n_) {
      if (ahead || !have_best_) {
        best_ = current_;
        best_columns_ = columns_;
        have_best_ = true;
      }
      return;
    }
    VertexMask tried_reps = 0;
    for (int v = 0; v < n_; ++v) {
      if ((used & bit(v)) || colour_[v] != slot_colour_[p]) continue;
      if (tried_reps & bit(twin_rep_[v])) continue;
      tried_reps |= bit(twin_rep_[v]);

      const VertexMask col = column(p, v);
      bool next_ahead = ahead;
      if (have_best_ && !ahead) {
        const int c = compare(col, best_columns_[p]);
        if (c < 0) continue;
        next_ahead = c > 0;
      }
      current_[p] = v;
      columns_[p] = col;
      search(p + 1, used | bit(v), next_ahead);
      // A new best may have been recorded below; later siblings are now
      // compared against it.
      if (next_ahead && have_best_) ahead = false;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> colour_;
  std::vector<int> slot_colour_;
  std::vector<int> twin_rep_;
  std::vector<int> current_;
  std::vector<int> best_;
  std::vector<VertexMask> columns_;
  std::vector<VertexMask> best_columns_;
  bool have_best_ = false;
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw Error(ErrorKind::kUnsupportedSize,
                "canonical form supports at most " +
                    std::to_string(kMaxCanonicalOrder) + " vertices, got " +
                    std::to_string(g.order()));
  }
  return Labeller(g).run();
}

Graph relabel_to(const Graph& g, const std::vector<int>& labeling) {
  const int n = g.order();
  Graph out(n);
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      if (g.has_edge(labeling[p], labeling[q])) out.add_edge(p, q);
    }
  }
  return out;
}

CanonicalForm canonical_form(const Graph& g) {
  return {encode_graph6(relabel_to(g, canonical_labeling(g)))};
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> dg, dh;
  for (int v = 0; v < g.order(); ++v) {
    dg.push_back(g.degree(v));
    dh.push_back(h.degree(v));
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  if (triangle_count(g) != triangle_count(h)) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace k4tri
