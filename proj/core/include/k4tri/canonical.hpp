#pragma once

#include <compare>
#include <string>
#include <vector>

#include "k4tri/graph.hpp"

namespace k4tri {

/// Largest order accepted by the exhaustive canonical labeller.
inline constexpr int kMaxCanonicalOrder = 16;

/// graph6 text of the canonically relabelled graph. Two graphs share a
/// CanonicalForm iff they are isomorphic.
struct CanonicalForm {
  std::string bytes;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// perm[p] is the original vertex placed at canonical position p.
std::vector<int> canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

/// Graph relabelled so that vertex p is original vertex labeling[p].
Graph relabel_to(const Graph& g, const std::vector<int>& labeling);

/// Rejects on (order, size, degree multiset, triangle count) before
/// comparing canonical forms.
bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace k4tri
