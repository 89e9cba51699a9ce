#pragma once

// Krull dimension of S / L_T(2) for a tree T, computed as
//   max over V of |V| + c(T[V])
// by exhaustive search, by a tree DP, through the pendant decomposition, and
// from the Stanley–Reisner complex.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "lss/errors.hpp"
#include "lss/srcomplex.hpp"
#include "lss/treekit.hpp"

namespace lss {

inline constexpr int kDefaultSubsetCap = 22;

struct SubsetMax {
  int value = 0;
  VertexSet witness;
};

/// Exhaustive maximum of |V| + c(T[V]); ties go to the lexicographically
/// least sorted vertex list.
inline SubsetMax dim_subset_max(const LabeledTree& t, int cap = kDefaultSubsetCap) {
  using Mask = std::uint64_t;
  const int n = t.size();
  if (n > cap || n > 62)
    throw ResourceError("exhaustive subset search refused: n = " + std::to_string(n) + " exceeds cap " +
                        std::to_string(cap) + "; use dim_subset_dp");
  // bits of the neighbors of each vertex that carry a smaller label
  std::vector<Mask> lower_nbrs(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : t.edges()) lower_nbrs[static_cast<std::size_t>(v - 1)] |= Mask{1} << (u - 1);

  // true iff the sorted list of a precedes that of b
  auto lex_less = [](Mask a, Mask b) {
    const Mask diff = a ^ b;
    if (diff == 0) return false;
    const int k = std::countr_zero(diff);
    return (a >> k & 1U) ? (b >> k) != 0 : (a >> k) == 0;
  };

  int best = -1;
  Mask best_mask = 0;
  const Mask end = Mask{1} << n;
  for (Mask m = 0; m < end; ++m) {
    int inside_edges = 0;
    for (Mask rest = m; rest != 0; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      inside_edges += std::popcount(lower_nbrs[static_cast<std::size_t>(i)] & m);
    }
    // forest: components = vertices - edges
    const int value = 2 * std::popcount(m) - inside_edges;
    if (value > best || (value == best && lex_less(m, best_mask))) {
      best = value;
      best_mask = m;
    }
  }
  return {best, detail::from_mask(best_mask)};
}

/// Same objective by a rooted DP with three states per vertex: excluded,
/// included with its component counted at this vertex, included with the
/// component counted higher up.
inline int dim_subset_dp(const LabeledTree& t) {
  const int n = t.size();
  std::vector<Vertex> order{1};
  std::vector<Vertex> parent(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex w : t.neighbors(order[i]))
      if (w != parent[static_cast<std::size_t>(order[i])]) {
        parent[static_cast<std::size_t>(w)] = order[i];
        order.push_back(w);
      }
  std::vector<int> excluded(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> counted(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> uncounted(static_cast<std::size_t>(n) + 1, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto v = static_cast<std::size_t>(*it);
    int ex = 0;
    int un = 1;
    for (Vertex w : t.neighbors(*it)) {
      if (w == parent[v]) continue;
      const auto c = static_cast<std::size_t>(w);
      ex += std::max(excluded[c], counted[c]);
      un += std::max(excluded[c], uncounted[c]);
    }
    excluded[v] = ex;
    uncounted[v] = un;
    counted[v] = un + 1;
  }
  return std::max(excluded[1], counted[1]);
}

/// |P(T)| + |P*(T)| from the pendant decomposition.
inline int dim_pendant(const LabeledTree& t) {
  const PendantLayers layers = pendant_decomposition(t);
  return static_cast<int>(layers.path_vertices.size() + layers.path_count);
}

struct DimBounds {
  int lower = 0;
  int upper = 0;
};

/// n + 1 and p(T) + n - 1, where p(T) counts degree-one vertices.
inline DimBounds dim_bounds(const LabeledTree& t) {
  const int n = t.size();
  if (n == 1) return {2, 2};
  return {n + 1, t.pendant_count() + n - 1};
}

/// For each maximal pendant path, its endpoint with the larger label goes
/// into A; A' is every vertex on a pendant path. Requires an ascending labeling.
inline Face pendant_witness_face(const LabeledTree& t) {
  detail::require_ascending(t);
  const PendantLayers layers = pendant_decomposition(t);
  Face face;
  for (const auto& layer : layers.layers)
    for (const auto& p : layer.paths) face.A.push_back(std::max(p.front(), p.back()));
  std::sort(face.A.begin(), face.A.end());
  face.Aprime = layers.path_vertices;
  return face;
}

struct DimReport {
  std::optional<int> dim_complex;  // empty when the complex route was skipped
  int dim_subset_max = 0;
  bool subset_exhaustive = true;   // false: value from the DP, witness from P(T)
  int dim_dp = 0;
  int dim_pendant = 0;
  int lower_bound = 0;
  int upper_bound = 0;
  VertexSet witness_V;
  bool agree = false;

  int dim() const { return dim_complex.value_or(dim_subset_max); }
};

/// Runs every route feasible at this size. The complex route works on an
/// ascending relabeling when the input labeling is not ascending.
inline DimReport dim_report(const LabeledTree& t, int complex_cap = kDefaultComplexCap,
                            int subset_cap = kDefaultSubsetCap) {
  DimReport r;
  if (t.size() <= complex_cap && t.size() <= 30) {
    const LabeledTree asc = is_ascending(t) ? t : relabel(t, ascending_labeling(t));
    r.dim_complex = dim_from_complex(asc, complex_cap);
  }
  r.dim_dp = dim_subset_dp(t);
  if (t.size() <= subset_cap && t.size() <= 62) {
    auto sm = dim_subset_max(t, subset_cap);
    r.dim_subset_max = sm.value;
    r.witness_V = std::move(sm.witness);
  } else {
    r.subset_exhaustive = false;
    r.dim_subset_max = r.dim_dp;
    r.witness_V = pendant_decomposition(t).path_vertices;
  }
  r.dim_pendant = dim_pendant(t);
  const auto [lo, hi] = dim_bounds(t);
  r.lower_bound = lo;
  r.upper_bound = hi;
  const int d = r.dim_subset_max;
  r.agree = r.dim_dp == d && r.dim_pendant == d && (!r.dim_complex || *r.dim_complex == d) && lo <= d && d <= hi;
  return r;
}

inline nlohmann::json to_json(const DimReport& r) {
  return {{"dim", r.dim()},
          {"routes",
           {{"complex", r.dim_complex ? nlohmann::json(*r.dim_complex) : nlohmann::json(nullptr)},
            {"subset_max", r.dim_subset_max},
            {"pendant", r.dim_pendant}}},
          {"bounds", {r.lower_bound, r.upper_bound}},
          {"witness", r.witness_V},
          {"agree", r.agree}};
}

}  // namespace lss
