#pragma once

// Stanley–Reisner complex of the initial ideal of the edge-generator ideal
// under an ascending labeling. A face is a pair (A, A') of vertex sets naming
// the variables {x_a : a in A} and {y_b : b in A'}.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "lss/errors.hpp"
#include "lss/lssbasis.hpp"
#include "lss/polyengine.hpp"
#include "lss/treekit.hpp"

namespace lss {

inline constexpr int kDefaultComplexCap = 12;

struct Face {
  VertexSet A;
  VertexSet Aprime;
};

/// Vertex sets whose y-variables may not all lie in A' once A is fixed.
struct PathFamily {
  std::vector<TreePath> edges_part;
  std::vector<TreePath> paths_part;
};

/// counts[i] = f_{i-1}, so counts[0] = 1 for the empty face.
struct FVector {
  std::vector<std::uint64_t> counts;
  /// Largest face size, i.e. dimension of the complex plus one.
  int d = 0;

  std::uint64_t f(int i) const { return counts.at(static_cast<std::size_t>(i + 1)); }
  /// Number of faces (A, A') with |A| + |A'| = i.
  std::uint64_t delta(int i) const {
    return i < 0 || static_cast<std::size_t>(i) >= counts.size() ? 0 : counts[static_cast<std::size_t>(i)];
  }
  std::uint64_t total() const {
    std::uint64_t s = 0;
    for (auto c : counts) s += c;
    return s;
  }
};

/// numerator(t) / (1 - t)^denominator_power, numerator ascending in t.
struct HilbertSeries {
  std::vector<std::int64_t> numerator;
  int denominator_power = 0;
  bool normalized = false;
};

namespace detail {

using Mask = std::uint64_t;

inline Mask bit(Vertex v) { return Mask{1} << (v - 1); }

inline Mask to_mask(const LabeledTree& t, const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s) {
    if (!t.contains(v)) throw BadVertex("vertex " + std::to_string(v) + " out of range");
    m |= bit(v);
  }
  return m;
}

inline VertexSet from_mask(Mask m) {
  VertexSet s;
  for (Vertex v = 1; m != 0; ++v, m >>= 1)
    if (m & 1U) s.push_back(v);
  return s;
}

/// x- and y-supports of a square-free monomial in 2n variables.
struct Support {
  Mask x = 0;
  Mask y = 0;
};

inline std::vector<Support> supports(const MonomialIdealGens& gens, int n) {
  std::vector<Support> out;
  for (const auto& m : gens.gens) {
    if (m.size() != 2 * static_cast<std::size_t>(n)) throw DimensionError("generator has the wrong number of variables");
    Support s;
    for (int i = 0; i < n; ++i) {
      if (m[static_cast<std::size_t>(i)] != 0) s.x |= Mask{1} << i;
      if (m[static_cast<std::size_t>(n + i)] != 0) s.y |= Mask{1} << i;
    }
    out.push_back(s);
  }
  return out;
}

inline void require_ascending(const LabeledTree& t) {
  if (Vertex v = ascending_violation(t); v != 0)
    throw PreconditionError("labeling is not ascending at vertex " + std::to_string(v));
}

inline void require_cap(const LabeledTree& t, int cap) {
  if (t.size() > cap)
    throw ResourceError("complex enumeration refused: n = " + std::to_string(t.size()) + " exceeds cap " +
                        std::to_string(cap));
  if (t.size() > 30) throw ResourceError("complex enumeration supports at most 30 vertices");
}

inline bool edge_violations(const LabeledTree& t, Mask a) {
  for (auto [u, v] : t.edges())
    if ((a & bit(u)) && (a & bit(v))) return true;
  return false;
}

}  // namespace detail

/// Minimal generators of the initial ideal, read off the ascending basis.
inline MonomialIdealGens initial_ideal(const LabeledTree& t) {
  return initial_gens(polynomials(corollary_basis(t)));
}

/// Stanley–Reisner test: no generator's support lies inside the face.
inline bool face_via_initial(const LabeledTree& t, const VertexSet& A, const VertexSet& Aprime,
                             const MonomialIdealGens& min_gens) {
  detail::require_ascending(t);
  if (t.size() > 64) throw ResourceError("face tests support at most 64 vertices");
  const detail::Mask a = detail::to_mask(t, A);
  const detail::Mask ap = detail::to_mask(t, Aprime);
  for (const auto& s : detail::supports(min_gens, t.size()))
    if ((s.x & ~a) == 0 && (s.y & ~ap) == 0) return false;
  return true;
}

/// Edge part: edges {u, v} with v adjacent to some a in A and u, v > a.
/// Path part: P minus its x-endpoints, for every path P whose minimum is an
/// interior vertex outside A, whose x-endpoints lie in A, and whose vertices
/// farther than 2 from both ends avoid A. The x-endpoints are both ends of an
/// odd-length path and the smaller end of an even-length one.
inline PathFamily path_star(const LabeledTree& t, const VertexSet& A) {
  detail::require_ascending(t);
  for (Vertex v : A)
    if (!t.contains(v)) throw BadVertex("vertex " + std::to_string(v) + " out of range");
  if (!is_independent(t, A)) throw PreconditionError("A is not independent in the tree");
  std::vector<bool> in_a(static_cast<std::size_t>(t.size()) + 1, false);
  for (Vertex v : A) in_a[static_cast<std::size_t>(v)] = true;

  PathFamily out;
  for (Vertex a : A)
    for (Vertex v : t.neighbors(a)) {
      if (v <= a) continue;
      for (Vertex u : t.neighbors(v))
        if (u != a && u > a) out.edges_part.push_back(TreePath({std::min(u, v), std::max(u, v)}));
    }
  std::sort(out.edges_part.begin(), out.edges_part.end());
  out.edges_part.erase(std::unique(out.edges_part.begin(), out.edges_part.end()), out.edges_part.end());

  for (const TreePath& p : all_paths(t)) {
    const auto& vs = p.vertices();
    const Vertex low = p.min_vertex();
    if (in_a[static_cast<std::size_t>(low)]) continue;            // (1)
    if (low == p.front() || low == p.back()) continue;            // (2)
    const bool odd = p.odd_length();
    if (!in_a[static_cast<std::size_t>(p.front())]) continue;     // (3)
    if (odd && !in_a[static_cast<std::size_t>(p.back())]) continue;
    bool far_clear = true;                                        // (4)
    for (std::size_t i = 3; i + 3 < vs.size(); ++i) far_clear = far_clear && !in_a[static_cast<std::size_t>(vs[i])];
    if (!far_clear) continue;
    std::vector<Vertex> trimmed(vs.begin() + 1, odd ? vs.end() - 1 : vs.end());
    out.paths_part.push_back(TreePath(std::move(trimmed)).canonical());
  }
  std::sort(out.paths_part.begin(), out.paths_part.end());
  return out;
}

/// Face test through the path family: A independent and no family member
/// inside A'.
inline bool face_via_paths(const LabeledTree& t, const VertexSet& A, const VertexSet& Aprime) {
  detail::require_ascending(t);
  if (!is_independent(t, A)) return false;
  std::vector<bool> in_ap(static_cast<std::size_t>(t.size()) + 1, false);
  for (Vertex v : Aprime) {
    if (!t.contains(v)) throw BadVertex("vertex " + std::to_string(v) + " out of range");
    in_ap[static_cast<std::size_t>(v)] = true;
  }
  const PathFamily family = path_star(t, A);
  auto inside = [&](const TreePath& p) {
    return std::all_of(p.vertices().begin(), p.vertices().end(), [&](Vertex v) { return in_ap[static_cast<std::size_t>(v)]; });
  };
  return std::none_of(family.edges_part.begin(), family.edges_part.end(), inside) &&
         std::none_of(family.paths_part.begin(), family.paths_part.end(), inside);
}

/// Face counts by |A| + |A'|, enumerating independent A and then every A'.
inline FVector f_vector(const LabeledTree& t, const MonomialIdealGens& min_gens, int cap = kDefaultComplexCap) {
  using detail::Mask;
  detail::require_ascending(t);
  detail::require_cap(t, cap);
  const int n = t.size();
  const auto gens = detail::supports(min_gens, n);
  const Mask full = (Mask{1} << n) - 1;
  std::vector<std::uint64_t> counts(2 * static_cast<std::size_t>(n) + 1, 0);
  std::vector<Mask> blockers;
  for (Mask a = 0; a <= full; ++a) {
    if (detail::edge_violations(t, a)) continue;
    blockers.clear();
    for (const auto& s : gens)
      if ((s.x & ~a) == 0) blockers.push_back(s.y);
    const int size_a = std::popcount(a);
    for (Mask ap = 0; ap <= full; ++ap) {
      bool face = true;
      for (Mask b : blockers)
        if ((b & ~ap) == 0) {
          face = false;
          break;
        }
      if (face) ++counts[static_cast<std::size_t>(size_a + std::popcount(ap))];
    }
  }
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  FVector out;
  out.d = static_cast<int>(counts.size()) - 1;
  out.counts = std::move(counts);
  return out;
}

inline FVector f_vector(const LabeledTree& t, int cap = kDefaultComplexCap) {
  detail::require_cap(t, cap);
  return f_vector(t, initial_ideal(t), cap);
}

/// Krull dimension read off the complex: the largest |A| + |A'|.
inline int dim_from_complex(const LabeledTree& t, int cap = kDefaultComplexCap) { return f_vector(t, cap).d; }

/// sum_i f_{i-1} t^i (1-t)^{d-i} over (1-t)^d, left unreduced.
inline HilbertSeries hilbert_series(const FVector& fv) {
  const int d = fv.d;
  std::vector<std::int64_t> num(static_cast<std::size_t>(d) + 1, 0);
  // binomial row of (1-t)^k
  for (int i = 0; i <= d; ++i) {
    const auto fi = static_cast<std::int64_t>(fv.delta(i));
    if (fi == 0) continue;
    std::int64_t binom = 1;
    const int k = d - i;
    for (int j = 0; j <= k; ++j) {
      num[static_cast<std::size_t>(i + j)] += (j % 2 == 0 ? 1 : -1) * fi * binom;
      binom = binom * (k - j) / (j + 1);
    }
  }
  while (num.size() > 1 && num.back() == 0) num.pop_back();
  return {std::move(num), d, false};
}

inline HilbertSeries hilbert_series(const LabeledTree& t, int cap = kDefaultComplexCap) {
  return hilbert_series(f_vector(t, cap));
}

/// Cancels every common factor (1 - t) between numerator and denominator.
inline HilbertSeries normalize(HilbertSeries h) {
  auto value_at_one = [](const std::vector<std::int64_t>& p) {
    std::int64_t s = 0;
    for (auto c : p) s += c;
    return s;
  };
  while (h.denominator_power > 0 && h.numerator.size() > 1 && value_at_one(h.numerator) == 0) {
    // numerator = (1 - t) * q
    std::vector<std::int64_t> q(h.numerator.size() - 1);
    std::int64_t acc = 0;
    for (std::size_t k = 0; k < q.size(); ++k) {
      acc += h.numerator[k];
      q[k] = acc;
    }
    h.numerator = std::move(q);
    --h.denominator_power;
  }
  h.normalized = true;
  return h;
}

/// Taylor coefficients of t^0..t^degree.
inline std::vector<std::int64_t> series_expand(const HilbertSeries& h, int degree) {
  if (degree < 0) return {};
  std::vector<std::int64_t> out(static_cast<std::size_t>(degree) + 1, 0);
  for (std::size_t j = 0; j < h.numerator.size() && j <= static_cast<std::size_t>(degree); ++j)
    out[j] = h.numerator[j];
  // multiply by 1/(1-t) once per denominator power: prefix sums
  for (int p = 0; p < h.denominator_power; ++p)
    for (std::size_t k = 1; k < out.size(); ++k) out[k] += out[k - 1];
  return out;
}

inline nlohmann::json to_json(const HilbertSeries& h) {
  return {{"numerator", h.numerator}, {"denominator_power", h.denominator_power}, {"normalized", h.normalized}};
}

inline nlohmann::json to_json(const FVector& fv) { return {{"f", fv.counts}, {"dim_complex", fv.d}}; }

inline nlohmann::json to_json(const PathFamily& family) {
  auto paths = [](const std::vector<TreePath>& ps) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& p : ps) out.push_back(p.vertices());
    return out;
  };
  return {{"edges", paths(family.edges_part)}, {"paths", paths(family.paths_part)}};
}

}  // namespace lss
