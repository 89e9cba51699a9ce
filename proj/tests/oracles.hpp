#pragma once

// Reference values computed without the library's own algorithms.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "lss/lss.hpp"

namespace oracle {

inline std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Faces of size i for the path on n vertices.
inline std::int64_t path_faces(int n, int i) {
  std::int64_t s = 0;
  for (int k = 0; k <= i; ++k) s += binom(n + 1 - k, i - k) * binom(n - 1, k);
  return s;
}

/// Faces of size i for the star on n vertices centered at 1.
inline std::int64_t star_faces(int n, int i) {
  return binom(2 * n - 2, i) + (n - 1) * binom(n - 1, i - 2) + binom(n, i - 1) + binom(n - 1, i - 1);
}

/// Coefficients of (1 + t)^k.
inline std::vector<std::int64_t> one_plus_t_power(int k) {
  std::vector<std::int64_t> c;
  for (int i = 0; i <= k; ++i) c.push_back(binom(k, i));
  return c;
}

/// Number of monomials of each degree 0..max_degree in `vars` variables that
/// no generator divides, by direct enumeration of exponent vectors.
inline std::vector<std::int64_t> standard_monomial_counts(const std::vector<std::vector<std::uint32_t>>& gens,
                                                          std::size_t vars, int max_degree) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(max_degree) + 1, 0);
  std::vector<std::uint32_t> e(vars, 0);
  auto standard = [&] {
    for (const auto& g : gens) {
      bool divides = true;
      for (std::size_t i = 0; i < vars && divides; ++i) divides = g[i] <= e[i];
      if (divides) return false;
    }
    return true;
  };
  // all exponent vectors of total degree <= max_degree
  auto rec = [&](auto& self, std::size_t pos, int left) -> void {
    if (pos == vars) {
      if (standard()) ++counts[static_cast<std::size_t>(max_degree - left)];
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[pos] = static_cast<std::uint32_t>(a);
      self(self, pos + 1, left - a);
    }
    e[pos] = 0;
  };
  rec(rec, 0, max_degree);
  return counts;
}

inline std::vector<std::vector<std::uint32_t>> exponent_lists(const lss::MonomialIdealGens& g) {
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& m : g.gens) out.emplace_back(m.exponents().begin(), m.exponents().end());
  return out;
}

/// Two root vertices joined by an edge; each has two children, each of
/// those two children, each of those two leaves. One leaf on each side then
/// grows a tail of the given length. Vertices are numbered in BFS order.
inline lss::LabeledTree branching_fixture(int left_tail, int right_tail) {
  std::vector<lss::Edge> edges{{1, 2}};
  int next = 3;
  std::vector<int> frontier{1, 2};
  for (int level = 0; level < 3; ++level) {
    std::vector<int> grown;
    for (int v : frontier)
      for (int c = 0; c < 2; ++c) {
        edges.emplace_back(v, next);
        grown.push_back(next++);
      }
    frontier = grown;
  }
  // frontier holds the 16 leaves; the first 8 descend from vertex 1
  auto tail = [&](int from, int len) {
    for (int k = 0; k < len; ++k) {
      edges.emplace_back(from, next);
      from = next++;
    }
  };
  tail(frontier[2], left_tail);
  tail(frontier[13], right_tail);
  return lss::LabeledTree(next - 1, edges);
}

/// Star on n vertices centered at 1: x1 xi + y1 yi and xi y1 yj - xj y1 yi.
inline std::vector<lss::Poly> star_family(const lss::Ring& r, int n) {
  std::vector<lss::Poly> out;
  for (int i = 2; i <= n; ++i) out.push_back(r.x(1) * r.x(i) + r.y(1) * r.y(i));
  for (int i = 2; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back(r.x(i) * r.y(1) * r.y(j) - r.x(j) * r.y(1) * r.y(i));
  return out;
}

/// Path 1..n: xi xi+1 + yi yi+1 and xi yi+1 yi+2 - yi yi+1 xi+2.
inline std::vector<lss::Poly> path_family(const lss::Ring& r, int n) {
  std::vector<lss::Poly> out;
  for (int i = 1; i + 1 <= n; ++i) out.push_back(r.x(i) * r.x(i + 1) + r.y(i) * r.y(i + 1));
  for (int i = 1; i + 2 <= n; ++i)
    out.push_back(r.x(i) * r.y(i + 1) * r.y(i + 2) - r.y(i) * r.y(i + 1) * r.x(i + 2));
  return out;
}

/// Same polynomials regardless of list order.
inline bool same_set(std::vector<lss::Poly> a, std::vector<lss::Poly> b) {
  if (a.size() != b.size()) return false;
  for (const auto& p : a) {
    auto it = std::find(b.begin(), b.end(), p);
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

/// Every relabeling of t (n small) that is ascending.
inline std::vector<lss::LabeledTree> all_ascending_relabelings(const lss::LabeledTree& t) {
  std::vector<lss::LabeledTree> out;
  lss::Permutation p = lss::identity_permutation(t.size());
  do {
    lss::LabeledTree r = lss::relabel(t, p);
    if (lss::is_ascending(r)) out.push_back(std::move(r));
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return out;
}

/// Vertices whose bit is set, as a sorted list.
inline lss::VertexSet subset(unsigned mask) {
  lss::VertexSet s;
  for (int v = 1; mask != 0; ++v, mask >>= 1)
    if (mask & 1U) s.push_back(v);
  return s;
}

}  // namespace oracle
