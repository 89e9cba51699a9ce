#pragma once

// Trees on vertices 1..n: parsing, labelings, paths, pendant-path layers and
// induced-subgraph helpers.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "json.hpp"

#include "lss/errors.hpp"

namespace lss {

using Vertex = int;
/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

/// Maps every vertex v (index v) to its new label; index 0 is unused.
using Permutation = std::vector<Vertex>;

class LabeledTree {
 public:
  /// Validates that `edges` form a tree on 1..n.
  LabeledTree(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 1) throw NotATree("a tree needs at least one vertex");
    for (auto& [u, v] : edges) {
      if (u < 1 || u > n || v < 1 || v > n)
        throw BadVertex("edge {" + std::to_string(u) + "," + std::to_string(v) + "} has a vertex outside 1.." +
                        std::to_string(n));
      if (u == v) throw NotATree("self-loop at vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) throw NotATree("duplicate edge");
    if (edges.size() != static_cast<std::size_t>(n - 1))
      throw NotATree("expected " + std::to_string(n - 1) + " edges, got " + std::to_string(edges.size()));
    adj_.assign(static_cast<std::size_t>(n) + 1, {});
    for (auto [u, v] : edges) {
      adj_[static_cast<std::size_t>(u)].push_back(v);
      adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    edges_ = std::move(edges);
    // n-1 distinct edges plus connectivity rule out cycles
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    std::vector<Vertex> stack{1};
    seen[1] = true;
    int reached = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : adj_[static_cast<std::size_t>(v)])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          ++reached;
          stack.push_back(w);
        }
    }
    if (reached != n) throw NotATree("edge set is disconnected");
  }

  int size() const { return n_; }
  /// Edges as (u, v) with u < v, sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex u, Vertex v) const {
    const auto& nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }
  bool contains(Vertex v) const { return v >= 1 && v <= n_; }

  /// Number of degree-one vertices.
  int pendant_count() const {
    int p = 0;
    for (Vertex v = 1; v <= n_; ++v) p += degree(v) == 1;
    return p;
  }

  friend bool operator==(const LabeledTree& a, const LabeledTree& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// Path v_1..v_k in a tree. Canonical paths satisfy v_1 < v_k.
class TreePath {
 public:
  explicit TreePath(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw InvalidArgument("empty path");
  }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t length() const { return vertices_.size() - 1; }
  bool odd_length() const { return length() % 2 == 1; }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }
  std::vector<Vertex> interior() const {
    if (vertices_.size() <= 2) return {};
    return {vertices_.begin() + 1, vertices_.end() - 1};
  }
  Vertex min_vertex() const { return *std::min_element(vertices_.begin(), vertices_.end()); }
  VertexSet vertex_set() const {
    VertexSet s = vertices_;
    std::sort(s.begin(), s.end());
    return s;
  }
  bool is_canonical() const { return vertices_.size() == 1 || front() < back(); }

  TreePath canonical() const {
    if (is_canonical()) return *this;
    return TreePath({vertices_.rbegin(), vertices_.rend()});
  }

  /// True iff consecutive vertices are adjacent in `t` and vertices are distinct.
  bool valid_in(const LabeledTree& t) const {
    VertexSet s = vertex_set();
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
    for (Vertex v : vertices_)
      if (!t.contains(v)) return false;
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
      if (!t.adjacent(vertices_[i], vertices_[i + 1])) return false;
    return true;
  }

  friend bool operator==(const TreePath&, const TreePath&) = default;
  friend auto operator<=>(const TreePath& a, const TreePath& b) {
    // (v_1, v_k) first, matching the enumeration order of all_paths
    return std::tuple(a.front(), a.back(), a.vertices_) <=> std::tuple(b.front(), b.back(), b.vertices_);
  }

 private:
  std::vector<Vertex> vertices_;
};

namespace detail {

inline std::vector<long long> integer_tokens(std::string_view text) {
  std::vector<long long> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError("expected an integer, got '" + tok + "'");
    out.push_back(value);
  }
  return out;
}

inline int checked_vertex(long long v, long long n) {
  if (v < 1 || v > n) throw BadVertex("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
  return static_cast<int>(v);
}

}  // namespace detail

inline LabeledTree tree_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
    throw ParseError("tree JSON needs \"n\" and \"edges\"");
  if (!doc["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
  const long long n = doc["n"].get<long long>();
  if (n < 1 || n > 1'000'000) throw ParseError("\"n\" out of range");
  if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array");
  std::vector<Edge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError("each edge must be a pair of integers");
    edges.emplace_back(detail::checked_vertex(e[0].get<long long>(), n),
                       detail::checked_vertex(e[1].get<long long>(), n));
  }
  return LabeledTree(static_cast<int>(n), std::move(edges));
}

inline nlohmann::json tree_to_json(const LabeledTree& t) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : t.edges()) edges.push_back({u, v});
  return {{"n", t.size()}, {"edges", edges}};
}

/// Edge-list text ("n" then n-1 lines "u v") or the JSON form {"n", "edges"}.
inline LabeledTree parse_tree(std::string_view text) {
  auto first = std::find_if(text.begin(), text.end(), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
  if (first == text.end()) throw ParseError("empty tree input");
  if (*first == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid tree JSON: ") + e.what());
    }
    return tree_from_json(doc);
  }
  const auto tokens = detail::integer_tokens(text);
  const long long n = tokens.front();
  if (n < 1 || n > 1'000'000) throw ParseError("vertex count out of range");
  if (tokens.size() % 2 != 1) throw ParseError("edge list has an unpaired vertex");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i + 1 < tokens.size(); i += 2)
    edges.emplace_back(detail::checked_vertex(tokens[i], n), detail::checked_vertex(tokens[i + 1], n));
  return LabeledTree(static_cast<int>(n), std::move(edges));
}

inline std::string to_edge_list(const LabeledTree& t) {
  std::string out = std::to_string(t.size()) + "\n";
  for (auto [u, v] : t.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

/// Renames every vertex v to perm[v].
inline LabeledTree relabel(const LabeledTree& t, const Permutation& perm) {
  const int n = t.size();
  if (perm.size() != static_cast<std::size_t>(n) + 1) throw InvalidArgument("permutation has the wrong size");
  std::vector<bool> seen(perm.size(), false);
  for (Vertex v = 1; v <= n; ++v) {
    Vertex w = perm[static_cast<std::size_t>(v)];
    if (w < 1 || w > n || seen[static_cast<std::size_t>(w)]) throw InvalidArgument("not a permutation of 1..n");
    seen[static_cast<std::size_t>(w)] = true;
  }
  std::vector<Edge> edges;
  for (auto [u, v] : t.edges()) edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return LabeledTree(n, std::move(edges));
}

inline Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n) + 1);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

/// First vertex k (scanning n down to 2) that is not a pendant of the
/// subtree on 1..k, or 0 when the labeling is ascending.
inline Vertex ascending_violation(const LabeledTree& t) {
  for (Vertex k = t.size(); k >= 2; --k) {
    const auto& nb = t.neighbors(k);
    auto lower = std::count_if(nb.begin(), nb.end(), [k](Vertex w) { return w < k; });
    if (lower != 1) return k;
  }
  return 0;
}

inline bool is_ascending(const LabeledTree& t) { return ascending_violation(t) == 0; }

/// Labels vertices in breadth-first order from `root`, visiting neighbors by
/// increasing vertex number.
inline Permutation bfs_labeling(const LabeledTree& t, Vertex root) {
  const int n = t.size();
  if (!t.contains(root)) throw BadVertex("root " + std::to_string(root) + " out of range");
  Permutation perm(static_cast<std::size_t>(n) + 1, 0);
  std::queue<Vertex> queue;
  queue.push(root);
  Vertex next = 1;
  perm[static_cast<std::size_t>(root)] = next++;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (Vertex w : t.neighbors(v))
      if (perm[static_cast<std::size_t>(w)] == 0) {
        perm[static_cast<std::size_t>(w)] = next++;
        queue.push(w);
      }
  }
  return perm;
}

/// Breadth-first relabeling from vertex 1; the relabeled tree is ascending.
inline Permutation ascending_labeling(const LabeledTree& t) { return bfs_labeling(t, 1); }

/// Random connected growth order from a random root: every prefix induces a
/// subtree, so the result is ascending.
template <class Rng>
Permutation random_ascending_labeling(const LabeledTree& t, Rng& rng) {
  const int n = t.size();
  Permutation perm(static_cast<std::size_t>(n) + 1, 0);
  std::uniform_int_distribution<int> pick_root(1, n);
  std::vector<Vertex> frontier{pick_root(rng)};
  Vertex next = 1;
  while (!frontier.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
    const std::size_t i = pick(rng);
    const Vertex v = frontier[i];
    frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(i));
    if (perm[static_cast<std::size_t>(v)] != 0) continue;
    perm[static_cast<std::size_t>(v)] = next++;
    for (Vertex w : t.neighbors(v))
      if (perm[static_cast<std::size_t>(w)] == 0) frontier.push_back(w);
  }
  return perm;
}

template <class Rng>
Permutation random_permutation(int n, Rng& rng) {
  Permutation perm = identity_permutation(n);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  return perm;
}

/// The unique u-v path, smaller endpoint first.
inline TreePath path_between(const LabeledTree& t, Vertex u, Vertex v) {
  if (!t.contains(u) || !t.contains(v)) throw BadVertex("path endpoint out of range");
  if (u == v) throw InvalidArgument("path endpoints must differ");
  if (u > v) std::swap(u, v);
  std::vector<Vertex> parent(static_cast<std::size_t>(t.size()) + 1, 0);
  std::queue<Vertex> queue;
  queue.push(u);
  parent[static_cast<std::size_t>(u)] = u;
  while (!queue.empty() && parent[static_cast<std::size_t>(v)] == 0) {
    Vertex w = queue.front();
    queue.pop();
    for (Vertex z : t.neighbors(w))
      if (parent[static_cast<std::size_t>(z)] == 0) {
        parent[static_cast<std::size_t>(z)] = w;
        queue.push(z);
      }
  }
  std::vector<Vertex> path{v};
  while (path.back() != u) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return TreePath(std::move(path));
}

/// All n(n-1)/2 canonical paths, sorted by (v_1, v_k).
inline std::vector<TreePath> all_paths(const LabeledTree& t) {
  std::vector<TreePath> out;
  const int n = t.size();
  out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
  for (Vertex u = 1; u <= n; ++u) {
    // one BFS per source instead of one per pair
    std::vector<Vertex> parent(static_cast<std::size_t>(n) + 1, 0);
    parent[static_cast<std::size_t>(u)] = u;
    std::queue<Vertex> queue;
    queue.push(u);
    while (!queue.empty()) {
      Vertex w = queue.front();
      queue.pop();
      for (Vertex z : t.neighbors(w))
        if (parent[static_cast<std::size_t>(z)] == 0) {
          parent[static_cast<std::size_t>(z)] = w;
          queue.push(z);
        }
    }
    for (Vertex v = u + 1; v <= n; ++v) {
      std::vector<Vertex> path{v};
      while (path.back() != u) path.push_back(parent[static_cast<std::size_t>(path.back())]);
      std::reverse(path.begin(), path.end());
      out.emplace_back(std::move(path));
    }
  }
  return out;
}

/// Number of connected components of the subgraph induced by `vertices`.
inline int induced_components(const LabeledTree& t, const VertexSet& vertices) {
  std::vector<bool> in(static_cast<std::size_t>(t.size()) + 1, false);
  for (Vertex v : vertices) {
    if (!t.contains(v)) throw BadVertex("vertex " + std::to_string(v) + " out of range");
    in[static_cast<std::size_t>(v)] = true;
  }
  int count = 0;
  for (Vertex v = 1; v <= t.size(); ++v) count += in[static_cast<std::size_t>(v)];
  // a forest has |V| - |E| components
  for (auto [u, v] : t.edges()) count -= in[static_cast<std::size_t>(u)] && in[static_cast<std::size_t>(v)];
  return count;
}

inline bool is_independent(const LabeledTree& t, const VertexSet& vertices) {
  std::vector<bool> in(static_cast<std::size_t>(t.size()) + 1, false);
  for (Vertex v : vertices) {
    if (!t.contains(v)) throw BadVertex("vertex " + std::to_string(v) + " out of range");
    in[static_cast<std::size_t>(v)] = true;
  }
  for (auto [u, v] : t.edges())
    if (in[static_cast<std::size_t>(u)] && in[static_cast<std::size_t>(v)]) return false;
  return true;
}

struct PendantLayer {
  /// Maximal pendant paths of the residual forest (single vertices allowed).
  std::vector<TreePath> paths;
  VertexSet path_vertices;  // P_i
  VertexSet neighbors;      // Q_i
};

struct PendantLayers {
  std::vector<PendantLayer> layers;
  VertexSet path_vertices;  // union of all P_i
  std::size_t path_count = 0;
};

/// Iteratively peels the maximal pendant paths of the residual forest
/// together with their outside neighbors, until nothing remains.
inline PendantLayers pendant_decomposition(const LabeledTree& t) {
  const int n = t.size();
  std::vector<bool> alive(static_cast<std::size_t>(n) + 1, true);
  alive[0] = false;
  int remaining = n;
  auto live_degree = [&](Vertex v) {
    std::size_t d = 0;
    for (Vertex w : t.neighbors(v)) d += alive[static_cast<std::size_t>(w)];
    return d;
  };

  PendantLayers out;
  while (remaining > 0) {
    PendantLayer layer;
    std::vector<bool> in_path(static_cast<std::size_t>(n) + 1, false);
    std::vector<bool> component_seen(static_cast<std::size_t>(n) + 1, false);
    for (Vertex root = 1; root <= n; ++root) {
      if (!alive[static_cast<std::size_t>(root)] || component_seen[static_cast<std::size_t>(root)]) continue;
      std::vector<Vertex> component{root};
      component_seen[static_cast<std::size_t>(root)] = true;
      for (std::size_t i = 0; i < component.size(); ++i)
        for (Vertex w : t.neighbors(component[i]))
          if (alive[static_cast<std::size_t>(w)] && !component_seen[static_cast<std::size_t>(w)]) {
            component_seen[static_cast<std::size_t>(w)] = true;
            component.push_back(w);
          }
      const bool is_path = std::all_of(component.begin(), component.end(), [&](Vertex v) { return live_degree(v) <= 2; });
      if (is_path) {
        // the whole component is its unique maximal pendant path
        Vertex end = *std::find_if(component.begin(), component.end(), [&](Vertex v) { return live_degree(v) <= 1; });
        std::vector<Vertex> walk{end};
        Vertex prev = 0;
        for (bool moved = true; moved;) {
          moved = false;
          for (Vertex w : t.neighbors(walk.back()))
            if (alive[static_cast<std::size_t>(w)] && w != prev) {
              prev = walk.back();
              walk.push_back(w);
              moved = true;
              break;
            }
        }
        layer.paths.push_back(TreePath(std::move(walk)).canonical());
        continue;
      }
      // legs: from each leaf walk through degree-2 vertices, stop before a branch vertex
      for (Vertex leaf : component) {
        if (live_degree(leaf) != 1) continue;
        std::vector<Vertex> walk{leaf};
        Vertex prev = 0;
        while (true) {
          Vertex next = 0;
          for (Vertex w : t.neighbors(walk.back()))
            if (alive[static_cast<std::size_t>(w)] && w != prev) next = w;
          if (live_degree(next) >= 3) break;
          prev = walk.back();
          walk.push_back(next);
        }
        layer.paths.push_back(TreePath(std::move(walk)).canonical());
      }
    }
    for (const auto& p : layer.paths)
      for (Vertex v : p.vertices()) in_path[static_cast<std::size_t>(v)] = true;
    for (Vertex v = 1; v <= n; ++v) {
      if (in_path[static_cast<std::size_t>(v)]) {
        layer.path_vertices.push_back(v);
        continue;
      }
      if (!alive[static_cast<std::size_t>(v)]) continue;
      for (Vertex w : t.neighbors(v))
        if (in_path[static_cast<std::size_t>(w)]) {
          layer.neighbors.push_back(v);
          break;
        }
    }
    for (Vertex v : layer.path_vertices) alive[static_cast<std::size_t>(v)] = false;
    for (Vertex v : layer.neighbors) alive[static_cast<std::size_t>(v)] = false;
    remaining -= static_cast<int>(layer.path_vertices.size() + layer.neighbors.size());
    std::sort(layer.paths.begin(), layer.paths.end());
    out.path_count += layer.paths.size();
    out.path_vertices.insert(out.path_vertices.end(), layer.path_vertices.begin(), layer.path_vertices.end());
    out.layers.push_back(std::move(layer));
  }
  std::sort(out.path_vertices.begin(), out.path_vertices.end());
  return out;
}

// Tree families used across the library, tests and CLI.

inline LabeledTree path_tree(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return LabeledTree(n, std::move(edges));
}

inline LabeledTree star_tree(int n, Vertex center = 1) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= n; ++v)
    if (v != center) edges.emplace_back(center, v);
  return LabeledTree(n, std::move(edges));
}

/// Tree encoded by a Prüfer sequence of length n-2 over 1..n.
inline LabeledTree tree_from_prufer(int n, const std::vector<Vertex>& code) {
  if (n < 1) throw InvalidArgument("tree needs at least one vertex");
  if (n <= 2) return n == 1 ? LabeledTree(1, {}) : LabeledTree(2, {{1, 2}});
  if (code.size() != static_cast<std::size_t>(n - 2)) throw InvalidArgument("Prüfer code has the wrong length");
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
  for (Vertex v : code) {
    if (v < 1 || v > n) throw BadVertex("Prüfer entry out of range");
    ++degree[static_cast<std::size_t>(v)];
  }
  std::set<Vertex> leaves;
  for (Vertex v = 1; v <= n; ++v)
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
  std::vector<Edge> edges;
  for (Vertex v : code) {
    Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, v);
    if (--degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
  }
  Vertex a = *leaves.begin();
  Vertex b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return LabeledTree(n, std::move(edges));
}

/// Uniformly random labeled tree on n vertices.
template <class Rng>
LabeledTree random_tree(int n, Rng& rng) {
  if (n <= 2) return tree_from_prufer(n, {});
  std::uniform_int_distribution<Vertex> pick(1, n);
  std::vector<Vertex> code(static_cast<std::size_t>(n - 2));
  for (auto& v : code) v = pick(rng);
  return tree_from_prufer(n, code);
}

namespace detail {

inline std::string rooted_code(const LabeledTree& t, Vertex v, Vertex parent) {
  std::vector<std::string> children;
  for (Vertex w : t.neighbors(v))
    if (w != parent) children.push_back(rooted_code(t, w, v));
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  return out + ")";
}

inline std::vector<Vertex> centers(const LabeledTree& t) {
  const int n = t.size();
  if (n == 1) return {1};
  std::vector<std::size_t> degree(static_cast<std::size_t>(n) + 1);
  std::vector<Vertex> layer;
  for (Vertex v = 1; v <= n; ++v) {
    degree[static_cast<std::size_t>(v)] = t.degree(v);
    if (t.degree(v) == 1) layer.push_back(v);
  }
  int left = n;
  while (left > 2) {
    left -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex w : t.neighbors(v))
        if (--degree[static_cast<std::size_t>(w)] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace detail

/// Isomorphism-invariant string (AHU encoding rooted at the center).
inline std::string canonical_form(const LabeledTree& t) {
  std::string best;
  for (Vertex c : detail::centers(t)) {
    std::string code = detail::rooted_code(t, c, 0);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

/// One representative per isomorphism class of trees on n vertices, each
/// carrying its breadth-first ascending labeling, ordered by canonical form.
/// Built by attaching a leaf to every vertex of every class on n-1 vertices.
inline std::vector<LabeledTree> nonisomorphic_trees(int n) {
  if (n < 1) return {};
  if (n > 16) throw ResourceError("nonisomorphic tree enumeration is limited to n <= 16");
  std::map<std::string, LabeledTree> classes;
  if (n == 1) {
    classes.emplace(canonical_form(LabeledTree(1, {})), LabeledTree(1, {}));
  } else {
    for (const LabeledTree& smaller : nonisomorphic_trees(n - 1)) {
      for (Vertex v = 1; v < n; ++v) {
        std::vector<Edge> edges = smaller.edges();
        edges.emplace_back(v, n);
        LabeledTree t(n, std::move(edges));
        std::string key = canonical_form(t);
        if (!classes.contains(key)) classes.emplace(std::move(key), relabel(t, ascending_labeling(t)));
      }
    }
  }
  std::vector<LabeledTree> out;
  for (auto& [key, t] : classes) out.push_back(t);
  return out;
}

}  // namespace lss
