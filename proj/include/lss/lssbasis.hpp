#pragma once

// Edge generators x_u x_v + y_u y_v of a tree and the path-indexed Gröbner
// bases built from them, with a Buchberger-based verifier.

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "lss/polyengine.hpp"
#include "lss/treekit.hpp"

namespace lss {

using Poly = Polynomial<Rational>;
using Ring = PolynomialRing<Rational>;

enum class ProvenanceKind { Edge, OddPath, EvenPath };

inline const char* to_string(ProvenanceKind k) {
  switch (k) {
    case ProvenanceKind::Edge: return "edge";
    case ProvenanceKind::OddPath: return "odd_path";
    case ProvenanceKind::EvenPath: return "even_path";
  }
  return "?";
}

struct Provenance {
  ProvenanceKind kind;
  TreePath path;
  VertexSet odd_subset;  // only for EvenPath
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct BasisElement {
  Poly polynomial;
  Provenance provenance;
};

struct GeneratorSet {
  LabeledTree tree;
  std::vector<BasisElement> generators;
};

inline std::vector<Poly> polynomials(std::span<const BasisElement> elements) {
  std::vector<Poly> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(e.polynomial);
  return out;
}

inline std::vector<Poly> polynomials(const std::vector<BasisElement>& elements) {
  return polynomials(std::span<const BasisElement>(elements));
}

/// (x_{v_1} x_{v_k} + y_{v_1} y_{v_k}) times y_v over every interior vertex;
/// `path` must have odd length and be canonical.
inline Poly odd_path_element(const Ring& ring, const TreePath& path) {
  if (!path.odd_length()) throw InvalidArgument("odd-path element needs a path of odd length");
  const TreePath p = path.canonical();
  Monomial z = ring.one();
  for (Vertex v : p.interior()) z = z * ring.y_monomial(v);
  Poly g = ring.x(p.front()) * ring.x(p.back()) + ring.y(p.front()) * ring.y(p.back());
  return g.scaled(Rational(1), z);
}

/// Subsets of the odd-position interior vertices v_3, v_5, ..., v_{2m-1} of
/// an even-length path, in binary counting order (bit 0 = v_3).
inline std::vector<VertexSet> odd_subsets(const TreePath& path) {
  if (path.odd_length()) throw InvalidArgument("odd subsets are defined for even-length paths only");
  if (path.length() == 0) throw InvalidArgument("odd subsets need a path of positive length");
  const auto& vs = path.vertices();
  std::vector<Vertex> eligible;
  for (std::size_t i = 2; i + 1 < vs.size(); i += 2) eligible.push_back(vs[i]);
  if (eligible.size() > 20) throw ResourceError("too many odd subsets to enumerate");
  std::vector<VertexSet> out;
  const std::size_t count = std::size_t{1} << eligible.size();
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    VertexSet s;
    for (std::size_t b = 0; b < eligible.size(); ++b)
      if (mask >> b & 1U) s.push_back(eligible[b]);
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
  }
  return out;
}

/// (x_{v_1} y_{v_k} - x_{v_k} y_{v_1}) times x_v for v in `odd` and y_v for
/// the other interior vertices.
inline Poly even_path_element(const Ring& ring, const TreePath& path, const VertexSet& odd) {
  if (path.odd_length() || path.length() == 0) throw InvalidArgument("even-path element needs a path of even length");
  const TreePath p = path.canonical();
  Monomial z = ring.one();
  for (Vertex v : p.interior())
    z = z * (std::binary_search(odd.begin(), odd.end(), v) ? ring.x_monomial(v) : ring.y_monomial(v));
  Poly g = ring.x(p.front()) * ring.y(p.back()) - ring.x(p.back()) * ring.y(p.front());
  return g.scaled(Rational(1), z);
}

inline GeneratorSet edge_generators(const LabeledTree& t) {
  Ring ring(t.size());
  GeneratorSet out{t, {}};
  for (auto [u, v] : t.edges()) {
    TreePath p({u, v});
    out.generators.push_back({odd_path_element(ring, p), {ProvenanceKind::Edge, p, {}}});
  }
  return out;
}

namespace detail {

inline std::vector<BasisElement> path_basis(const LabeledTree& t, bool all_odd_subsets) {
  Ring ring(t.size());
  std::vector<BasisElement> edges, odd, even;
  for (const TreePath& p : all_paths(t)) {
    if (p.length() == 1) {
      edges.push_back({odd_path_element(ring, p), {ProvenanceKind::Edge, p, {}}});
    } else if (p.odd_length()) {
      odd.push_back({odd_path_element(ring, p), {ProvenanceKind::OddPath, p, {}}});
    } else if (all_odd_subsets) {
      for (auto& s : odd_subsets(p)) even.push_back({even_path_element(ring, p, s), {ProvenanceKind::EvenPath, p, s}});
    } else {
      even.push_back({even_path_element(ring, p, {}), {ProvenanceKind::EvenPath, p, {}}});
    }
  }
  std::vector<BasisElement> out = std::move(edges);
  out.insert(out.end(), std::make_move_iterator(odd.begin()), std::make_move_iterator(odd.end()));
  out.insert(out.end(), std::make_move_iterator(even.begin()), std::make_move_iterator(even.end()));
  return out;
}

}  // namespace detail

/// Every odd-length path element and every (even path, odd subset) element,
/// valid for any labeling. Edges first, then odd paths, then even paths.
inline std::vector<BasisElement> theorem_basis(const LabeledTree& t) { return detail::path_basis(t, true); }

/// Odd-path elements plus even-path elements with empty odd subset; requires
/// an ascending labeling.
inline std::vector<BasisElement> corollary_basis(const LabeledTree& t) {
  if (Vertex v = ascending_violation(t); v != 0)
    throw PreconditionError("labeling is not ascending: vertex " + std::to_string(v) +
                            " is not a pendant of the subtree on 1.." + std::to_string(v));
  return detail::path_basis(t, false);
}

struct VerificationFailure {
  enum class Check { Membership, Generation, Criterion };
  Check check;
  std::size_t first;   // candidate (or generator) index
  std::size_t second;  // partner index for Criterion, otherwise equal to first
  std::string remainder;
};

inline const char* to_string(VerificationFailure::Check c) {
  switch (c) {
    case VerificationFailure::Check::Membership: return "membership";
    case VerificationFailure::Check::Generation: return "generation";
    case VerificationFailure::Check::Criterion: return "criterion";
  }
  return "?";
}

struct VerificationReport {
  bool membership = true;  // every candidate lies in the ideal
  bool generation = true;  // every edge generator reduces to 0 by the candidate
  bool criterion = true;   // every S-polynomial reduces to 0 by the candidate
  std::size_t pairs_checked = 0;
  std::vector<VerificationFailure> failures;
  bool pass() const { return membership && generation && criterion; }
};

/// Checks that `candidate` is a Gröbner basis of the ideal generated by `gens`.
inline VerificationReport verify_groebner(std::span<const BasisElement> candidate, const GeneratorSet& gens) {
  using Check = VerificationFailure::Check;
  VerificationReport report;
  const std::vector<Poly> cand = polynomials(candidate);
  const std::vector<Poly> edges = polynomials(gens.generators);

  const std::vector<Poly> oracle = edges.empty() ? std::vector<Poly>{} : buchberger(edges);
  for (std::size_t i = 0; i < cand.size(); ++i) {
    Poly r = oracle.empty() ? cand[i] : normal_form(cand[i], oracle);
    if (!r.is_zero()) {
      report.membership = false;
      report.failures.push_back({Check::Membership, i, i, to_string(r)});
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Poly r = cand.empty() ? edges[i] : normal_form(edges[i], cand);
    if (!r.is_zero()) {
      report.generation = false;
      report.failures.push_back({Check::Generation, i, i, to_string(r)});
    }
  }
  for (std::size_t j = 1; j < cand.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      ++report.pairs_checked;
      Poly r = normal_form(spoly(cand[i], cand[j]), cand);
      if (!r.is_zero()) {
        report.criterion = false;
        report.failures.push_back({Check::Criterion, i, j, to_string(r)});
      }
    }
  return report;
}

inline VerificationReport verify_groebner(const std::vector<BasisElement>& candidate, const GeneratorSet& gens) {
  return verify_groebner(std::span<const BasisElement>(candidate), gens);
}

namespace detail {

// JSON number when it fits in 64 bits, decimal string otherwise
inline nlohmann::json json_integer(const boost::multiprecision::cpp_int& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

}  // namespace detail

inline nlohmann::json to_json(const Poly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    const auto num = boost::multiprecision::numerator(t.coeff);
    const auto den = boost::multiprecision::denominator(t.coeff);
    nlohmann::json exps = nlohmann::json::array();
    for (auto e : t.monomial.exponents()) exps.push_back(e);
    terms.push_back({detail::json_integer(num), detail::json_integer(den), exps});
  }
  return terms;
}

/// Inverse of `to_json(const Poly&)` over the natural order on n vertices.
inline Poly poly_from_json(const nlohmann::json& terms, const Ring& ring) {
  std::vector<Poly::Term> out;
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 3) throw ParseError("term must be [num, den, exponents]");
    auto as_int = [](const nlohmann::json& j) {
      return j.is_string() ? boost::multiprecision::cpp_int(j.get<std::string>())
                           : boost::multiprecision::cpp_int(j.get<long long>());
    };
    Rational c(as_int(t[0]), as_int(t[1]));
    std::vector<Monomial::Exponent> exps = t[2].get<std::vector<Monomial::Exponent>>();
    if (exps.size() != ring.order()->variable_count()) throw DimensionError("exponent vector has the wrong length");
    out.push_back({c, Monomial(std::move(exps))});
  }
  return Poly::from_terms(ring.order(), std::move(out));
}

inline nlohmann::json to_json(const BasisElement& e) {
  return {{"provenance",
           {{"kind", to_string(e.provenance.kind)},
            {"path", e.provenance.path.vertices()},
            {"odd_subset", e.provenance.odd_subset}}},
          {"polynomial", to_string(e.polynomial)},
          {"terms", to_json(e.polynomial)}};
}

inline nlohmann::json to_json(std::span<const BasisElement> basis) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : basis) out.push_back(to_json(e));
  return out;
}

inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"check", to_string(f.check)}, {"first", f.first}, {"second", f.second}, {"remainder", f.remainder}});
  return {{"pass", r.pass()},
          {"checks", {{"membership", r.membership}, {"generation", r.generation}, {"criterion", r.criterion}}},
          {"pairs_checked", r.pairs_checked},
          {"failures", failures}};
}

}  // namespace lss
