#include <gtest/gtest.h>

#include <random>

#include "lss/lssbasis.hpp"
#include "oracles.hpp"

using namespace lss;

namespace {

std::vector<std::string> texts(const std::vector<BasisElement>& b) {
  std::vector<std::string> s;
  for (const auto& e : b) s.push_back(to_string(e.polynomial));
  return s;
}

}  // namespace

TEST(EdgeGenerators, Examples) {
  EXPECT_EQ(texts(edge_generators(path_tree(2)).generators), (std::vector<std::string>{"x1*x2 + y1*y2"}));
  EXPECT_EQ(texts(edge_generators(path_tree(3)).generators),
            (std::vector<std::string>{"x1*x2 + y1*y2", "x2*x3 + y2*y3"}));
  EXPECT_EQ(texts(edge_generators(star_tree(4)).generators),
            (std::vector<std::string>{"x1*x2 + y1*y2", "x1*x3 + y1*y3", "x1*x4 + y1*y4"}));
}

TEST(OddSubsets, Examples) {
  EXPECT_EQ(odd_subsets(TreePath({1, 2, 3})), (std::vector<VertexSet>{{}}));
  EXPECT_EQ(odd_subsets(TreePath({1, 2, 3, 4, 5})), (std::vector<VertexSet>{{}, {3}}));
  auto six = odd_subsets(TreePath({1, 2, 3, 4, 5, 6, 7}));
  EXPECT_EQ(six, (std::vector<VertexSet>{{}, {3}, {5}, {3, 5}}));
  EXPECT_THROW(odd_subsets(TreePath({1, 2})), InvalidArgument);
}

TEST(TheoremBasis, PathOfThree) {
  Ring r(3);
  auto b = polynomials(theorem_basis(path_tree(3)));
  EXPECT_TRUE(oracle::same_set(b, oracle::path_family(r, 3)));
}

TEST(TheoremBasis, PathOfFour) {
  Ring r(4);
  auto b = theorem_basis(path_tree(4));
  auto expected = oracle::path_family(r, 4);
  expected.push_back((r.x(1) * r.x(4) + r.y(1) * r.y(4)) * r.y(2) * r.y(3));
  EXPECT_TRUE(oracle::same_set(polynomials(b), expected));
  // the odd-path element is redundant after reduction
  EXPECT_EQ(reduce_basis(polynomials(b)).size(), 5U);
  auto ideal = buchberger(polynomials(edge_generators(path_tree(4)).generators));
  for (const auto& p : polynomials(b)) EXPECT_TRUE(normal_form(p, ideal).is_zero());
}

TEST(TheoremBasis, SingleEdge) {
  EXPECT_EQ(texts(theorem_basis(path_tree(2))), (std::vector<std::string>{"x1*x2 + y1*y2"}));
}

TEST(TheoremBasis, CanonicalOrderAndProvenance) {
  auto b = theorem_basis(LabeledTree(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}}));
  int stage = 0;
  for (const auto& e : b) {
    int s = e.provenance.kind == ProvenanceKind::Edge ? 0 : e.provenance.kind == ProvenanceKind::OddPath ? 1 : 2;
    EXPECT_GE(s, stage);
    stage = s;
    EXPECT_EQ(e.provenance.path.odd_length(), e.provenance.kind != ProvenanceKind::EvenPath);
    for (const auto& t : e.polynomial.terms()) EXPECT_TRUE(t.monomial.is_square_free());
  }
  // path 1..7 has the single length-6 path with odd subsets {}, {3}, {5}, {3, 5}
  EXPECT_EQ(std::count_if(b.begin(), b.end(), [](const BasisElement& e) { return e.provenance.path.length() == 6; }), 4);
}

TEST(CorollaryBasis, StarOfFour) {
  Ring r(4);
  EXPECT_TRUE(oracle::same_set(polynomials(corollary_basis(star_tree(4))), oracle::star_family(r, 4)));
}

TEST(CorollaryBasis, PathContainsFamily) {
  for (int n = 3; n <= 7; ++n) {
    Ring r(n);
    auto b = polynomials(corollary_basis(path_tree(n)));
    for (const auto& p : oracle::path_family(r, n)) EXPECT_NE(std::find(b.begin(), b.end(), p), b.end());
  }
}

TEST(CorollaryBasis, SingleVertexIsEmpty) { EXPECT_TRUE(corollary_basis(path_tree(1)).empty()); }

TEST(CorollaryBasis, NonAscendingNamesVertex) {
  try {
    corollary_basis(star_tree(4, 4));
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("vertex 4"), std::string::npos);
  }
}

TEST(CorollaryBasis, ContainedInTheoremBasis) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 20; ++k) {
    auto t0 = random_tree(2 + k % 7, rng);
    auto t = relabel(t0, ascending_labeling(t0));
    auto full = polynomials(theorem_basis(t));
    for (const auto& p : polynomials(corollary_basis(t))) EXPECT_NE(std::find(full.begin(), full.end(), p), full.end());
  }
}

TEST(Verify, CorollaryBasisOfPathPasses) {
  auto t = path_tree(4);
  auto rep = verify_groebner(corollary_basis(t), edge_generators(t));
  EXPECT_TRUE(rep.pass());
  EXPECT_TRUE(rep.failures.empty());
}

TEST(Verify, EdgeGeneratorsAloneFailCriterion) {
  auto t = path_tree(3);
  auto gens = edge_generators(t);
  auto rep = verify_groebner(gens.generators, gens);
  EXPECT_TRUE(rep.membership);
  EXPECT_TRUE(rep.generation);
  EXPECT_FALSE(rep.criterion);
  ASSERT_EQ(rep.failures.size(), 1U);
  const auto& rem = rep.failures[0].remainder;
  EXPECT_TRUE(rem == "x1*y2*y3 - x3*y1*y2" || rem == "-x1*y2*y3 + x3*y1*y2") << rem;
}

TEST(Verify, SingleEdgePasses) {
  auto gens = edge_generators(path_tree(2));
  EXPECT_TRUE(verify_groebner(gens.generators, gens).pass());
}

TEST(Verify, ForeignElementFailsMembership) {
  auto t = path_tree(3);
  Ring r(3);
  auto b = corollary_basis(t);
  b.push_back({r.x(1) * r.y(3), {ProvenanceKind::Edge, TreePath({1, 3}), {}}});
  auto rep = verify_groebner(b, edge_generators(t));
  EXPECT_FALSE(rep.membership);
  EXPECT_FALSE(rep.pass());
}

TEST(Verify, TheoremBasisUnderPermutations) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 10; ++k) {
    auto t0 = random_tree(3 + k % 4, rng);
    auto t = relabel(t0, random_permutation(t0.size(), rng));
    EXPECT_TRUE(verify_groebner(theorem_basis(t), edge_generators(t)).pass()) << to_edge_list(t);
  }
}

TEST(ReducedBasis, CoefficientsArePlusMinusOne) {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 10; ++k) {
    auto t0 = random_tree(2 + k % 6, rng);
    auto t = relabel(t0, ascending_labeling(t0));
    for (const auto& p : reduce_basis(polynomials(corollary_basis(t))))
      for (const auto& term : p.terms()) EXPECT_TRUE(term.coeff == 1 || term.coeff == -1);
  }
}

TEST(Json, BasisElementShape) {
  auto b = corollary_basis(path_tree(3));
  auto doc = to_json(std::span<const BasisElement>(b));
  ASSERT_EQ(doc.size(), 3U);
  const auto& last = doc[2];
  EXPECT_EQ(last["provenance"]["kind"], "even_path");
  EXPECT_EQ(last["provenance"]["path"], nlohmann::json({1, 2, 3}));
  EXPECT_EQ(last["provenance"]["odd_subset"], nlohmann::json::array());
  EXPECT_EQ(last["polynomial"], "x1*y2*y3 - x3*y1*y2");
  Ring r(3);
  EXPECT_EQ(poly_from_json(last["terms"], r), b[2].polynomial);
}

TEST(Json, VerificationReportShape) {
  auto gens = edge_generators(path_tree(3));
  auto doc = to_json(verify_groebner(gens.generators, gens));
  EXPECT_FALSE(doc["pass"].get<bool>());
  EXPECT_FALSE(doc["checks"]["criterion"].get<bool>());
  EXPECT_EQ(doc["pairs_checked"], 1);
  EXPECT_EQ(doc["failures"][0]["check"], "criterion");
}
