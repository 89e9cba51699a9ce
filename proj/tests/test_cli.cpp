#include <gtest/gtest.h>

#include <sstream>

#include "lss/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = lss::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

const std::string kPath4 = "4\n1 2\n2 3\n3 4\n";
const std::string kStar4 = "4\n1 2\n1 3\n1 4\n";

}  // namespace

TEST(Cli, DimOnPath) {
  auto r = run({"dim", "--json"}, kPath4);
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json_of(r);
  EXPECT_EQ(j["dim"], 5);
  EXPECT_EQ(j["agree"], true);
  EXPECT_EQ(j["routes"]["complex"], 5);
}

TEST(Cli, BasisOnStar) {
  auto r = run({"basis", "--json"}, kStar4);
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json_of(r);
  EXPECT_EQ(j["size"], 6);
  EXPECT_EQ(j["basis"].size(), 6U);
  EXPECT_EQ(j["relabeled"], false);
  auto text = run({"basis"}, kStar4);
  EXPECT_NE(text.out.find("6 elements"), std::string::npos);
}

TEST(Cli, VerifySmallTrees) {
  for (const std::string& t : {kPath4, kStar4, std::string("6\n1 2\n2 3\n2 4\n4 5\n4 6\n"), std::string("2\n1 2\n")}) {
    EXPECT_EQ(run({"verify"}, t).code, 0) << t;
    EXPECT_EQ(run({"verify", "--full"}, t).code, 0) << t;
  }
  auto j = json_of(run({"verify", "--json"}, kPath4));
  EXPECT_EQ(j["report"]["pass"], true);
}

TEST(Cli, RelabelsNonAscending) {
  const std::string star_last = "4\n4 1\n4 2\n4 3\n";
  auto r = run({"basis", "--json"}, star_last);
  ASSERT_EQ(r.code, 0);
  auto j = json_of(r);
  EXPECT_EQ(j["relabeled"], true);
  // breadth-first from vertex 1: 1, then the center 4, then 2 and 3
  EXPECT_EQ(j["permutation"], nlohmann::json({1, 3, 4, 2}));
  auto refused = run({"basis", "--no-relabel"}, star_last);
  EXPECT_EQ(refused.code, 1);
  EXPECT_NE(refused.err.find("vertex 4"), std::string::npos);
  EXPECT_EQ(run({"basis", "--full"}, star_last).code, 0);
}

TEST(Cli, LabelVerb) {
  auto j = json_of(run({"label", "--json"}, "3\n3 1\n3 2\n"));
  EXPECT_EQ(j["ascending"], false);
  EXPECT_EQ(j["tree"]["n"], 3);
  auto text = run({"label"}, kPath4);
  EXPECT_NE(text.out.find("ascending: yes"), std::string::npos);
}

TEST(Cli, InitialVerb) {
  auto j = json_of(run({"initial", "--json"}, "3\n1 2\n2 3\n"));
  EXPECT_EQ(j["generators"], nlohmann::json({"x1*x2", "x1*y2*y3", "x2*x3"}));
}

TEST(Cli, ComplexAndHilbert) {
  auto c = json_of(run({"complex", "--json"}, kStar4));
  EXPECT_EQ(c["f"][2], 25);
  EXPECT_EQ(c["dim_complex"], 6);
  auto h = json_of(run({"hilbert", "--json", "--expand", "3"}, kPath4));
  EXPECT_EQ(h["reduced"]["numerator"], nlohmann::json({1, 3, 3, 1}));
  EXPECT_EQ(h["reduced"]["denominator_power"], 5);
  EXPECT_EQ(h["reduced"]["normalized"], true);
  EXPECT_EQ(h["series"]["normalized"], false);
  EXPECT_EQ(h["expansion"].size(), 4U);
  auto text = run({"hilbert"}, kPath4);
  EXPECT_NE(text.out.find("reduced: (1 + 3*t + 3*t^2 + t^3) / (1 - t)^5"), std::string::npos);
}

TEST(Cli, ReportIsConsistent) {
  auto r = run({"report", "--json"}, kStar4);
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json_of(r);
  EXPECT_EQ(j["dim"]["dim"], j["complex"]["dim_complex"]);
  EXPECT_EQ(j["verify"]["pass"], true);
  EXPECT_EQ(j["basis_size"], 6);
}

TEST(Cli, RandomReportSkipsOverCap) {
  auto r = run({"report", "--json", "--random", "15", "--seed", "4"}, "");
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json_of(r);
  EXPECT_TRUE(j["complex"].is_null());
  EXPECT_TRUE(j["verify"].is_null());
  EXPECT_EQ(j["dim"]["agree"], true);
  EXPECT_EQ(j["tree"]["n"], 15);
}

TEST(Cli, ExitCodesAreDistinct) {
  auto bad_tree = run({"dim"}, "3\n1 2\n2 3\n3 1\n");
  EXPECT_EQ(bad_tree.code, 1);
  EXPECT_NE(bad_tree.err.find("not a tree"), std::string::npos);
  auto bad_text = run({"dim"}, "3\n1 two\n");
  EXPECT_EQ(bad_text.code, 1);
  EXPECT_NE(bad_text.err.find("malformed"), std::string::npos);
  auto unknown = run({"dim", "--frobnicate"}, kPath4);
  EXPECT_EQ(unknown.code, 4);
  EXPECT_EQ(run({"explode"}, kPath4).code, 4);
  EXPECT_EQ(run({}, kPath4).code, 4);
  auto cap = run({"complex", "--cap", "3"}, kPath4);
  EXPECT_EQ(cap.code, 3);
  EXPECT_NE(cap.err.find("cap"), std::string::npos);
}

TEST(Cli, DeterministicOutput) {
  for (const std::string verb : {"basis", "initial", "complex", "hilbert", "dim", "report"}) {
    auto a = run({verb, "--json"}, kStar4);
    auto b = run({verb, "--json"}, kStar4);
    EXPECT_EQ(a.out, b.out) << verb;
    EXPECT_NO_THROW(nlohmann::json::parse(a.out)) << verb;
  }
  EXPECT_EQ(run({"dim", "--random", "30", "--seed", "9"}, "").out, run({"dim", "--random", "30", "--seed", "9"}, "").out);
}

TEST(Cli, VerboseLogsToErrorStreamOnly) {
  auto quiet = run({"dim", "--json"}, kPath4);
  auto loud = run({"dim", "--json", "--verbose"}, kPath4);
  EXPECT_EQ(quiet.out, loud.out);
  EXPECT_TRUE(quiet.err.empty());
  EXPECT_FALSE(loud.err.empty());
}

TEST(Cli, JsonTreeInput) {
  auto r = run({"dim", "--json"}, R"({"n": 3, "edges": [[1, 2], [2, 3]]})");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r)["dim"], 4);
}
