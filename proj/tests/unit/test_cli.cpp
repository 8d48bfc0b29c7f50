#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

namespace {

std::string data(const std::string& file) { return std::string(LSUG_TEST_DATA_DIR) + "/" + file; }

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = lsug::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST(Cli, RelationsThreeVectorExample) {
  const auto all = invoke({"relations", "--lattice", "chain:11", "--x", "(6,3,5)", "--y", "(7,2,9)"});
  EXPECT_EQ(all.code, 0);
  EXPECT_TRUE(contains(all.out, "g-comonotone: true\n")) << all.out;
  EXPECT_TRUE(contains(all.out, "comonotone: false (witness indices {1,3})")) << all.out;
  EXPECT_TRUE(contains(all.out, "comparable: false")) << all.out;

  const auto one = invoke({"relations", "--lattice", "chain:11", "--x", "(6,3,5)", "--y", "(7,2,9)", "--kind",
                           "g-comonotone"});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, "g-comonotone: true\n");
  const auto no = invoke({"relations", "--lattice", "chain:11", "--x", "(6,3,5)", "--y", "(7,2,9)", "--kind",
                          "comparable"});
  EXPECT_EQ(no.code, 1);
}

TEST(Cli, RecognizeRejectsH) {
  const auto r = invoke({"recognize", "--lattice", "chain:3", "--table", data("h.tbl")});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "not_sugeno\n")) << r.out;
  EXPECT_TRUE(contains(r.out, "witness boolean-inf-homogeneity c=1 x=(0,2) lhs=2 rhs=1")) << r.out;

  const auto d = invoke({"recognize", "--lattice", "chain:3", "--table", data("h.tbl"), "--method", "direct"});
  EXPECT_EQ(d.code, 1);
  EXPECT_TRUE(contains(d.out, "pairs_checked 9")) << d.out;
}

TEST(Cli, RecognizeMedianPrintsCapacity) {
  const auto r = invoke({"recognize", "--lattice", "chain:3", "--table", data("median.tbl")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "sugeno\n"));
  EXPECT_TRUE(contains(r.out, "{1} -> 1\n{2} -> 1\n{1,2} -> 2\n")) << r.out;
  EXPECT_TRUE(contains(r.out, "points_verified 9")) << r.out;
}

TEST(Cli, BenchReductionFactor) {
  const auto r = invoke({"bench", "--lattice", "chain:3", "--arity", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "reduction_factor 9/4\n")) << r.out;
  EXPECT_TRUE(contains(r.out, "g_comonotone_pairs (38) != boolean_pairs (12)")) << r.out;
}

TEST(Cli, SugenoAndAxioms) {
  const auto s = invoke({"sugeno", "--lattice", "chain:3", "--capacity", data("half.cap"), "--x", "(2,1)"});
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out, "Su_half(2,1) = 1\n");

  const auto a = invoke({"axioms", "--lattice", "chain:3", "--table", data("h.tbl")});
  EXPECT_EQ(a.code, 1);
  EXPECT_TRUE(contains(a.out, "comonotone-infimal: true")) << a.out;
  EXPECT_TRUE(contains(a.out, "conditions agree: false")) << a.out;
  const auto one = invoke({"axioms", "--lattice", "chain:3", "--table", data("median.tbl"), "--kind",
                           "boolean-inf-homogeneous"});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, "boolean-inf-homogeneous: true (pairs_checked 12)\n");
}

TEST(Cli, ValidateAndRegion) {
  EXPECT_EQ(invoke({"lattice-validate", "--lattice", "file:" + data("cyclic.lat")}).code, 1);
  const auto ok = invoke({"lattice-validate", "--lattice", "file:" + data("diamond.lat")});
  EXPECT_EQ(ok.code, 0);
  EXPECT_TRUE(contains(ok.out, "distributive true")) << ok.out;
  const auto region = invoke({"region", "--lattice", "chain:5", "--x", "(3,1)"});
  EXPECT_EQ(region.code, 0);
  EXPECT_TRUE(contains(region.out, "size 17\n")) << region.out;
  const auto big = invoke({"region", "--lattice", "chain:5", "--x", "(3,1)", "--limit", "10"});
  EXPECT_EQ(big.code, 2);
  EXPECT_TRUE(contains(big.err, "25")) << big.err;
}

TEST(Cli, UsageAndInputErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  const auto flag = invoke({"bench", "--lattice", "chain:3", "--arity", "2", "--bogus"});
  EXPECT_EQ(flag.code, 2);
  EXPECT_FALSE(flag.err.empty());
  const auto elem = invoke({"relations", "--lattice", "chain:3", "--x", "(0,7)", "--y", "(0,1)"});
  EXPECT_EQ(elem.code, 2);
  EXPECT_TRUE(contains(elem.err, "error:")) << elem.err;
  EXPECT_EQ(invoke({"recognize", "--lattice", "chain:4", "--table", data("h.tbl")}).code, 2);
  EXPECT_EQ(invoke({"sugeno", "--lattice", "chain:3", "--capacity", data("bad.cap"), "--x", "(1,1)"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::vector<std::string>> commands = {
      {"theorem-suite", "all", "--lattice", "builtin:N5", "--arity", "2"},
      {"theorem-suite", "thm3", "--lattice", "chain:3", "--arity", "2", "--seed", "5"},
      {"bench", "--lattice", "boolean:2", "--arity", "3"},
      {"axioms", "--lattice", "chain:3", "--table", data("h.tbl")}};
  for (const auto& args : commands) {
    const auto a = invoke(args), b = invoke(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
  }
}
