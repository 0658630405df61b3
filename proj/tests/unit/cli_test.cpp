#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "asymclust/cli.hpp"
#include "asymclust/io.hpp"

namespace asymclust {
namespace {

const std::filesystem::path kData = ASYMCLUST_TEST_DATA;

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = cli_main(args, out, err);
  return {status, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("asymclust_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST_F(CliTest, ClusterTwoNodeReciprocal) {
  const auto r = run({"cluster", (kData / "two_node.csv").string(), "--method", "reciprocal"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["results"].size(), 1u);
  EXPECT_EQ(j["results"][0]["ultrametric"]["matrix"][0][1].get<double>(), 3.0);
  EXPECT_EQ(j["results"][0]["newick"], "(p:3,q:3);");
}

TEST_F(CliTest, ClusterBothWithCut) {
  const auto r = run({"cluster", (kData / "three_node.json").string(), "--method", "both", "--cut", "2.5"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["results"].size(), 2u);
  EXPECT_EQ(j["results"][0]["method"], "nonreciprocal");
  EXPECT_EQ(j["results"][1]["method"], "reciprocal");
  EXPECT_EQ(j["results"][0]["cuts"][0]["blocks"], nlohmann::json::parse(R"([["x1","x2","x3"]])"));
  EXPECT_EQ(j["results"][1]["cuts"][0]["blocks"], nlohmann::json::parse(R"([["x1","x2"],["x3"]])"));
  EXPECT_EQ(j["results"][1]["ultrametric"]["matrix"],
            nlohmann::json::parse("[[0,2,3],[2,0,3],[3,3,0]]"));
}

TEST_F(CliTest, ClusterWritesFiles) {
  const auto u = dir_ / "u.csv";
  const auto t = dir_ / "t.nwk";
  const auto r = run({"cluster", (kData / "three_node.json").string(), "--method", "both",
                      "--output-ultrametric", u.string(), "--output-tree", t.string()});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(read_file(dir_ / "t.reciprocal.nwk"), "((x1:2,x2:2):1,x3:3);\n");
  EXPECT_EQ(read_file(dir_ / "u.nonreciprocal.csv"), "x1,x2,x3\n0,2,2\n2,0,2\n2,2,0\n");
}

TEST_F(CliTest, SingleLinkageOnAsymmetricInputIsValidationFailure) {
  const auto r = run({"cluster", (kData / "three_node.json").string(), "--method", "single-linkage"});
  EXPECT_EQ(r.status, kExitValidation);
  EXPECT_NE(r.err.find("AsymmetricInput"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, InvalidMatrixIsValidationFailure) {
  const auto r = run({"cluster", (kData / "negative.csv").string()});
  EXPECT_EQ(r.status, kExitValidation);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_NE(run({"frobnicate"}).status, 0);
  EXPECT_NE(run({}).status, 0);
  EXPECT_NE(run({"cluster"}).status, 0);
  EXPECT_NE(run({"trust", (kData / "cycle.json").string()}).status, 0);
  EXPECT_NE(run({"cluster", "x.csv", "--method", "average"}).status, 0);
  EXPECT_EQ(run({"--help"}).status, 0);
}

TEST_F(CliTest, VerifyAllPasses) {
  const auto r = run({"verify", "--suite", "all", "--trials", "30", "--seed", "7"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["check"], "all");
  EXPECT_EQ(j["subchecks"].size(), 3u);
}

TEST_F(CliTest, TrustReport) {
  const auto r = run({"trust", (kData / "cycle.json").string(), "--delta", "0.75"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  for (const auto& p : j["pairs"]) EXPECT_EQ(p["class"], "AMBIGUOUS");
}

TEST_F(CliTest, IngestThenCluster) {
  const auto m = dir_ / "m.csv";
  auto r = run({"ingest", (kData / "messages.csv").string(), "--output", m.string()});
  ASSERT_EQ(r.status, 0) << r.err;
  r = run({"cluster", m.string(), "--method", "both"});
  ASSERT_EQ(r.status, 0) << r.err;
  r = run({"ingest", (kData / "messages.csv").string(), "--policy", "scc"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "alice,bob,carol,dave,erin");
}

TEST_F(CliTest, CompareTreeAgainstRoundTrippedUltrametric) {
  const auto t = dir_ / "t.json";
  const auto u = dir_ / "u.csv";
  ASSERT_EQ(run({"cluster", (kData / "three_node.json").string(), "--method", "nonreciprocal",
                 "--output-tree", t.string(), "--output-ultrametric", u.string()})
                .status,
            0);
  const auto r = run({"compare", t.string(), u.string()});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["max_abs_difference"].get<double>(), 0.0);
}

}  // namespace
}  // namespace asymclust
