#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "json.hpp"
#include "oracles.hpp"
#include "peerrate/cli.hpp"

using namespace peerrate;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "peerrate");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (golden::data_dir() / name).string(); }

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("peerrate_cli_" + std::string(::testing::UnitTest::GetInstance()
                                              ->current_test_info()
                                              ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

using CliRate = TempDir;
using CliDispersion = TempDir;
using CliScenarios = TempDir;

}  // namespace

TEST(Cli, HelpExitsZero) {
  const Outcome o = invoke({"--help"});
  EXPECT_EQ(o.code, cli::kExitOk);
  EXPECT_NE(o.out.find("rate"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"rate", "--diagonal-policy", "maybe"}).code, cli::kExitUsage);
}

TEST_F(CliRate, PublishedScenarioOne) {
  const Outcome o = invoke({"rate", "--survey", data("table2_scenario1.json")});
  ASSERT_EQ(o.code, cli::kExitOk) << o.err;
  const json j = o.doc();
  EXPECT_EQ(j.at("arithmetic_mean").get<double>(), 3.7);
  EXPECT_NEAR(j.at("degree").at("weighted_rating").get<double>(), 3.9614, 1e-3);
  EXPECT_NEAR(j.at("eigenfactor").at("weighted_rating").get<double>(), 3.9767, 1e-3);
  EXPECT_EQ(j.at("config").at("alpha").get<double>(), 0.85);
  EXPECT_EQ(j.at("config").at("command"), "rate");
}

TEST_F(CliRate, CsvInputWithUniformNetwork) {
  const std::string r = write("r.csv", "rating\n2\n3\n5\n");
  const std::string c = write("c.csv", "0,1,1\n1,0,1\n1,1,0\n");
  const Outcome o = invoke({"rate", "--ratings-csv", r, "--competence-csv", c});
  ASSERT_EQ(o.code, cli::kExitOk) << o.err;
  const json j = o.doc();
  EXPECT_NEAR(j.at("degree").at("weighted_rating").get<double>(), 10.0 / 3, 1e-12);
  EXPECT_NEAR(j.at("eigenfactor").at("weighted_rating").get<double>(), 10.0 / 3, 1e-12);
}

TEST_F(CliRate, DegenerateNetworkExitsThreeWithoutOutput) {
  const std::string s = write("s.json", R"({"ratings": [1, 5, 3],
      "competence": [[0, 0, 0], [0, 0, 0], [0, 0, 0]]})");
  const Outcome o = invoke({"rate", "--survey", s});
  EXPECT_EQ(o.code, cli::kExitDegenerate);
  EXPECT_TRUE(o.out.empty());
  EXPECT_NE(o.err.find("DegenerateNetwork"), std::string::npos);
}

TEST_F(CliRate, NoConvergenceExitsFour) {
  const Outcome o =
      invoke({"rate", "--survey", data("table2_scenario1.json"), "--max-iter", "1"});
  EXPECT_EQ(o.code, cli::kExitNoConvergence);
  EXPECT_TRUE(o.out.empty());
}

TEST_F(CliRate, InvalidInputExitsTwo) {
  const std::string s = write("s.json", R"({"ratings": [1, 9],
      "competence": [[0, 1], [1, 0]]})");
  EXPECT_EQ(invoke({"rate", "--survey", s}).code, cli::kExitInvalidInput);
  EXPECT_EQ(invoke({"rate", "--survey", data("table2_scenario1.json"), "--alpha", "1.5"}).code,
            cli::kExitInvalidInput);
  EXPECT_EQ(invoke({"rate"}).code, cli::kExitInvalidInput);
  EXPECT_EQ(invoke({"rate", "--survey", (dir_ / "missing.json").string()}).code,
            cli::kExitInvalidInput);
}

TEST_F(CliRate, DiagonalPolicy) {
  const std::string s = write("s.json", R"({"ratings": [4, 2],
      "competence": [[1, 1], [1, 0]]})");
  const Outcome coerced = invoke({"rate", "--survey", s});
  ASSERT_EQ(coerced.code, cli::kExitOk);
  EXPECT_NE(coerced.err.find("warning"), std::string::npos);
  EXPECT_EQ(coerced.doc().at("coerced_diagonal"), json::array({0}));
  EXPECT_EQ(invoke({"rate", "--survey", s, "--diagonal-policy", "reject"}).code,
            cli::kExitInvalidInput);
}

TEST_F(CliRate, OutputFile) {
  const std::string path = (dir_ / "report.json").string();
  const Outcome o = invoke({"rate", "--survey", data("table2_scenario6.json"), "-o", path});
  ASSERT_EQ(o.code, cli::kExitOk);
  EXPECT_TRUE(o.out.empty());
  std::ifstream in(path);
  const json j = json::parse(in);
  EXPECT_NEAR(j.at("degree").at("weighted_rating").get<double>(), 4.0643, 1e-3);
  EXPECT_EQ(j.at("config").at("output"), path);
}

TEST_F(CliDispersion, PublishedHelpfulness) {
  const Outcome o = invoke({"dispersion", "--ratings-csv", data("table1_helpfulness.csv")});
  ASSERT_EQ(o.code, cli::kExitOk) << o.err;
  const json a = o.doc().at("aggregate");
  EXPECT_EQ(a.at("total_n"), 2224);
  EXPECT_NEAR(a.at("pct_dev2plus").get<double>(), 29.18, 0.01);
  EXPECT_NE(o.err.find("29.18%"), std::string::npos);
  EXPECT_EQ(o.doc().at("form"), "precounted");
}

TEST_F(CliDispersion, LongFormAndMinimumFilter) {
  const std::string csv = write("r.csv",
                                "label,rating\nA,4\nA,4\nA,4\nA,4\nA,4\nB,1\nB,5\n");
  const Outcome o = invoke({"dispersion", "--ratings-csv", csv});
  ASSERT_EQ(o.code, cli::kExitOk) << o.err;
  const json j = o.doc();
  EXPECT_EQ(j.at("form"), "long");
  EXPECT_EQ(j.at("aggregate").at("pct_dev2plus").get<double>(), 0.0);
  ASSERT_EQ(j.at("excluded").size(), 1u);
  EXPECT_EQ(j.at("excluded")[0].at("label"), "B");

  const json all = invoke({"dispersion", "--ratings-csv", csv, "--min-n", "1"}).doc();
  EXPECT_EQ(all.at("aggregate").at("total_n"), 7);
  EXPECT_EQ(all.at("aggregate").at("total_dev3plus"), 1);
}

TEST_F(CliDispersion, BadHeaderExitsTwo) {
  const std::string csv = write("r.csv", "who,what\nA,4\n");
  EXPECT_EQ(invoke({"dispersion", "--ratings-csv", csv}).code, cli::kExitInvalidInput);
}

TEST_F(CliScenarios, PublishedSet) {
  const Outcome o = invoke({"scenarios", "--scenario-file", data("table2_scenarios.json")});
  ASSERT_EQ(o.code, cli::kExitOk) << o.err;
  const json j = o.doc();
  ASSERT_EQ(j.at("results").size(), 6u);
  EXPECT_TRUE(j.at("summary").at("eigenfactor_never_worse").get<bool>());
  EXPECT_GE(j.at("summary").at("mean_degree_reduction_pct").get<double>(), 85.0);
  EXPECT_EQ(j.at("config").at("scenario_file"), data("table2_scenarios.json"));
}

TEST_F(CliScenarios, AlphaOverride) {
  const Outcome o = invoke(
      {"scenarios", "--scenario-file", data("table2_scenarios.json"), "--alpha", "0.5"});
  ASSERT_EQ(o.code, cli::kExitOk) << o.err;
  const json first = o.doc().at("results")[0];
  const auto c = golden::matrix(1);
  const auto v = oracle::eigenfactor_from_counts(c, oracle::stationary_direct(c, 0.5));
  EXPECT_NEAR(first.at("eigenfactor").at("weighted_rating").get<double>(),
              oracle::dot(v, golden::kRatings), 1e-10);
  EXPECT_EQ(o.doc().at("config").at("alpha").get<double>(), 0.5);
}
