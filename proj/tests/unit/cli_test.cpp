#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "commands.hpp"
#include "criteria.hpp"

namespace shf::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("shf_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
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

TEST_F(CliTest, VerifyIdentityPasses) {
  const std::string f = write("id5.txt", "10000\n01000\n00100\n00010\n00001\n");
  EXPECT_EQ(run_cli({"verify", f, "--type", "1,3"}).code, kOk);
}

TEST_F(CliTest, VerifyDuplicateColumnsFailsWithWitness) {
  const std::string f = write("dup.txt", "10010\n01000\n00100\n00001\n");
  const CliRun r = run_cli({"verify", f, "--type", "1,3", "--json"});
  EXPECT_EQ(r.code, kPropertyFails);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["command"], "verify");
  EXPECT_FALSE(j["verdict"].get<bool>());
  ASSERT_TRUE(j.contains("witness"));
  EXPECT_EQ(j["witness"].size(), 4u);
  EXPECT_EQ(j["stats"]["failing_query"][0][0], 0);
  const CliRun text = run_cli({"verify", f, "--type", "1,3"});
  EXPECT_NE(text.out.find("unseparated"), std::string::npos);
}

TEST_F(CliTest, VerifyFrameproof) {
  const std::string f = write("np.txt", "1100\n0110\n1010\n0001\n");
  EXPECT_EQ(run_cli({"verify", f, "--frameproof", "2"}).code, kOk);
  EXPECT_EQ(run_cli({"verify", f, "--frameproof", "3"}).code, kPropertyFails);
}

TEST_F(CliTest, UsageErrors) {
  const std::string good = write("id.txt", "10\n01\n");
  const std::string bad = write("bad.txt", "10\n011\n");
  EXPECT_EQ(run_cli({"verify", bad, "--type", "1,1"}).code, kUsageError);
  EXPECT_EQ(run_cli({"verify", good}).code, kUsageError);
  EXPECT_EQ(run_cli({"verify", good, "--type", "x"}).code, kUsageError);
  EXPECT_EQ(run_cli({"verify", (dir_ / "missing.txt").string(), "--type", "1,1"}).code, kUsageError);
  EXPECT_EQ(run_cli({"nonsense"}).code, kUsageError);
  EXPECT_EQ(run_cli({}).code, kUsageError);
  EXPECT_EQ(run_cli({"count", "5", "3", "--overlap", "4", "4", "1"}).code, kUsageError);
  EXPECT_EQ(run_cli({"verify", good, "--type", "1,1", "--budget", "1"}).code, kUsageError);
  EXPECT_EQ(run_cli({"--help"}).code, kOk);
}

TEST_F(CliTest, CountValues) {
  EXPECT_NE(run_cli({"count", "9", "3", "--row-type", "4"}).out.find("separates 60"), std::string::npos);
  const Json ov = Json::parse(run_cli({"count", "9", "3", "--overlap", "4", "4", "1", "--json"}).out);
  EXPECT_EQ(ov["stats"]["theta"], 6);
  const Json t = Json::parse(run_cli({"count", "5", "3", "--json"}).out);
  EXPECT_EQ(t["stats"]["T"], 20);
  const Json chain = Json::parse(run_cli({"count", "7", "3", "--chain", "--json"}).out);
  EXPECT_FALSE(chain["stats"]["binomial_chain"].get<bool>());
}

TEST_F(CliTest, CountDiagnosesMatrix) {
  const std::string f = write("m.txt", "100000\n010000\n001000\n000100\n000010\n110000\n");
  const Json j = Json::parse(run_cli({"count", "6", "3", "--matrix", f, "--json"}).out);
  EXPECT_EQ(j["stats"]["mu"], Json({10, 10, 10, 10, 10, 0}));
  EXPECT_EQ(j["stats"]["uncovered"], 10);
  EXPECT_FALSE(j["verdict"].get<bool>());
  EXPECT_EQ(run_cli({"count", "5", "3", "--matrix", f}).code, kUsageError);
}

TEST_F(CliTest, Bounds) {
  const Json j = Json::parse(run_cli({"bounds", "5", "3", "2", "--json"}).out);
  EXPECT_EQ(j["command"], "bounds");
  const CliRun warn = run_cli({"bounds", "6", "2", "5"});
  EXPECT_EQ(warn.code, kOk);
  EXPECT_FALSE(warn.err.empty());
}

TEST_F(CliTest, ConstructRoundTripsThroughVerify) {
  const std::string out = (dir_ / "b.txt").string();
  EXPECT_EQ(run_cli({"construct", "block-extend", "--k", "2", "--out", out}).code, kOk);
  EXPECT_EQ(run_cli({"verify", out, "--type", "1,2"}).code, kOk);
  EXPECT_EQ(run_cli({"construct", "non-perm-4x4"}).out, "1100\n0110\n1010\n0001\n");
  EXPECT_EQ(run_cli({"construct", "weight-one", "--N", "2", "--q", "3"}).out, "1200\n0012\n");
  EXPECT_EQ(run_cli({"construct", "identity-plus-ones", "--N", "2"}).code, kUsageError);
  EXPECT_EQ(run_cli({"construct", "nope"}).code, kUsageError);
}

TEST_F(CliTest, SearchJson) {
  const CliRun r = run_cli({"search", "4", "2", "--json", "--deterministic"});
  EXPECT_EQ(r.code, kOk);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["stats"]["best_n"], 5);
  EXPECT_FALSE(j["verdict"].get<bool>());
  EXPECT_TRUE(j["complete"].get<bool>());
  EXPECT_EQ(j["witness"].size(), 4u);
  EXPECT_FALSE(j["stats"].contains("elapsed_s"));

  const CliRun sq = run_cli({"search", "5", "3", "--enumerate-square", "--json"});
  EXPECT_EQ(sq.code, kOk);
  EXPECT_TRUE(Json::parse(sq.out)["verdict"].get<bool>());
}

TEST_F(CliTest, SearchByteIdenticalAcrossThreads) {
  const CliRun a = run_cli({"search", "6", "3", "--json", "--deterministic", "--threads", "1", "--symmetry", "columns"});
  const CliRun b = run_cli({"search", "6", "3", "--json", "--deterministic", "--threads", "4", "--symmetry", "columns"});
  EXPECT_EQ(a.out, b.out);
  const CliRun c = run_cli({"search", "4", "2", "--enumerate-square", "--json", "--deterministic", "--threads", "3"});
  const CliRun d = run_cli({"search", "4", "2", "--enumerate-square", "--json", "--deterministic"});
  EXPECT_EQ(c.out, d.out);
}

TEST_F(CliTest, Scan) {
  const CliRun r = run_cli({"scan", "3", "4", "5", "--json"});
  EXPECT_EQ(r.code, kOk);
  const Json j = Json::parse(r.out);
  EXPECT_FALSE(j["verdict"].get<bool>());
}

TEST(Criteria, FormattingAndCount) {
  acceptance::CriterionResult r;
  r.id = 3;
  r.title = "constants";
  r.status = acceptance::Status::pass;
  const std::string line = acceptance::format_line(r);
  EXPECT_NE(line.find("PASS"), std::string::npos);
  EXPECT_EQ(std::string(acceptance::status_name(acceptance::Status::incomplete)), "INCOMPLETE");
  EXPECT_EQ(acceptance::run_criterion(3, acceptance::Level::quick).status, acceptance::Status::pass);
}

TEST(DefaultThreads, ReadsEnvironment) {
  ::setenv("SHF_THREADS", "3", 1);
  EXPECT_EQ(default_threads(), 3u);
  ::setenv("SHF_THREADS", "zero", 1);
  EXPECT_EQ(default_threads(), 1u);
  ::unsetenv("SHF_THREADS");
  EXPECT_EQ(default_threads(), 1u);
}

}  // namespace
}  // namespace shf::cli
