#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace qseries::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "qseries");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qseries_cli_test_" + name);
}

TEST(Cli, ExpandA3) {
  const Result r = run_args({"expand", "f3*f6/(f1*f2)", "-N", "5"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out, "0 1\n1 1\n2 3\n3 3\n4 8\n5 9\n");
}

TEST(Cli, ExpandConstantCsv) {
  const Result r = run_args({"expand", "1", "--order", "3", "--format", "csv"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out, "n,coefficient\n0,1\n1,0\n2,0\n3,0\n");
}

TEST(Cli, ExpandLaurentJson) {
  const Result r = run_args({"expand", "f1*f2/(q*f9*f18)", "-N", "2", "--format", "json"});
  ASSERT_EQ(r.code, kExitPass);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["first"], -1);
  EXPECT_EQ(j["valid_to"], 2);
  EXPECT_EQ(j["coefficients"][0], "1");
  EXPECT_EQ(j["coefficients"].size(), 4u);
}

TEST(Cli, ExpandSyntaxErrorIsUsage) {
  const Result r = run_args({"expand", "f1^^2"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("position 3"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_args({}).code, kExitUsage);
  EXPECT_EQ(run_args({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run_args({"verify", "nothing"}).code, kExitUsage);
  EXPECT_EQ(run_args({"expand", "f1", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run_args({"expand", "f1", "-N", "ten"}).code, kExitUsage);
  EXPECT_EQ(run_args({"dump", "matrix", "--depth", "0"}).code, kExitUsage);
  EXPECT_EQ(run_args({"expand", "q^5*f1", "-N", "2"}).code, kExitUsage);
  EXPECT_EQ(run_args({"--help"}).code, kExitPass);
}

TEST(Cli, TheoremBudgetTooSmall) {
  const Result r = run_args({"verify", "theorems", "--budget", "100"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
}

TEST(Cli, VerifyMatrixPrintsRows) {
  const Result r = run_args({"verify", "matrix", "--rows", "9"});
  EXPECT_EQ(r.code, kExitPass) << r.out;
  EXPECT_NE(r.out.find("row 4: 0 18 324 2187\n"), std::string::npos);
  EXPECT_NE(r.out.find("row 9: 0 0 1 324 19683 492075 6377292 43046721 129140163\n"), std::string::npos);
  EXPECT_NE(r.out.find("RESULT pass"), std::string::npos);
}

TEST(Cli, DumpMatrixCsv) {
  const Result r = run_args({"dump", "matrix", "--depth", "6", "--format", "csv"});
  ASSERT_EQ(r.code, kExitPass);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> all;
  while (std::getline(lines, line)) all.push_back(line);
  ASSERT_EQ(all.size(), 7u);
  EXPECT_EQ(all[0], "i,m1,m2,m3,m4,m5,m6");
  EXPECT_EQ(all[6], "6,0,1,126,3645,39366,177147");
}

TEST(Cli, DumpVectors) {
  const Result r = run_args({"dump", "vectors", "--family", "Y", "--depth", "1"});
  ASSERT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("Y_1 = (54, 972, 6561)\n  nu = (3, 5, 8)"), std::string::npos);
  const Result j = run_args({"dump", "vectors", "--family", "Y", "--depth", "1", "--format", "json"});
  const auto doc = nlohmann::json::parse(j.out);
  ASSERT_EQ(doc.size(), 2u);
  EXPECT_EQ(doc[1]["entries"][2], "6561");
  EXPECT_EQ(doc[1]["nu"][0], 3);
}

TEST(Cli, SmallTheoremSuiteJson) {
  const Result r = run_args({"verify", "theorems", "--alpha-t1", "1", "--alpha-t2", "1", "--budget",
                             "2000", "--format", "json"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["suite"], "theorems");
  EXPECT_EQ(doc["result"], "pass");
  const auto& first = doc["items"][0];
  EXPECT_EQ(first["claim"]["modulus"], "1");
  EXPECT_EQ(first["result"], "pass");
  EXPECT_FALSE(first.contains("elapsed_ms"));
}

TEST(Cli, ReportsAreDeterministic) {
  const std::vector<std::string> args = {"verify", "theorems", "--alpha-t1", "1", "--alpha-t2", "2",
                                         "--budget", "3000", "--format", "json"};
  EXPECT_EQ(run_args(args).out, run_args(args).out);
}

TEST(Cli, CustomClaims) {
  Result r = run_args({"verify", "claim", "--claim", "p,5,4,5", "--n-max", "40"});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  EXPECT_NE(r.out.find("PASS p/5n+4"), std::string::npos);
  r = run_args({"verify", "claim", "--claim", "a9,27,26,3^3"});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  r = run_args({"verify", "claim", "--claim", "p,5,3,5", "--n-max", "10", "--format", "json"});
  EXPECT_EQ(r.code, kExitFail);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["result"], "fail");
  EXPECT_EQ(doc["items"][0]["failures"][0], 0);
  EXPECT_EQ(run_args({"verify", "claim"}).code, kExitUsage);
  EXPECT_EQ(run_args({"verify", "claim", "--claim", "p,5,7,5"}).code, kExitUsage);
  EXPECT_EQ(run_args({"verify", "claim", "--claim", "z,5,3,5"}).code, kExitUsage);
  EXPECT_EQ(run_args({"verify", "claim", "--claim", "p,5,3"}).code, kExitUsage);
}

TEST(Cli, OutputFile) {
  const auto path = temp_path("out.csv");
  std::filesystem::remove(path);
  const Result r = run_args({"dump", "matrix", "--depth", "3", "--format", "csv", "--out", path.string()});
  ASSERT_EQ(r.code, kExitPass);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(content.str(), "i,m1,m2,m3\n1,3,0,0\n2,2,27,0\n3,1,27,243\n");
  std::filesystem::remove(path);
  EXPECT_EQ(run_args({"dump", "matrix", "--out", "/nonexistent-dir/x.csv"}).code, kExitUsage);
}

TEST(Cli, ConfigFileAndPrecedence) {
  const auto path = temp_path("config.ini");
  {
    std::ofstream cfg(path);
    cfg << "# flat key=value settings\norder=4\nformat=csv\n";
  }
  Result r = run_args({"expand", "f1", "--config", path.string()});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  EXPECT_EQ(r.out, "n,coefficient\n0,1\n1,-1\n2,-1\n3,0\n4,0\n");
  r = run_args({"expand", "f1", "--config", path.string(), "-N", "2", "--format", "text"});
  EXPECT_EQ(r.out, "0 1\n1 -1\n2 -1\n");
  {
    std::ofstream cfg(path);
    cfg << "no_such_key=1\n";
  }
  EXPECT_EQ(run_args({"expand", "f1", "--config", path.string()}).code, kExitUsage);
  std::filesystem::remove(path);
  EXPECT_EQ(run_args({"expand", "f1", "--config", path.string()}).code, kExitUsage);
}

}  // namespace
}  // namespace qseries::cli
