#include "hsec/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"

namespace hsec {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, RadiusText) {
  const CliRun r = run({"radius", "--class", "general", "--n", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("radius        0.108193"), std::string::npos) << r.out;
}

TEST(Cli, RadiusJson) {
  const CliRun r = run({"radius", "--class", "convex", "--n", "3", "--m", "5", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("m"), 5);
  EXPECT_GT(j.at("radius").get<double>(), 0.0);
  EXPECT_EQ(j.at("sign_changes"), 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"radius", "--class", "general", "--n", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"radius", "--class", "starlike", "--n", "4"}).code, kExitUsage);
  EXPECT_EQ(run({"radius", "--n", "4", "--format", "svg"}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"thresholds", "--class", "general", "--targets", "1.5"}).code, kExitUsage);
  EXPECT_EQ(run({"thresholds", "--class", "general", "--targets", "0.5", "--route", "ctc"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"table", "--n-list", "2,x"}).code, kExitUsage);
}

TEST(Cli, HelpIsOk) { EXPECT_EQ(run({"--help"}).code, kExitOk); }

TEST(Cli, TableCsv) {
  const CliRun r = run({"table", "--class", "general", "--n-list", "2,3,4,5,10", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream is(r.out);
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "n,radius,lower_bound");
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  EXPECT_EQ(rows, 5);
  EXPECT_NE(r.out.find("10,0.337088"), std::string::npos);
}

TEST(Cli, EmptyTable) {
  const CliRun r = run({"table", "--class", "convex", "--n-list", "", "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "n,radius,lower_bound\n");
}

TEST(Cli, Thresholds) {
  const CliRun r = run({"thresholds", "--class", "general", "--targets", "0.25,0.5,0.75", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0].at("n"), 7);
  EXPECT_EQ(j[1].at("n"), 22);
  EXPECT_EQ(j[2].at("n"), 78);
  const CliRun ctc = run({"thresholds", "--class", "convex", "--targets", "0.5,0.75", "--route", "ctc", "--format", "csv"});
  EXPECT_NE(ctc.out.find("0.5,17,"), std::string::npos) << ctc.out;
  EXPECT_NE(ctc.out.find("0.75,46,"), std::string::npos) << ctc.out;
}

TEST(Cli, VerifySingleClaim) {
  const CliRun ok = run({"verify", "distortion-min-rule"});
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_NE(ok.out.find("PASS distortion-min-rule"), std::string::npos);
  const CliRun fail = run({"verify", "T-limit-half"});
  EXPECT_EQ(fail.code, kExitClaimFailure);
  EXPECT_NE(fail.out.find("FAIL T-limit-half"), std::string::npos);
}

TEST(Cli, ScanIdentity) {
  const CliRun r = run({"scan", "--identity", "--radial", "16", "--angular", "32", "--t-points", "16", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("family"), "identity");
  EXPECT_NEAR(j.at("empirical_radius").get<double>(), 0.999, 1e-12);
  EXPECT_EQ(run({"scan", "--identity", "--radial", "2"}).code, kExitUsage);
}

TEST(Cli, PlotWritesFile) {
  const std::string path = std::string(HSEC_TEST_TMPDIR) + "/cli_psi.svg";
  std::filesystem::remove(path);
  const CliRun r = run({"plot", "psi-curve", "--n", "2", "--out", path});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_NE(ss.str().find("id=\"root\""), std::string::npos);
}

TEST(Cli, PlotIoFailure) {
  const std::string path = std::string(HSEC_TEST_TMPDIR) + "/no/such/dir/x.svg";
  EXPECT_EQ(run({"plot", "psi-curve", "--n", "2", "--out", path}).code, kExitIo);
  EXPECT_EQ(run({"plot", "pie-chart", "--n", "2", "--out", "x.svg"}).code, kExitUsage);
}

}  // namespace
}  // namespace hsec
