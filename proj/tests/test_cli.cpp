#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "padichg/cli.hpp"

namespace padichg::cli {
namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str()};
}

nlohmann::ordered_json parse(const CliRun& r) { return nlohmann::ordered_json::parse(r.out); }

TEST(Cli, EvalG) {
  const CliRun r = run({"eval-g", "--p", "11", "--r", "3", "--top", "0,1/2,0,1/2", "--bottom", "1/4,3/4,1/4,3/4", "--t",
                     "4", "--bound", "150"});
  ASSERT_EQ(r.code, kPass) << r.out;
  const auto j = parse(r);
  EXPECT_EQ(j["integer"], 68);
  EXPECT_EQ(j["precision"], 3);
  EXPECT_TRUE(j.contains("padic_value"));
  EXPECT_TRUE(j.contains("elapsed_ms"));
}

TEST(Cli, EvalGPrecisionOverridesUpwardOnly) {
  const std::vector<std::string> base{"eval-g", "--p", "5", "--top", "1/2,1/2", "--bottom", "0,0", "--t", "2"};
  auto with = [&](const char* n) {
    auto a = base;
    a.insert(a.end(), {"--precision", n});
    return parse(run(a))["precision"].get<int>();
  };
  const int automatic = parse(run(base))["precision"].get<int>();
  EXPECT_EQ(with("1"), automatic);
  EXPECT_EQ(with("6"), 6);
}

TEST(Cli, EvalGErrors) {
  CliRun r = run({"eval-g", "--p", "11", "--top", "1/2", "--bottom", "0", "--t", "0"});
  EXPECT_EQ(r.code, kMathError);
  EXPECT_EQ(parse(r)["error"], "ZeroArgument");
  r = run({"eval-g", "--p", "4", "--top", "1/2", "--bottom", "0", "--t", "1"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_EQ(parse(r)["error"], "NotPrime");
  r = run({"eval-g", "--p", "11", "--top", "1/x", "--bottom", "0", "--t", "1"});
  EXPECT_EQ(r.code, kUsageError);
  r = run({"eval-g", "--p", "11", "--top", "1/2", "--bottom", "0", "--t", "11"});
  EXPECT_EQ(r.code, kUsageError);
  r = run({"eval-g", "--p", "11"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_EQ(run({}).code, kUsageError);
}

TEST(Cli, Trace) {
  CliRun r = run({"trace", "--family", "legendre", "--p", "5", "--r", "1", "--lambda", "2"});
  ASSERT_EQ(r.code, kPass);
  EXPECT_EQ(parse(r)["count"], 8);
  EXPECT_EQ(parse(r)["trace"], -2);
  r = run({"trace", "--family", "legendre", "--p", "5", "--lambda", "1"});
  EXPECT_EQ(r.code, kMathError);
  EXPECT_EQ(parse(r)["error"], "SingularCurve");
  r = run({"trace", "--family", "cd", "--p", "11", "--r", "1", "--c", "3", "--d", "5"});
  ASSERT_EQ(r.code, kPass);
  EXPECT_EQ(parse(r)["hasse_ok"], true);
  r = run({"trace", "--family", "weierstrass", "--p", "7", "--a4", "1", "--a6", "1"});
  EXPECT_EQ(r.code, kPass);
  EXPECT_EQ(run({"trace", "--family", "cd", "--p", "11", "--c", "3"}).code, kUsageError);
  EXPECT_EQ(run({"trace", "--family", "hyperbolic", "--p", "11"}).code, kUsageError);
}

TEST(Cli, Verify) {
  CliRun r = run({"verify", "--suite", "t13", "--pmax", "7", "--rmax", "1"});
  ASSERT_EQ(r.code, kPass);
  const auto j = parse(r);
  EXPECT_EQ(j["all_pass"], true);
  EXPECT_EQ(j["total"], j["instances"].size());
  r = run({"verify", "--suite", "corollary"});
  EXPECT_EQ(r.code, kVerificationFailure);
  EXPECT_EQ(parse(r)["failed"], 4);
  EXPECT_EQ(run({"verify", "--suite", "unknown"}).code, kUsageError);
}

TEST(Cli, Oracles) {
  EXPECT_EQ(run({"oracle", "gauss", "--p", "13", "--k", "3"}).code, kPass);
  CliRun r = run({"oracle", "jacobi", "--p", "5", "--r", "2", "--a", "3", "--b", "5"});
  EXPECT_EQ(r.code, kPass);
  EXPECT_EQ(parse(r)["gross_koblitz"], true);
  EXPECT_EQ(run({"oracle", "dh", "--p", "13", "--m", "3", "--psi", "2"}).code, kPass);
  r = run({"oracle", "greene", "--p", "13", "--top", "6,6", "--bottom", "0", "--x", "3"});
  EXPECT_EQ(r.code, kPass);
  const double greene = parse(r)["greene"]["re"].get<double>();
  CliRun t = run({"trace", "--family", "legendre", "--p", "13", "--lambda", "3"});
  ASSERT_EQ(t.code, kPass);
  // q F = -phi(-1) a_q with phi(-1) = 1 at q = 13
  EXPECT_NEAR(13.0 * greene, -parse(t)["trace"].get<double>(), 1e-6);
  EXPECT_EQ(run({"oracle", "dh", "--p", "13", "--m", "5"}).code, kMathError);
  EXPECT_EQ(run({"oracle", "bogus", "--p", "13"}).code, kUsageError);
  EXPECT_EQ(run({"oracle", "gauss", "--p", "53", "--r", "2"}).code, kMathError);
}

TEST(Cli, JsonRoundTrips) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"trace", "--family", "fg", "--p", "7", "--f", "1", "--g", "2"},
           {"verify", "--suite", "t13", "--pmax", "5", "--rmax", "1"},
           {"oracle", "gauss", "--p", "7", "--k", "1"},
           {"eval-g", "--p", "7", "--top", "1/2,1/2", "--bottom", "0,0", "--t", "3"}}) {
    const CliRun r = run(args);
    const auto j = nlohmann::ordered_json::parse(r.out);
    EXPECT_EQ(nlohmann::ordered_json::parse(j.dump(2)), j);
    EXPECT_EQ(j.dump(2) + "\n", r.out);
  }
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args{"trace", "--family", "a1a3", "--p", "13", "--r", "2", "--a1", "5", "--a3", "7"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, CsvAndPlainFormats) {
  CliRun r = run({"--format", "csv", "trace", "--family", "legendre", "--p", "5", "--lambda", "2"});
  EXPECT_EQ(r.out, "family,p,r,q,count,trace,hasse_ok\nlegendre,5,1,5,8,-2,true\n");
  r = run({"trace", "--family", "legendre", "--p", "5", "--lambda", "2", "--format", "plain"});
  EXPECT_NE(r.out.find("trace: -2"), std::string::npos);
  r = run({"verify", "--suite", "t13", "--pmax", "5", "--rmax", "1", "--format", "csv"});
  EXPECT_EQ(r.out.rfind("instance,lhs,rhs,pass,note\n", 0), 0u);
  EXPECT_EQ(run({"--format", "xml", "trace"}).code, kUsageError);
}

}  // namespace
}  // namespace padichg::cli
