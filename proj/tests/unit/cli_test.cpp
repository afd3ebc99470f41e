#include "commands.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <sstream>

namespace surd::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(CliTest, DeriveFourthRoot) {
  const auto r = run_cli({"derive", "--root", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "A = 51/56"));
  EXPECT_TRUE(contains(r.out, "B = 5/56"));
  EXPECT_TRUE(contains(r.out, "C = 27\nD = 98\nE = 70"));
  EXPECT_TRUE(contains(r.out, "required D/(D+E) = 11/16, actual D/(D+E) = 7/12 -> inconsistent"));
}

TEST(CliTest, DeriveJson) {
  const auto r = run_cli({"derive", "--root", "2", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["A"], "3/4");
  EXPECT_EQ(j["B"], "1/4");
  EXPECT_EQ(j["C"], "1");
  EXPECT_EQ(j["D"], "2");
  EXPECT_EQ(j["E"], "2");
}

TEST(CliTest, ArgumentErrorsExitTwo) {
  EXPECT_EQ(run_cli({"derive", "--root", "1"}).code, kUsageError);
  EXPECT_EQ(run_cli({}).code, kUsageError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(run_cli({"bound"}).code, kUsageError);
  EXPECT_EQ(run_cli({"bound", "-p", "0"}).code, kUsageError);
  EXPECT_EQ(run_cli({"bound", "-p", "1", "--sign", "up"}).code, kUsageError);
  EXPECT_EQ(run_cli({"eval", "-N", "abc"}).code, kUsageError);
  EXPECT_EQ(run_cli({"error", "-k", "2", "-N", "1", "-x", "-5"}).code, kUsageError);
  EXPECT_EQ(run_cli({"sweep", "--t-min", "-1"}).code, kUsageError);
  EXPECT_EQ(run_cli({"sweep", "--csv", "--json"}).code, kUsageError);
}

TEST(CliTest, HelpExitsZero) {
  const auto r = run_cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "verify-tripos"));
}

TEST(CliTest, EvalAcceptsDecimalsExactly) {
  const auto r = run_cli({"eval", "-k", "4", "-N", "10", "-x", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "S = 1920160001/192011200"));

  const auto d = run_cli({"eval", "-k", "2", "-N", "0.5", "-x", "-0.05336", "--json"});
  ASSERT_EQ(d.code, 0);
  EXPECT_EQ(nlohmann::json::parse(d.out)["x"], "-667/12500");
}

TEST(CliTest, ErrorReport) {
  const auto r = run_cli({"error", "-N", "10", "-x", "1", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["true_error_decimal"][0], "-0.000000000000000005695655");
  EXPECT_EQ(j["formula_enclosure_decimal"][0], "-0.000000000000000005698475");
}

TEST(CliTest, WindowAndBound) {
  const auto w = run_cli({"window"});
  EXPECT_EQ(w.code, 0);
  EXPECT_TRUE(contains(w.out, "lower = -20/77"));
  EXPECT_TRUE(contains(w.out, "+0.05336"));

  const auto pos = run_cli({"bound", "-p", "1", "--sign", "pos"});
  EXPECT_EQ(pos.code, 0);
  EXPECT_TRUE(contains(pos.out, "N/1.700210e10"));
  const auto neg = run_cli({"bound", "-p", "1", "--sign", "neg"});
  EXPECT_TRUE(contains(neg.out, "N/1.460286e10"));
}

TEST(CliTest, VerifyTriposPasses) {
  const auto r = run_cli({"verify-tripos"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "S      = 1920160001/192011200"));
  EXPECT_TRUE(contains(r.out, "-5.695655e-18"));
  EXPECT_TRUE(contains(r.out, "5.698475e-18"));
  EXPECT_TRUE(contains(r.out, "(x/N^4)^4"));
  EXPECT_FALSE(contains(r.out, "FAIL"));
}

TEST(CliTest, SweepCsv) {
  const auto r = run_cli({"sweep", "--t-min", "0", "--t-max", "0.06", "--steps", "6"});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "t,taylor_error,surd_error,ratio,in_window");
  std::getline(lines, line);
  EXPECT_EQ(line, "0,+0.000000000000000000000000,+0.000000000000000000000000,,true");
  std::string last;
  while (std::getline(lines, line)) last = line;
  EXPECT_EQ(last.substr(0, 6), "3/50,-");
  EXPECT_EQ(last.substr(last.size() - 6), ",false");
}

TEST(CliTest, SweepSingleRowRatioBelowOne) {
  const auto rows = sweep({4, Rational(1), Rational(Integer(1), Integer(10000)),
                           Rational(Integer(1), Integer(10000)), 0, 24, 12});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].surd_error.str(), "-0.000000000000000000569565");
  EXPECT_EQ(rows[0].taylor_error.str(), "-0.000000000000000003759483");
  EXPECT_LT(Rational::parse(rows[0].ratio), Rational(1));
  EXPECT_EQ(rows[0].in_window, "true");
}

TEST(CliTest, SweepOtherRootHasNoWindowFlag) {
  const auto r = run_cli({"sweep", "-k", "3", "--steps", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "1/20,"));
  EXPECT_EQ(r.out.substr(r.out.size() - 2), ",\n");
}

TEST(CliTest, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"sweep", "--steps", "5", "--t-min", "-0.2"},
           {"verify-tripos", "--json"},
           {"error", "-k", "5", "-N", "3", "-x", "-7/3"},
           {"window", "--json"}}) {
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}

}  // namespace
}  // namespace surd::cli
