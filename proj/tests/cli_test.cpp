#include "morava/cli.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace morava {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "morava");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, DeltaOfH) {
  const auto r = run({"delta", "--expr", "h"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "-h^3 + 18*h^2 - 119*h + 102\n");
  // global options are accepted after the subcommand as well
  EXPECT_EQ(run({"delta", "--expr", "h", "--prec-3", "24", "--prec-h", "16"}).out, r.out);
  EXPECT_EQ(run({"--prec-3", "24", "delta", "--expr", "h"}).out, r.out);
}

TEST(CliTest, PointValues) {
  EXPECT_EQ(run({"delta", "--expr", "i"}).out, "6*i\n");
  EXPECT_EQ(run({"alpha", "--expr", "1"}).out, "3\n");
  EXPECT_EQ(run({"delta", "--expr", "0"}).out, "0\n");
}

TEST(CliTest, Eval) {
  EXPECT_EQ(run({"eval", "--expr", "c^2"}).out, "h - 1\n");
  EXPECT_EQ(run({"eval", "--expr", "1 - h", "--invert", "--prec-h", "3"}).out, "h^2 + h + 1\n");
}

TEST(CliTest, Dumps) {
  EXPECT_EQ(run({"dump", "--what", "W"}).out, "a^4 - 6*a^2 + (h-9)*a - 3\n");
  EXPECT_EQ(run({"dump", "--what", "psi3h"}).out,
            "(h^2-18*h+57)*a^3 + (3*h-27)*a^2 + (-6*h^2+108*h-334)*a + (h^3-27*h^2+201*h-342)\n");
  const auto a = run({"dump", "--what", "A"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 8);
  for (const char* w : {"B", "f", "etapsi3h", "c"}) EXPECT_EQ(run({"dump", "--what", w}).code, 0) << w;
}

TEST(CliTest, TraceB) {
  const auto r = run({"trace-b", "--max-power", "32"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("tr(B^1) = 2*h^3 - 54*h^2 + 366*h - 306\n"), std::string::npos);
  EXPECT_NE(r.out.find("tr(B^32) = "), std::string::npos);
  EXPECT_EQ(r.out.find("*i"), std::string::npos);

  const auto j = nlohmann::json::parse(run({"--format", "json", "trace-b", "--max-power", "4"}).out);
  EXPECT_EQ(j.at("traces").size(), 4u);
  EXPECT_TRUE(j.at("all_real").get<bool>());
  EXPECT_LE(j.at("vanishing_power").get<int>(), 320);
}

TEST(CliTest, JsonOutputIsDeterministicAndParses) {
  const auto a = run({"--format", "json", "delta", "--expr", "h^2 + c"});
  const auto b = run({"--format", "json", "delta", "--expr", "h^2 + c"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto x = format::element_from_json(nlohmann::json::parse(a.out));
  EXPECT_EQ(x.eff_p(), 23);
}

TEST(CliTest, Verify) {
  const auto r = run({"--prec-3", "12", "--prec-h", "10", "verify", "--trials", "10", "--seed", "3"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
  const auto j = nlohmann::json::parse(
      run({"--prec-3", "12", "--prec-h", "10", "--format", "json", "verify", "--trials", "10", "--seed", "3"}).out);
  EXPECT_TRUE(j.at("passed").get<bool>());
  EXPECT_EQ(j.at("seed"), "3");
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"bogus"}).code, cli::kUsage);
  EXPECT_EQ(run({"delta"}).code, cli::kUsage);
  EXPECT_EQ(run({"--prec-3", "41", "eval", "--expr", "h"}).code, cli::kUsage);
  EXPECT_EQ(run({"--format", "xml", "eval", "--expr", "h"}).code, cli::kUsage);

  const auto parse = run({"eval", "--expr", "h^"});
  EXPECT_EQ(parse.code, cli::kParse);
  EXPECT_NE(parse.err.find("offset 2"), std::string::npos);

  EXPECT_EQ(run({"eval", "--expr", "h", "--invert"}).code, cli::kArithmetic);
  EXPECT_EQ(run({"--prec-3", "1", "alpha", "--expr", "1"}).code, cli::kArithmetic);
}

TEST(CliTest, Help) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("trace-b"), std::string::npos);
}

}  // namespace
}  // namespace morava
