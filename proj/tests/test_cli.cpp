#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "tunnel");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = tunnel::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, TableRow) {
  const Outcome o = invoke({"table", "--ns", "10"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("10, 0.0601438, 1.323e-5"), std::string::npos) << o.out;
}

TEST(Cli, ExactGroundState) {
  const Outcome o = invoke({"exact", "0"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("0, 0.157299207050285"), std::string::npos) << o.out;
}

TEST(Cli, CoefficientsAlpha) {
  const Outcome o = invoke({"coeffs", "--which", "alpha", "--order", "5"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("2^(-2/3), -1/5, 2^(5/3)/35, -2^(10/3)/225, 1548/67375\n"), std::string::npos) << o.out;
}

TEST(Cli, CoefficientsOtherSeries) {
  for (const char* which : {"beta", "a1", "inversion"}) {
    const Outcome o = invoke({"coeffs", "--which", which, "--order", "3"});
    EXPECT_EQ(o.code, 0) << which;
  }
  EXPECT_NE(invoke({"coeffs", "--which", "a1", "--order", "1"}).out.find("83/9600"), std::string::npos);
}

TEST(Cli, AsymBreakdown) {
  const Outcome o = invoke({"asym", "100", "--form", "eq42"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("nu^(-4/3)"), std::string::npos);
  EXPECT_NE(o.out.find("P_asym = 0.02869731"), std::string::npos) << o.out;
}

TEST(Cli, Validate) {
  const Outcome o = invoke({"validate"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("max relative deviation n=100"), std::string::npos);
  EXPECT_NE(o.out.find("max relative deviation n=400"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, tunnel::cli::kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, tunnel::cli::kExitUsage);
  EXPECT_EQ(invoke({"table"}).code, tunnel::cli::kExitUsage);
  EXPECT_EQ(invoke({"exact", "5", "--tol", "1"}).code, tunnel::cli::kExitUsage);
  EXPECT_EQ(invoke({"asym", "5", "--form", "eq99"}).code, tunnel::cli::kExitUsage);
  EXPECT_EQ(invoke({"coeffs", "--which", "gamma"}).code, tunnel::cli::kExitUsage);
  EXPECT_EQ(invoke({"coeffs", "--order", "31"}).code, tunnel::cli::kExitUsage);
  EXPECT_EQ(invoke({"exact", "--ns", "3,-1"}).code, tunnel::cli::kExitUsage);
  const Outcome o = invoke({"table", "--ns", "ten"});
  EXPECT_EQ(o.code, tunnel::cli::kExitUsage);
  EXPECT_FALSE(o.err.empty());
}

TEST(Cli, RunFromConfig) {
  tunnel::cli::RunConfig config;
  config.subcommand = tunnel::cli::Subcommand::exact;
  config.n_list = {3};
  std::ostringstream out, err;
  EXPECT_EQ(tunnel::cli::run(config, out, err), tunnel::cli::kExitOk);
  EXPECT_NE(out.str().find("3, "), std::string::npos);
  config.n_list.clear();
  EXPECT_EQ(tunnel::cli::run(config, out, err), tunnel::cli::kExitUsage);
}

TEST(Cli, CsvToFileRoundTripsAndIsDeterministic) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = (dir / "tunnel_cli_a.csv").string();
  const auto b = (dir / "tunnel_cli_b.csv").string();
  ASSERT_EQ(invoke({"table", "--ns", "10,20,50", "--csv", a}).code, 0);
  ASSERT_EQ(invoke({"table", "--ns", "10,20,50", "--csv", b}).code, 0);
  const auto slurp = [](const std::string& p) {
    std::ifstream f(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), {});
  };
  const std::string text = slurp(a);
  EXPECT_EQ(text, slurp(b));
  EXPECT_EQ(text.rfind("n,p_exact,p_asym,rel_error\n10,", 0), 0u) << text;
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(Cli, CsvToStdout) {
  const Outcome o = invoke({"table", "--ns", "10", "--csv", "-"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out.rfind("n,p_exact,p_asym,rel_error\n", 0), 0u);
}
