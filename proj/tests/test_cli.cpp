#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gmm/cli.hpp"

namespace gmm {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
  return std::string(GMM_FIXTURE_DIR) + "/" + name + ".json";
}

TEST(Cli, Resultant) {
  EXPECT_EQ(run({"res", fixture("hadamard_conjugate")}).out, "4\n");
  EXPECT_EQ(run({"res", fixture("plane_diagonal")}).out, "1/1296\n");
  const auto j = nlohmann::json::parse(run({"res", fixture("rational_coefficients"), "--json"}).out);
  EXPECT_EQ(j["resultant"], "1/32768");
}

TEST(Cli, Morphism) {
  EXPECT_EQ(run({"morphism", fixture("unit_squares")}).out, "true\n");
  EXPECT_EQ(run({"morphism", fixture("common_zero")}).out, "false\n");
  EXPECT_EQ(run({"morphism", fixture("plane_common_zero")}).out, "false\n");
}

TEST(Cli, BadPrimes) {
  EXPECT_EQ(run({"badprimes", fixture("unit_squares")}).out, "(none)\n");
  EXPECT_EQ(run({"badprimes", fixture("diagonal_36")}).out, "2 3\n");
  const auto j = nlohmann::json::parse(run({"badprimes", fixture("diagonal_36"), "--json"}).out);
  EXPECT_EQ(j["bad_primes"], nlohmann::json::parse("[2, 3]"));
}

TEST(Cli, Minimize) {
  const auto r = run({"minimize", fixture("diagonal_4"), "-p", "2", "--radius", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("valuation 0\n"), std::string::npos);
  EXPECT_EQ(run({"minimize", fixture("diagonal_4"), "-p", "4"}).code, cli::kExitDomain);
  EXPECT_EQ(run({"minimize", fixture("diagonal_4")}).code, cli::kExitUsage);
}

TEST(Cli, GlobalModelJson) {
  const auto r = run({"gmm", fixture("diagonal_36"), "--radius", "3", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["model"]["resultant"] == 1 || j["model"]["resultant"] == -1);
  EXPECT_EQ(j["report"]["rows"].size(), 2u);
}

TEST(Cli, EmitMapRoundTrip) {
  for (const auto& name : {"diagonal_36", "hadamard_conjugate", "genuinely_bad_at_2",
                           "rational_coefficients", "plane_diagonal"}) {
    const auto first = run({"gmm", fixture(name), "--emit-map"});
    ASSERT_EQ(first.code, 0) << first.err;
    const auto path = std::filesystem::temp_directory_path() /
                      (std::string("gmm_roundtrip_") + name + ".json");
    std::ofstream(path) << first.out;
    const auto second = run({"gmm", path.string(), "--emit-map"});
    EXPECT_EQ(second.out, first.out) << name;
    std::filesystem::remove(path);
  }
}

TEST(Cli, Egr) {
  EXPECT_NE(run({"egr", fixture("diagonal_36")}).out.find("resultant 1\n"), std::string::npos);
  const auto bad = run({"egr", fixture("genuinely_bad_at_2"), "--radius", "2"});
  EXPECT_EQ(bad.code, 0);
  EXPECT_EQ(bad.out,
            "no unit model found\n"
            "prime          input    best    good  exhausted\n"
            "2                  4       2      no        yes\n");
  const auto j = nlohmann::json::parse(run({"egr", fixture("genuinely_bad_at_2"), "--radius", "2", "--json"}).out);
  EXPECT_EQ(j["found"], false);
  EXPECT_EQ(j["report"]["rows"][0]["best_valuation"], 2);
}

TEST(Cli, Report) {
  EXPECT_EQ(run({"report", fixture("unit_squares")}).out, "(no bad primes)\n");
  const auto j = nlohmann::json::parse(run({"report", fixture("hadamard_conjugate"), "--json"}).out);
  EXPECT_EQ(j["rows"][0]["prime"], 2);
  EXPECT_EQ(j["rows"][0]["input_valuation"], 2);
  EXPECT_EQ(j["rows"][0]["best_valuation"], 0);
  EXPECT_EQ(j["rows"][0]["good_reduction"], true);
  EXPECT_EQ(j["rows"][0]["radius_exhausted"], false);
}

TEST(Cli, GlueAndFactorize) {
  EXPECT_EQ(run({"glue", fixture("adele_two_primes")}).out, "basis [[1/2,0],[0,3]]\n");
  EXPECT_EQ(run({"factorize", fixture("adele_diagonal")}).out,
            "principal [[2,0],[0,1]]\n"
            "stabilizer default [[1/2,0],[0,1]]\n"
            "stabilizer at 2 [[1,0],[0,1]]\n");
  const auto j = nlohmann::json::parse(run({"factorize", fixture("adele_hadamard"), "--json"}).out);
  EXPECT_TRUE(j.contains("principal"));
  EXPECT_TRUE(j["stabilizer"].contains("default"));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"res"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"res", fixture("unit_squares"), "--bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
  const auto parse = run({"res", fixture("bad_parse")});
  EXPECT_EQ(parse.code, cli::kExitDomain);
  EXPECT_NE(parse.err.find("x*y + y"), std::string::npos);
  EXPECT_EQ(run({"gmm", fixture("common_zero")}).code, cli::kExitDomain);
  EXPECT_EQ(run({"res", fixture("no_such_file")}).code, cli::kExitDomain);
  EXPECT_EQ(run({"glue", fixture("unit_squares")}).code, cli::kExitDomain);
  const auto budget = run({"badprimes", fixture("hard_to_factor")});
  EXPECT_EQ(budget.code, cli::kExitBudget);
  EXPECT_NE(budget.err.find("unfactored cofactor 1000000000000000012000000000000000027"),
            std::string::npos);
}

TEST(Cli, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"gmm", fixture("diagonal_36"), "--json"},
           {"egr", fixture("genuinely_bad_at_2"), "--radius", "2", "--json"},
           {"minimize", fixture("plane_diagonal"), "-p", "3"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

}  // namespace
}  // namespace gmm
