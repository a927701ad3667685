#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "sylow/cli.hpp"
#include "sylow/io.hpp"
#include "sylow/liealg.hpp"

using namespace sylow;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(CliSeries, P3N2) {
  const auto r = run({"series", "--p", "3", "--n", "2"});
  EXPECT_EQ(r.code, kExitOk);
  for (const char* row : {"gamma_1  order 81", "gamma_2  order 9", "gamma_3  order 3", "gamma_4  order 1"})
    EXPECT_NE(r.out.find(row), std::string::npos) << row;
  EXPECT_EQ(r.out.find("mismatch"), std::string::npos);
}

TEST(CliSeries, P3N1) {
  const auto r = run({"series", "--p", "3", "--n", "1", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 2u);
  EXPECT_EQ(j["rows"][0]["order"], "3");
  EXPECT_EQ(j["rows"][1]["order"], "1");
  EXPECT_TRUE(j["coincide"].get<bool>());
}

TEST(CliSeries, RejectsBadPrime) {
  const auto r = run({"series", "--p", "4", "--n", "2"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("p must be an odd prime"), std::string::npos);
  EXPECT_EQ(run({"series", "--p", "3", "--n", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"series", "--p", "3", "--n", "2", "--format", "xml"}).code, kExitUsage);
}

TEST(CliSeries, CsvAndDeterminism) {
  const auto a = run({"series", "--p", "3", "--n", "3", "--format", "json"});
  const auto b = run({"series", "--p", "3", "--n", "3", "--format", "json"});
  EXPECT_EQ(a.out, b.out);
  const auto c = run({"series", "--p", "3", "--n", "2", "--format", "csv"});
  EXPECT_EQ(c.code, kExitOk);
  EXPECT_EQ(std::count(c.out.begin(), c.out.end(), '\n'), 5);
}

TEST(CliClosure, Examples) {
  auto r = run({"closure", "--p", "3", "--n", "2", "D1", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["basis"].size(), 3u);
  EXPECT_TRUE(j["within_bound"].get<bool>());
  r = run({"closure", "--p", "3", "--n", "2", "(0)D1"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("identity"), std::string::npos);
  r = run({"closure", "--p", "3", "--n", "3", "(x1x2)D3", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["basis"].size(), 5u);
  r = run({"closure", "--p", "3", "--n", "2", "D1 +"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("position 3"), std::string::npos);
  EXPECT_EQ(run({"closure", "--p", "3", "--n", "2", "D1 * D2"}).code, kExitUsage);
}

TEST(CliClosure, RenderedBasisReparses) {
  const PrimeParams params = PrimeParams::make(3, 3);
  const auto r = run({"closure", "--p", "3", "--n", "3", "(x1^2)D2", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  for (const auto& text : nlohmann::json::parse(r.out)["basis"]) {
    const auto g = parse_element(text.get<std::string>(), params);
    EXPECT_EQ(to_string(g), text.get<std::string>());
  }
}

TEST(CliChain, BothKindsAtP3N4) {
  const auto r = run({"chain", "--p", "3", "--n", "4", "--kind", "both", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["cross_validation"]["ok"].get<bool>());
  for (const char* kind : {"normalizer", "idealizer"}) {
    const auto& steps = j[kind]["steps"];
    EXPECT_EQ(steps[1]["logp_index"], 1);
    EXPECT_EQ(steps[2]["logp_index"], 2);
    EXPECT_EQ(steps[3]["logp_index"], 5);
  }
}

TEST(CliChain, LieAtP5N2) {
  const auto r = run({"chain", "--p", "5", "--n", "2", "--kind", "lie", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["kind"], "idealizer");
  EXPECT_EQ(j["steps"][1]["logp_index"], 1);
  EXPECT_EQ(j["steps"][1]["predicted"], 1);
}

TEST(CliChain, StabilizesBeforeGuard) {
  const auto r = run({"chain", "--p", "3", "--n", "2", "--steps", "50", "--kind", "group", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["stabilized"].get<bool>());
  EXPECT_LT(j["steps"].size(), 50u);
  EXPECT_EQ(run({"chain", "--p", "3", "--n", "2", "--steps", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"chain", "--p", "3", "--n", "2", "--kind", "ring"}).code, kExitUsage);
}

TEST(CliChain, CsvAndText) {
  const auto csv = run({"chain", "--p", "3", "--n", "3", "--format", "csv"});
  ASSERT_EQ(csv.code, kExitOk);
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "p,n,kind,i,basis,logp_index,predicted");
  EXPECT_NE(csv.out.find("3,3,idealizer,"), std::string::npos);
  const auto text = run({"chain", "--p", "3", "--n", "3"});
  EXPECT_NE(text.out.find("cross-validation: equal"), std::string::npos);
}

TEST(CliChain, SubgroupStart) {
  const auto path = temp_file("sylow_cli_center.txt", "p=3 n=3\nD3\n");
  const auto r = run({"chain", "--p", "3", "--n", "3", "--kind", "group", "--subgroup", path.string(),
                      "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["start_basis"], 1);
  EXPECT_EQ(run({"chain", "--p", "3", "--n", "2", "--subgroup", path.string()}).code, kExitUsage);
  EXPECT_EQ(run({"chain", "--p", "3", "--n", "2", "--subgroup", "/nonexistent/file"}).code, kExitUsage);
  std::filesystem::remove(path);
}

TEST(CliChain, OeisComparison) {
  const auto path = temp_file("sylow_cli_b.txt", "0 1\n1 1\n2 2\n3 2\n4 4\n5 5\n6 7\n7 9\n");
  const auto r = run({"chain", "--p", "3", "--n", "3", "--oeis", path.string(), "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.contains("oeis"));
  EXPECT_NE(j["oeis"].dump().find("t+1"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(CliVerify, ExhaustiveAtP3N2) {
  const auto r = run({"verify", "--p", "3", "--n", "2", "--exhaustive"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_NE(r.out.find("seed=1"), std::string::npos);
  EXPECT_EQ(r.out.find("[FAIL]"), std::string::npos);
  EXPECT_NE(r.out.find("0 failed"), std::string::npos);
}

TEST(CliVerify, SampledAtP3N3) {
  const auto r = run({"verify", "--p", "3", "--n", "3", "--seed", "17", "--samples", "300", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["seed"], 17);
  for (const auto& check : j["checks"]) EXPECT_NE(check["status"], "FAIL") << check.dump();
  EXPECT_EQ(r.out, run({"verify", "--p", "3", "--n", "3", "--seed", "17", "--samples", "300", "--format",
                        "json"}).out);
}

TEST(CliVerify, RejectsP2) {
  const auto r = run({"verify", "--p", "2", "--n", "2"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_FALSE(r.err.empty());
}

TEST(CliPerm, Json) {
  const auto r = run({"perm", "--p", "3", "--n", "1", "D1", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "{\"p\":3,\"n\":1,\"images\":[2,0,1]}\n");
}

TEST(CliSubgroup, Report) {
  const auto path = temp_file("sylow_cli_gamma2.txt", "p=3 n=2\nD2\n(x1)D2\n");
  const auto r = run({"subgroup", "--subgroup", path.string(), "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["normal"].get<bool>());
  EXPECT_TRUE(j["subgroup"].get<bool>());
  EXPECT_TRUE(j["ideal"].get<bool>());
  EXPECT_EQ(j["normalizer"].size(), 4u);
  const PrimeParams params = PrimeParams::make(3, 2);
  for (const auto& text : j["lie_image"]) EXPECT_EQ(parse_lie(text.get<std::string>(), params).terms().size(), 1u);
  std::filesystem::remove(path);
}

TEST(CliUsage, ExitCodes) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"series", "--p", "3"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}
