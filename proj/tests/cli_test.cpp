#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "mcf/cli.hpp"

namespace {

using nlohmann::json;

struct Result {
  int code = 0;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "mcf");
  std::ostringstream out, err;
  Result r;
  r.code = mcf::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

json run_json(const std::vector<std::string>& args) {
  const Result r = run(args);
  EXPECT_EQ(r.code, mcf::cli::kExitOk) << r.err;
  return json::parse(r.out);
}

TEST(Cli, EvalExample) {
  const json j = run_json({"eval", "--n", "1", "--point", "1/3", "--tol", "1e-9"});
  EXPECT_EQ(j["value"], "1/4");
  EXPECT_EQ(j["error_bound"], 0.0);
  EXPECT_EQ(j["exact"], true);
  EXPECT_EQ(j["word"], "001");
}

TEST(Cli, EvalInverseAndFloatMode) {
  EXPECT_EQ(run_json({"eval", "--n", "1", "--point", "1/4", "--inverse"})["value"], "1/3");
  const json g = run_json({"eval", "--n", "1", "--point", "0.6180339887498949"});
  EXPECT_EQ(g["mode"], "float");
  EXPECT_NEAR(g["value_float"][0].get<double>(), 2.0 / 3, 1e-8);
}

TEST(Cli, EntropyExample) {
  const json j = run_json({"entropy", "--n", "2"});
  EXPECT_NEAR(j["h_mu"].get<double>(), 0.54807, 1e-4);
  EXPECT_GT(j["log2_gap"].get<double>(), 0);
}

TEST(Cli, ScrambleExamples) {
  EXPECT_EQ(run_json({"scramble", "--n", "2", "--word", "01"})["scrambling"], false);
  const json all = run_json({"scramble", "--n", "3"});
  EXPECT_EQ(all["all_products_scrambling"], true);
  EXPECT_EQ(all["length"], 6);
}

TEST(Cli, ExpandAndOrbit) {
  const json e = run_json({"expand", "--n", "1", "--point", "1/3", "--steps", "5"});
  EXPECT_EQ(e["map"], "M");
  EXPECT_EQ(e["digits"], "00100");
  const json o = run_json({"orbit", "--n", "1", "--point", "2/5", "--map", "T", "--steps", "6"});
  EXPECT_EQ(o["points"].size(), 7u);
  EXPECT_EQ(o["points"][1], "4/5");
}

TEST(Cli, PartitionRecord) {
  const json j = run_json({"partition", "--n", "2", "--depth", "2", "--side", "tent"});
  EXPECT_EQ(j["total_measure"], "1");
  ASSERT_EQ(j["cylinders"].size(), 4u);
  const json& c = j["cylinders"][0];
  EXPECT_EQ(c["word"], "00");
  EXPECT_EQ(c["side"], "tent");
  EXPECT_EQ(c["measure"], "1/4");
  EXPECT_EQ(c["vertices"].size(), 3u);
  EXPECT_EQ(c["vertices"][0].size(), 2u);
}

TEST(Cli, Periodic) {
  const json m = run_json({"periodic", "--n", "1", "--word", "1"});
  EXPECT_EQ(m["eigenvalue_minpoly"], "x^2 - x - 1");
  EXPECT_EQ(m["degree"], 2);
  const json t = run_json({"periodic", "--n", "1", "--word", "1", "--map", "T"});
  EXPECT_EQ(t["exact_point"], "2/3");
}

TEST(Cli, GameAndVerify) {
  const json g = run_json({"game", "--n", "3"});
  EXPECT_EQ(g["value"], 6);
  EXPECT_EQ(g["bound"], 6);
  EXPECT_EQ(g["strategy_descends"], true);
  const Result v = run({"verify", "--suite", "exact_core"});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(json::parse(v.out)["passed"], true);
}

TEST(Cli, SingularityCsv) {
  const Result r = run({"singularity", "--n", "2", "--depth", "30", "--samples", "5", "--seed", "4"});
  EXPECT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 7u);
  EXPECT_EQ(lines[0], "sample,depth,log_lambda_gamma,log_lambda_delta,per_step");
  EXPECT_EQ(lines[6].rfind("mean,", 0), 0u);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::vector<std::string>> cmds{
      {"singularity", "--n", "2", "--depth", "40", "--samples", "20", "--seed", "9"},
      {"eval", "--n", "2", "--point", "3/7,1/5"},
      {"partition", "--n", "3", "--depth", "3"},
  };
  for (const auto& c : cmds) EXPECT_EQ(run(c).out, run(c).out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"eval", "--n", "1"}).code, mcf::cli::kExitUsage);
  EXPECT_EQ(run({"eval", "--n", "1", "--point", "1/3", "--bogus"}).code, mcf::cli::kExitUsage);
  EXPECT_EQ(run({"nonsense"}).code, mcf::cli::kExitUsage);
  EXPECT_EQ(run({"eval", "--n", "1", "--point", "abc"}).code, mcf::cli::kExitUsage);
  EXPECT_EQ(run({"eval", "--n", "2", "--point", "1/4,1/2"}).code, mcf::cli::kExitDomain);
  EXPECT_EQ(run({"entropy", "--n", "1"}).code, mcf::cli::kExitDomain);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, mcf::cli::kExitUsage);
  const Result e = run({"eval", "--n", "2", "--point", "1/4,1/2"});
  EXPECT_TRUE(e.out.empty());
  EXPECT_NE(e.err.find("OutsideDomain"), std::string::npos);
}

}  // namespace
