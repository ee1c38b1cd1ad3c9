#include <gtest/gtest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace shyang::cli {
namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

nlohmann::json run_json(std::vector<std::string> args, int expected_code = kPass) {
  args.insert(args.begin(), {"--output", "json"});
  const auto r = run_cli(args);
  EXPECT_EQ(r.code, expected_code) << r.out << r.err;
  return nlohmann::json::parse(r.out);
}

std::string write_rules(const std::string& name, const std::string& from, const std::string& to) {
  std::ifstream in(SHYANG_DATA_DIR "/yangian_relations.rules");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  const auto pos = text.find(from);
  if (pos == std::string::npos) throw std::logic_error("pattern not in rule file: " + from);
  text.replace(pos, from.size(), to);
  const std::string path = ::testing::TempDir() + name + ".rules";
  std::ofstream(path) << text;
  return path;
}

bool has_output(const nlohmann::json& j, const std::string& needle) {
  for (const auto& w : j["witnesses"]) {
    if (w["output"].get<std::string>().find(needle) != std::string::npos) return true;
  }
  return false;
}

TEST(Central, FirstCoefficient) {
  const auto j = run_json({"central", "--n", "2", "--r-max", "1"});
  EXPECT_EQ(j["status"], "pass");
  EXPECT_TRUE(has_output(j, "D1^1 + D2^1 - 3"));
  const auto text = run_cli({"central", "--n", "2", "--r-max", "1"});
  EXPECT_NE(text.out.find("D1^1 + D2^1 - 3"), std::string::npos);
}

TEST(Central, ZeroIsOne) {
  const auto j = run_json({"central", "--n", "3", "--r-max", "0"});
  EXPECT_EQ(j["status"], "pass");
  ASSERT_FALSE(j["witnesses"].empty());
  EXPECT_EQ(j["witnesses"][0]["output"], "1");
}

TEST(Central, PrintedFormulaMismatch) {
  const auto j =
      run_json({"central", "--n", "2", "--r-max", "4", "--formula", "printed"}, kMathFailure);
  EXPECT_EQ(j["status"], "fail");
  EXPECT_EQ(run_cli({"central", "--formula", "bogus"}).code, kUsage);
}

TEST(Verify, Examples) {
  EXPECT_EQ(run_json({"verify", "--n", "2", "--r", "1", "--probes", "E^3,F^1"})["status"], "pass");
  EXPECT_EQ(run_json({"verify", "--n", "2", "--r", "3", "--probes", "D2^2"})["status"], "pass");
  EXPECT_EQ(run_json({"verify", "--r", "2"})["witnesses"].size(), 8u);
  EXPECT_EQ(run_cli({"verify", "--probes", "E^2"}).code, kUsage);
}

TEST(Verify, CorruptedRuleFileFails) {
  const auto path =
      write_rules("sign_flip", "E^r * D1^s -> D1^s * E^r - sum", "E^r * D1^s -> D1^s * E^r + sum");
  const auto j =
      run_json({"--rules", path, "verify", "--r", "1", "--probes", "E^3,F^1"}, kMathFailure);
  EXPECT_EQ(j["status"], "fail");
  bool printed = false;
  for (const auto& w : j["witnesses"]) {
    if (!w["ok"].get<bool>()) printed = printed || w["output"] != "0";
  }
  EXPECT_TRUE(printed);
}

TEST(Verify, MalformedRuleFileIsUsageError) {
  const auto path = write_rules("missing_rule", "D2^r * D1^s -> D1^s * D2^r\n", "");
  EXPECT_EQ(run_cli({"--rules", path, "verify"}).code, kUsage);
  EXPECT_EQ(run_cli({"--rules", "/nonexistent/file.rules", "verify"}).code, kUsage);
}

TEST(Verify, BudgetExhaustion) {
  const auto r = run_cli({"--step-budget", "2", "verify", "--r", "4"});
  EXPECT_EQ(r.code, kBudget) << r.out << r.err;
}

TEST(Confluence, SeededAndDeterministic) {
  const std::vector<std::string> args{"--output",        "json", "confluence", "--samples", "20",
                                      "--overlap-bound", "8"};
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  EXPECT_EQ(a.code, kPass) << a.out << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["params"]["seed"], 42);
  EXPECT_EQ(j["millis"], 0);
}

TEST(Dims, SoMode) {
  const auto j = run_json({"--mode", "so", "--degree-bound", "10", "dims"});
  EXPECT_EQ(j["status"], "pass");
  EXPECT_TRUE(has_output(j, "67"));
}

TEST(Fold, Examples) {
  const auto b2 = run_json({"fold", "B2"});
  EXPECT_EQ(b2["status"], "pass");
  EXPECT_NE(b2.dump().find("A3"), std::string::npos);
  EXPECT_TRUE(has_output(b2, "{4,6,8}") || has_output(b2, "4, 6, 8"));
  EXPECT_EQ(run_json({"fold", "C3"}, kMathFailure)["status"], "fail");
  EXPECT_EQ(run_json({"fold", "F4"})["status"], "pass");
  EXPECT_EQ(run_cli({"fold", "A3"}).code, kUsage);
  EXPECT_EQ(run_cli({"fold", "Z9"}).code, kUsage);
}

TEST(Table1, Examples) {
  const auto a = run_cli({"table1", "A", "Subregular"});
  EXPECT_EQ(a.code, kPass);
  EXPECT_NE(a.out.find("universal"), std::string::npos);
  const auto g = run_cli({"table1", "G", "Dim8"});
  EXPECT_NE(g.out.find("not universal"), std::string::npos);
  EXPECT_NE(g.out.find("dimension 8"), std::string::npos);
  const auto b = run_cli({"table1", "B", "Regular"});
  EXPECT_NE(b.out.find("not universal"), std::string::npos);
  EXPECT_EQ(run_cli({"table1", "A", "Dim8"}).code, kUsage);
}

TEST(Coinv, Passes) {
  for (const char* n : {"2", "3", "4"}) {
    EXPECT_EQ(run_json({"--n", n, "coinv"})["status"], "pass") << n;
  }
}

TEST(Kleinian, Passes) {
  EXPECT_EQ(run_json({"kleinian", "--m", "5"})["status"], "pass");
  EXPECT_EQ(run_cli({"kleinian", "--m", "1"}).code, kUsage);
}

TEST(Nf, Examples) {
  const auto dd = run_cli({"nf", "D2^1 * D1^1"});
  EXPECT_EQ(dd.code, kPass);
  EXPECT_NE(dd.out.find("D1^1 * D2^1"), std::string::npos);
  const auto ef = run_json({"--n", "2", "nf", "[E^3, F^1]"});
  const std::string printed = ef["witnesses"][0]["output"];
  EXPECT_EQ(printed.find('E'), std::string::npos) << printed;
  EXPECT_EQ(printed.find('F'), std::string::npos) << printed;
  const auto z = run_json({"--mode", "so", "--n", "2", "nf", "Z^1"});
  EXPECT_EQ(z["witnesses"][0]["output"], "0");
  const auto bad = run_cli({"nf", "E^2"});
  EXPECT_EQ(bad.code, kUsage);
  EXPECT_NE(bad.err.find("column"), std::string::npos);
  EXPECT_EQ(run_cli({"nf", "D1^1 +"}).code, kUsage);
  EXPECT_EQ(run_cli({"--step-budget", "1", "nf", "(E^5 + F^3)^4"}).code, kBudget);
}

TEST(ParseCheck, Passes) {
  EXPECT_EQ(run_json({"parse-check", "--samples", "50", "--fuzz", "500"})["status"], "pass");
}

TEST(Usage, Errors) {
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run_cli({"--n", "1", "dims"}).code, kUsage);
  EXPECT_EQ(run_cli({"--mode", "sl", "dims"}).code, kUsage);
  EXPECT_EQ(run_cli({"--help"}).code, kPass);
}

TEST(Json, ByteIdenticalAndSchema) {
  for (const auto& args :
       std::vector<std::vector<std::string>>{{"--output", "json", "central", "--r-max", "3"},
                                             {"--output", "json", "fold", "G2"},
                                             {"--output", "json", "--seed", "7", "parse-check",
                                              "--samples", "20", "--fuzz", "100"}}) {
    const auto a = run_cli(args);
    EXPECT_EQ(a.out, run_cli(args).out);
    const auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j.size(), 7u);
    for (const char* key :
         {"schema_version", "operation", "params", "status", "witnesses", "steps", "millis"}) {
      EXPECT_TRUE(j.contains(key)) << key;
    }
  }
  const auto timed = run_json({"--timing", "fold", "B2"});
  EXPECT_EQ(timed["params"]["timing"], true);
}

}  // namespace
}  // namespace shyang::cli
