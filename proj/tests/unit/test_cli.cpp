#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "khayyam/cli.hpp"

namespace khayyam {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "khayyam");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, SolveJson) {
  const CliRun r = run({"solve", "x^3 + x = 2", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["species"], "S1");
  EXPECT_EQ(j["family"], "I");
  EXPECT_EQ(j["agreement"], true);
  ASSERT_EQ(j["roots"].size(), 1u);
  EXPECT_EQ(j["roots"][0]["x"], 1.0);
  EXPECT_EQ(j["roots"][0]["multiplicity"], 1);
  EXPECT_TRUE(j["roots"][0].contains("residual"));
  EXPECT_EQ(j["oracle_roots"], nlohmann::json::array({1.0}));
  EXPECT_EQ(j["params"]["b"], 1.0);
  ASSERT_EQ(j["conics"].size(), 3u);
  for (const auto& c : j["conics"]) {
    EXPECT_TRUE(c.contains("role"));
    EXPECT_TRUE(c.contains("kind"));
    EXPECT_EQ(c["coeffs"].size(), 6u);
  }
}

TEST(Cli, ClassifyCoefficients) {
  const CliRun r = run({"classify", "--coeffs", "-6", "11", "-6"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto s12 = r.out.find("S12");
  const auto fam = r.out.find("family   IV");
  const auto rel = r.out.find("x(y+b)=bl");
  ASSERT_NE(s12, std::string::npos);
  ASSERT_NE(fam, std::string::npos);
  ASSERT_NE(rel, std::string::npos);
  EXPECT_LT(s12, fam);
  EXPECT_LT(fam, rel);
}

TEST(Cli, TableRowsAndDeterminism) {
  const CliRun a = run({"table"});
  const CliRun b = run({"table"});
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  const auto row11 = a.out.find("(11)");
  ASSERT_NE(row11, std::string::npos);
  const std::string line = a.out.substr(row11, a.out.find('\n', row11) - row11);
  EXPECT_NE(line.find("y²=(x+l)(x+a)"), std::string::npos);
  EXPECT_NE(line.find("by=x(x+a)"), std::string::npos);
  for (int n = 1; n <= 13; ++n) EXPECT_NE(a.out.find("(" + std::to_string(n) + ")"), std::string::npos);
}

TEST(Cli, NoPositiveRootIsSuccess) {
  const CliRun r = run({"solve", "x^3 + 1 = x^2", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["species"], "S5");
  EXPECT_TRUE(j["roots"].empty());
  EXPECT_EQ(j["agreement"], true);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"classify", "x^3 = 8"}).code, kExitClassification);
  EXPECT_EQ(run({"solve", "x^3 + x^2 + 1 = 0"}).code, kExitClassification);
  EXPECT_EQ(run({"solve", "x^2 = 1"}).code, kExitUsage);
  EXPECT_EQ(run({"solve"}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "x^3 = x + 1", "--coeffs", "0", "-1", "-1"}).code, kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, HelpDocumentsGrammarAndSchema) {
  const CliRun r = run({"--help"});
  EXPECT_NE(r.out.find("EQUATION := SIDE"), std::string::npos);
  EXPECT_NE(r.out.find("oracle_roots"), std::string::npos);
}

TEST(Cli, RenderToStdout) {
  const CliRun r = run({"render", "x^3 + x = 2", "--no-hidden"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("<?xml", 0), 0u);
  EXPECT_EQ(r.out.find("id=\"hidden\""), std::string::npos);
}

TEST(Cli, SmallFuzzBatchPasses) {
  const CliRun r = run({"solve", "--fuzz", "5", "--seed", "3", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.out << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["ok"], true);
  EXPECT_EQ(j["summary"].size(), 13u);
}

}  // namespace
}  // namespace khayyam
