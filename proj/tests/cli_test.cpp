#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "powerfree/verifier.hpp"

namespace powerfree::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override { unsetenv("POWERFREE_CAP"); }
  void TearDown() override { unsetenv("POWERFREE_CAP"); }
};

TEST_F(CliTest, Generate) {
  EXPECT_EQ(invoke({"generate", "--level", "3"}).out, "123213231213123132312132123\n");
  EXPECT_EQ(invoke({"generate", "--level", "2", "--spaced"}).out, "213 123 132\n");
  EXPECT_EQ(invoke({"generate", "--level", "0"}).out, "2\n");
  const auto j = nlohmann::json::parse(invoke({"generate", "--level", "2", "--format", "json"}).out);
  EXPECT_EQ(j["word"], "213123132");
  EXPECT_EQ(j["length"], 9);
}

TEST_F(CliTest, At) {
  EXPECT_EQ(invoke({"at", "--index", "-1"}).out, "1\n");
  EXPECT_EQ(invoke({"at", "--index", "0"}).out, "2\n");
  EXPECT_EQ(invoke({"at", "--index", "1"}).out, "3\n");
  EXPECT_EQ(invoke({"at", "--index", "-2"}).out, "3\n");
  const auto j = nlohmann::json::parse(invoke({"at", "--index", "-4", "--format", "json"}).out);
  EXPECT_EQ(j["digits"], "TT");
  EXPECT_EQ(invoke({"at", "--index", "9223372036854775807"}).code, kExitOk);
  EXPECT_EQ(invoke({"at", "--index", "-9223372036854775808"}).code, kExitOk);
}

TEST_F(CliTest, Exponent) {
  EXPECT_EQ(invoke({"exponent", "--word", "1213121"}).out, "7/4 (period 4)\n");
  EXPECT_EQ(invoke({"exponent", "--word", "123"}).out, "1 (period 3)\n");
  EXPECT_EQ(invoke({"exponent", "--word", "1212"}).out, "2 (period 2)\n");
  EXPECT_EQ(invoke({"exponent", "--stdin"}, "1213121\n").out, invoke({"exponent", "--word", "1213121"}).out);
  const auto j = nlohmann::json::parse(invoke({"exponent", "--word", "12131", "--format", "json"}).out);
  EXPECT_EQ(j["exponent"], "5/4");
  EXPECT_EQ(j["period"], 4);
}

TEST_F(CliTest, UsageErrors) {
  const std::vector<std::vector<std::string>> bad{
      {},
      {"frobnicate"},
      {"generate"},
      {"generate", "--level", "x"},
      {"generate", "--level", "13"},
      {"generate", "--level", "2", "--format", "xml"},
      {"at"},
      {"at", "--index", "1.5"},
      {"exponent"},
      {"exponent", "--word", "12", "--stdin"},
      {"exponent", "--word", "124"},
      {"exponent", "--word", ""},
      {"verify", "--level-max", "0"},
      {"verify", "--level-max", "13"},
      {"verify", "--checks", "nope"},
      {"search", "--alphabet", "4", "--threshold", "2", "--mode", "strict", "--max-len", "5"},
      {"search", "--alphabet", "3", "--threshold", "1/0", "--mode", "strict", "--max-len", "5"},
      {"search", "--alphabet", "3", "--threshold", "1/2", "--mode", "strict", "--max-len", "5"},
      {"search", "--alphabet", "3", "--threshold", "2", "--mode", "loose", "--max-len", "5"},
      {"search", "--alphabet", "3", "--threshold", "2", "--mode", "strict", "--max-len", "0"},
  };
  for (const auto& args : bad) {
    const Result r = invoke(args);
    std::string joined;
    for (const auto& a : args) joined += a + ' ';
    EXPECT_EQ(r.code, kExitUsage) << joined;
    EXPECT_TRUE(r.out.empty()) << joined;
    EXPECT_FALSE(r.err.empty()) << joined;
  }
  EXPECT_NE(invoke({"exponent", "--word", "124"}).err.find("--word"), std::string::npos);
}

TEST_F(CliTest, HelpExitsZero) { EXPECT_EQ(invoke({"--help"}).code, kExitOk); }

TEST_F(CliTest, VerifyMatchesLibrary) {
  const Result r = invoke({"verify", "--level-max", "8"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, render_table(run_all(8)));
  EXPECT_EQ(invoke({"verify"}).out, r.out);
}

TEST_F(CliTest, VerifySubsetAndJson) {
  const Result r = invoke({"verify", "--level-max", "4", "--checks", "squarefree,main", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  const auto reports = reports_from_json(r.out);
  ASSERT_EQ(reports.size(), 8u);
  EXPECT_EQ(reports.front().check_name, "squarefree");
  EXPECT_EQ(reports.back().check_name, "main");
  for (const auto& rep : reports) EXPECT_EQ(rep.status, CheckStatus::pass);
}

TEST_F(CliTest, Search) {
  const Result r = invoke({"search", "--alphabet", "2", "--threshold", "2", "--mode", "strict", "--max-len", "10"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "alphabet 2, threshold 2, mode strict, max-len 10\n"
            "terminated: yes\n"
            "longest: 3 121\n"
            "length count\n"
            "1 2\n2 2\n3 2\n");
  const auto j = nlohmann::json::parse(
      invoke({"search", "--alphabet", "3", "--threshold", "7/4", "--mode", "strict", "--max-len", "100",
              "--format", "json"})
          .out);
  EXPECT_EQ(j["terminated"], true);
  EXPECT_EQ(j["longest_length"], 38);
  EXPECT_EQ(j["longest"], "12131232132312132123132131232132312131");
}

TEST_F(CliTest, CapFromEnvironment) {
  setenv("POWERFREE_CAP", "3", 1);
  EXPECT_EQ(invoke({"generate", "--level", "3"}).code, kExitOk);
  EXPECT_EQ(invoke({"generate", "--level", "4"}).code, kExitUsage);
  setenv("POWERFREE_CAP", "14", 1);
  EXPECT_EQ(invoke({"generate", "--level", "13"}).code, kExitOk);
  setenv("POWERFREE_CAP", "lots", 1);
  EXPECT_EQ(invoke({"generate", "--level", "1"}).code, kExitUsage);
}

#ifdef POWERFREE_CLI_PATH
TEST_F(CliTest, BinaryExitCodes) {
  const std::string bin = POWERFREE_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("generate --level 3"), kExitOk);
  EXPECT_EQ(status("at --index -1"), kExitOk);
  EXPECT_EQ(status("generate --level 99"), kExitUsage);
  EXPECT_EQ(status("bogus"), kExitUsage);
  FILE* pipe = popen((bin + " at --index -1").c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  char buffer[16] = {};
  ASSERT_NE(std::fgets(buffer, sizeof buffer, pipe), nullptr);
  pclose(pipe);
  EXPECT_STREQ(buffer, "1\n");
}
#endif

}  // namespace
}  // namespace powerfree::cli
