#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include <grassflop/cli.hpp>

using namespace grassflop;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Parse, IntLists) {
  EXPECT_EQ(cli::parse_int_list("2,1"), (std::vector<int>{2, 1}));
  EXPECT_EQ(cli::parse_int_list("[2, 1]"), (std::vector<int>{2, 1}));
  EXPECT_EQ(cli::parse_int_list("-1,0"), (std::vector<int>{-1, 0}));
  EXPECT_TRUE(cli::parse_int_list("").empty());
  EXPECT_TRUE(cli::parse_int_list("[]").empty());
  EXPECT_THROW(cli::parse_int_list("2,x"), std::invalid_argument);
  EXPECT_THROW(cli::parse_partition("1,2"), std::invalid_argument);
}

TEST(Cli, KapranovJson) {
  auto r = run({"kapranov", "--d", "2", "--m", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 6u);
  EXPECT_EQ(j[0], nlohmann::json::array());
  EXPECT_EQ(j[5], (nlohmann::json{2, 2}));
}

TEST(Cli, KapranovTable) {
  auto r = run({"--format", "table", "kapranov", "--d", "1", "--m", "3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[]\n[1]\n[1,1]\n");
}

TEST(Cli, Bwb) {
  auto r = run({"--format", "table", "bwb", "--d", "1", "--n", "2", "--ws", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "H^1 : [1,1]\n");

  r = run({"--format", "table", "bwb", "--d", "1", "--n", "2", "--ws", "1"});
  EXPECT_EQ(r.out, "ZERO\n");

  r = run({"bwb", "--d", "1", "--n", "2", "--ws", "-1"});
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["outcome"]["degree"], 0);
  EXPECT_EQ(j["outcome"]["weight"], (nlohmann::json{0, -1}));
}

TEST(Cli, Lr) {
  auto r = run({"lr", "--lambda", "1", "--mu", "1"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["coefficients"].size(), 2u);
  r = run({"lr", "--lambda", "1", "--mu", "1", "--n", "1"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["coefficients"].size(), 1u);
}

TEST(Cli, DsComplex) {
  auto r = run({"ds-complex", "--delta", "1", "--d", "2", "--mprime", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["K"], 2);
  r = run({"ds-complex", "--delta", "2", "--d", "2", "--mprime", "3"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, VerifySchema) {
  auto r = run({"verify", "window", "--d", "2", "--m", "4", "--mprime", "3", "--cutoff", "3"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j["checks"].is_array());
  ASSERT_FALSE(j["checks"].empty());
  for (auto& c : j["checks"]) {
    EXPECT_TRUE(c["name"].is_string());
    EXPECT_TRUE(c["params"].is_object());
    EXPECT_EQ(c["pass"], true);
    EXPECT_TRUE(c.contains("first_failure"));
    EXPECT_TRUE(c["first_failure"].is_null());
  }
}

TEST(Cli, VerifyAllPasses) {
  auto r = run({"verify", "all", "--d", "2", "--m", "4", "--mprime", "3", "--cutoff", "3", "--trials", "10"});
  EXPECT_EQ(r.code, 0) << r.out;
  auto t = run({"--format", "table", "verify", "pinch", "--d", "2", "--cutoff", "4"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("PASS"), std::string::npos);
  EXPECT_EQ(t.out.find("FAIL"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"kapranov", "--d", "2", "--m", "4", "--bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"verify", "sod", "--d", "2", "--m", "2", "--mprime", "3"}).code, 2);
  EXPECT_EQ(run({"verify", "kernel-idents", "--d", "7", "--m", "1", "--mprime", "1"}).code, 2);
  EXPECT_EQ(run({"kapranov", "--d", "0", "--m", "4"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "kapranov", "--d", "1", "--m", "2"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, GenerateTable) {
  auto r = run({"--format", "table", "generate", "--lambda", "2,2", "--d", "2", "--m", "4", "--mprime", "3", "--cutoff", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("window"), std::string::npos);
  EXPECT_NE(r.out.find("O [1]"), std::string::npos);
}

TEST(Cli, ParallelismDoesNotChangeOutput) {
  const std::vector<std::string> base = {"verify", "all", "--d", "2", "--m", "4", "--mprime", "3", "--cutoff", "3", "--trials", "5"};
  auto serial = base, wide = base;
  serial.insert(serial.begin(), {"-j", "1"});
  wide.insert(wide.begin(), {"-j", "4"});
  auto a = run(serial), b = run(wide);
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(a.out, b.out);
  auto g1 = run({"-j", "1", "generate", "--lambda", "2,2", "--d", "2", "--m", "4", "--mprime", "3", "--cutoff", "3"});
  auto g4 = run({"-j", "4", "generate", "--lambda", "2,2", "--d", "2", "--m", "4", "--mprime", "3", "--cutoff", "3"});
  EXPECT_EQ(g1.out, g4.out);
  parallelism() = 1;
}

TEST(Cli, CutoffFromEnvironment) {
  setenv(cli::kCutoffEnv, "2", 1);
  auto r = run({"verify", "orth", "--d", "2", "--m", "4", "--mprime", "3"});
  unsetenv(cli::kCutoffEnv);
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["checks"][0]["params"]["cutoff"], 2);

  setenv(cli::kCutoffEnv, "two", 1);
  EXPECT_EQ(run({"verify", "orth", "--d", "2", "--m", "4", "--mprime", "3"}).code, 2);
  unsetenv(cli::kCutoffEnv);

  setenv(cli::kCutoffEnv, "2", 1);
  r = run({"verify", "orth", "--d", "2", "--m", "4", "--mprime", "3", "--cutoff", "3"});
  unsetenv(cli::kCutoffEnv);
  EXPECT_EQ(nlohmann::json::parse(r.out)["checks"][0]["params"]["cutoff"], 3);
}
