#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "permkit_cli.hpp"

namespace permkit {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, EvalCounts) {
  const auto r = run({"eval", "I[D]", "--maxlen", "5", "--count"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "# class I[D] cap 5\n# counts 1,1,2,4,8,16\n");
}

TEST(Cli, EvalMembers) {
  const auto r = run({"eval", "Av(21)", "--maxlen", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "# class Av(21) cap 3\ne\n1\n12\n123\n");
  std::istringstream in(r.out);
  EXPECT_EQ(read_class(in).cls.size(), 4u);
}

TEST(Cli, EvalJson) {
  const auto r = run({"eval", "L_2", "--maxlen", "3", "--format", "json", "--members"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["expr"], "L_2");
  EXPECT_EQ(j["counts"], nlohmann::json({1, 1, 2, 3}));
  EXPECT_EQ(j["members"][3], nlohmann::json({"132", "213", "321"}));
  EXPECT_EQ(j["members"][2], nlohmann::json({"12", "21"}));
}

TEST(Cli, ParseErrorsExitTwo) {
  const auto r = run({"eval", "Av(122)"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("122"), std::string::npos);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify", "--check", "bogus"}).code, 2);
  EXPECT_EQ(run({"eval", "I", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, VerifyExitCodes) {
  const auto r = run({"verify", "--check", "lemma-decreasing", "--k", "2", "--l", "2", "--maxlen",
                      "7", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["params"]["k"], 2);
  EXPECT_EQ(run({"verify", "--check", "exact-split-example"}).code, 0);
  EXPECT_EQ(run({"verify", "--check", "idi-composable", "--maxlen", "7"}).code, 0);
}

TEST(Cli, VerifyIsByteIdenticalAcrossRuns) {
  auto body = [] {
    auto j = nlohmann::ordered_json::parse(
        run({"verify", "--check", "im-merge", "--maxlen", "6", "--format", "json"}).out);
    j.erase("elapsed_ms");
    return j.dump();
  };
  EXPECT_EQ(body(), body());
}

TEST(Cli, Witness) {
  const auto found = run({"witness", "--class", "I", "--pi", "123", "--pi2", "123", "--maxlen",
                          "8", "--format", "json"});
  EXPECT_EQ(found.code, 0);
  EXPECT_EQ(nlohmann::json::parse(found.out)["stats"]["witness"], "12345");

  const auto none = run({"witness", "--class", "I", "--pi", "12", "--pi2", "12", "--maxlen", "2"});
  EXPECT_EQ(none.code, 3);
  EXPECT_NE(none.out.find("inconclusive"), std::string::npos);

  const auto layered = run({"witness", "--class", "I[D]", "--pi", "21", "--pi2", "21",
                            "--maxlen", "10"});
  EXPECT_TRUE(layered.code == 0 || layered.code == 3);
  EXPECT_EQ(layered.out.find("splittable"), std::string::npos);
}

TEST(Cli, MergeCheck) {
  const auto yes = run({"merge-check", "2143", "21", "21", "--format", "json"});
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(nlohmann::json::parse(yes.out)["stats"]["coloring"], "0011");
  EXPECT_EQ(run({"merge-check", "1234", "21", "21"}).code, 1);
  EXPECT_EQ(run({"merge-check", "321", "--part", "I", "--part", "I"}).code, 1);
  EXPECT_EQ(run({"merge-check", "4231", "--part", "Av(132)", "--part", "Av(213)"}).code, 0);
  EXPECT_EQ(run({"merge-check", "12", "1"}).code, 2);
  EXPECT_EQ(run({"merge-check", "123", "1", "1"}).code, 2);
}

TEST(Cli, ComposeAndInflate) {
  EXPECT_EQ(run({"compose", "231", "312"}).out, "123\n");
  EXPECT_EQ(run({"inflate", "2413", "132", "21", "1", "12"}).out, "24387156\n");
  EXPECT_EQ(run({"inflate", "2413", "132", "--format", "json"}).code, 2);
  EXPECT_EQ(run({"compose", "21", "123"}).code, 2);
  EXPECT_EQ(run({"inflate", "12", "1", "1", "--format", "json"}).out, "{\"result\":\"12\"}\n");
}

TEST(Cli, BudgetExitsFour) {
  EXPECT_EQ(run({"eval", "compose(L,L)", "--maxlen", "5", "--budget", "10"}).code, 4);
  ::setenv("PERMKIT_BUDGET", "10", 1);
  EXPECT_EQ(run({"eval", "compose(L,L)", "--maxlen", "5", "--count"}).code, 4);
  EXPECT_EQ(run({"eval", "compose(L,L)", "--maxlen", "5", "--count", "--budget", "100000"}).code, 0);
  ::unsetenv("PERMKIT_BUDGET");
}

}  // namespace
}  // namespace permkit
