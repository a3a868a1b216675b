#include <gtest/gtest.h>

#include <string>

#include "test_util.hpp"

namespace permkit {
namespace {

using test::P;

TEST(Verify, NamedChecksPassAtDefaults) {
  for (auto name : check_names()) {
    const auto r = run_check(name, CheckParams{});
    EXPECT_EQ(r.verdict, Verdict::pass) << name << "\n" << r.to_text();
    EXPECT_EQ(r.check, name);
    EXPECT_FALSE(r.counterexample);
  }
}

TEST(Verify, UnknownCheck) {
  EXPECT_THROW(run_check("no-such-check", CheckParams{}), invalid_input);
}

TEST(Verify, ReportsAreDeterministicApartFromElapsed) {
  CheckParams params;
  params.maxlen = 6;
  const auto a = run_check("idi-composable", params).to_json(false).dump();
  const auto b = run_check("idi-composable", params).to_json(false).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("elapsed_ms"), std::string::npos);
  EXPECT_NE(run_check("idi-composable", params).to_json().dump().find("elapsed_ms"),
            std::string::npos);
}

TEST(Verify, ReportSchemaFieldOrder) {
  const auto j = verify_av1324_split(5).to_json();
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"check", "params", "verdict", "stats", "elapsed_ms"}));
}

TEST(Verify, FailingReportCarriesCounterexample) {
  VerificationReport bad;
  bad.check = "demo";
  bad.fail({P("321"), Coloring::parse("011"), "note"});
  const auto j = bad.to_json(false);
  EXPECT_EQ(j["verdict"], "fail");
  EXPECT_EQ(j["counterexample"]["permutation"], "321");
  EXPECT_EQ(j["counterexample"]["coloring"], "011");
}

TEST(Verify, WitnessReports) {
  const auto found = witness_report("I", P("123"), P("123"), 8);
  EXPECT_EQ(found.verdict, Verdict::pass);
  EXPECT_EQ(found.stats["witness"], "12345");
  const auto none = witness_report("I", P("12"), P("12"), 2);
  EXPECT_EQ(none.verdict, Verdict::inconclusive);
  EXPECT_EQ(exit_code(none.verdict), 3);
}

TEST(Verify, LemmaModes) {
  EXPECT_EQ(verify_lemma_decreasing(1, 2, 6, "increasing").params["mode"], "increasing");
  EXPECT_EQ(verify_lemma_decreasing(1, 2, 6, "decreasing").verdict, Verdict::pass);
  EXPECT_THROW(verify_lemma_decreasing(1, 2, 6, "sideways"), invalid_input);
}

}  // namespace
}  // namespace permkit
