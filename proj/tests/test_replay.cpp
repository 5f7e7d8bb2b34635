#include "kantor/replay/verify.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace kantor;

TEST(ReplayReport, SortedUniqueAndExitCodes) {
  ReplayReport rep("demo");
  rep.add("b.second", true);
  rep.add("a.first", CheckStatus::discrepancy, "char 5");
  EXPECT_THROW(rep.add("b.second", true), std::logic_error);
  ASSERT_EQ(rep.checks().size(), 2u);
  EXPECT_EQ(rep.checks()[0].id, "a.first");
  EXPECT_EQ(rep.exit_code(false), 1);
  EXPECT_EQ(rep.exit_code(true), 0);
  rep.add("c.third", false, "broken");
  EXPECT_EQ(rep.exit_code(true), 1);
  EXPECT_EQ(rep.to_json()["summary"]["fail"], 1);
  EXPECT_EQ(rep.to_json()["schema_version"], kReportSchemaVersion);
}

TEST(ReplayReport, RunTurnsExceptionsIntoFailures) {
  ReplayReport rep("demo");
  rep.run("x", [] { throw std::runtime_error("boom"); });
  ASSERT_NE(rep.find("x.exception"), nullptr);
  EXPECT_EQ(rep.find("x.exception")->status, CheckStatus::fail);
  EXPECT_EQ(rep.find("x.exception")->details, "boom");
}

TEST(TableReplay, StatedCellsAndCorruption) {
  const auto rep = cmd_table();
  EXPECT_EQ(rep.checks().size(), 64u);
  EXPECT_EQ(rep.count(CheckStatus::pass), 64u);
  EXPECT_EQ(rep.find("table.e2e3")->details, "(2)e1");
  EXPECT_EQ(rep.find("table.e4e8")->details, "0");
  auto table = w2_published_table();
  table[1][2].coef = 3;
  const auto bad = cmd_table(table);
  EXPECT_EQ(bad.count(CheckStatus::fail), 1u);
  EXPECT_EQ(bad.find("table.e2e3")->status, CheckStatus::fail);
}

TEST(VerifyLemmas, ScopeLimitsTheChecks) {
  ReplayOptions opt;
  opt.scope = ReplayScope::table;
  const auto rep = cmd_verify_lemmas(opt);
  for (const auto& c : rep.checks()) {
    EXPECT_TRUE(c.id.rfind("table.", 0) == 0 || c.id.rfind("conservative.", 0) == 0) << c.id;
  }
  EXPECT_EQ(rep.exit_code(false), 0);
  EXPECT_THROW(parse_scope("everything"), std::invalid_argument);
}

TEST(VerifyLemmas, IdempotentScopeIsDeterministic) {
  ReplayOptions opt;
  opt.scope = ReplayScope::idempotents;
  opt.seed = 42;
  const auto a = cmd_verify_lemmas(opt).to_json().dump();
  const auto b = cmd_verify_lemmas(opt).to_json().dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(cmd_verify_lemmas(opt).exit_code(false), 0);
}

TEST(VerifyLemmas, InfeasibleCensusNeedsSample) {
  ReplayOptions opt;
  opt.scope = ReplayScope::idempotents;
  opt.field = FieldSpec::prime(11);
  const auto rep = cmd_verify_lemmas(opt);
  ASSERT_NE(rep.find("census.idempotents.gf11"), nullptr);
  EXPECT_EQ(rep.find("census.idempotents.gf11")->status, CheckStatus::fail);
  opt.sample = 200;
  const auto sampled = cmd_verify_lemmas(opt);
  EXPECT_TRUE(sampled.sampled());
  EXPECT_EQ(sampled.find("census.idempotents.gf11")->status, CheckStatus::pass);
}

TEST(Fixtures, FilesMatchTheGenerator) {
  for (const auto& f : bundled_fixtures()) {
    std::ifstream in(std::filesystem::path(KANTOR_FIXTURES) / f.file_name, std::ios::binary);
    ASSERT_TRUE(in) << f.file_name;
    std::ostringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), f.text) << f.file_name;
    EXPECT_EQ(write_algebra(parse_algebra(f.text)), f.text);
  }
}
