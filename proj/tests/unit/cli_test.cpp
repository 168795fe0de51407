#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "app.hpp"
#include "report.hpp"
#include "zinc/constructions.hpp"

namespace {

using zinc::cli::Json;

struct Result {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Result cli(std::vector<std::string> args) {
  std::vector<const char*> argv{"zinc-lab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = zinc::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, CheckHolds) {
  const auto r = cli({"--format", "json", "check", "zinc", "M(2,Z(2))"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["schema_version"], "1");
  EXPECT_EQ(j["ring"]["order"], 16);
  EXPECT_EQ(j["properties"]["zinc"]["holds"], true);
}

TEST(Cli, CheckFailsWithFormattedCertificate) {
  const auto r = cli({"--format", "json", "check", "zinc", "M(2,Z(3))"});
  ASSERT_EQ(r.code, 1) << r.err;
  const auto cert = r.json()["properties"]["zinc"]["certificate"];
  EXPECT_EQ(cert["fields"]["x"]["element"], "[[2,0],[0,0]]");
  EXPECT_EQ(cert["valid"], true);

  // Feed the printed triple back through plain arithmetic.
  const auto m = zinc::build(zinc::parse_expr("M(2,Z(3))"));
  const zinc::ElementId a = cert["fields"]["a"]["index"], rr = cert["fields"]["r"]["index"],
                        b = cert["fields"]["b"]["index"];
  EXPECT_EQ(m.mul(a, b), m.zero());
  EXPECT_EQ(m.mul(m.mul(a, rr), b), zinc::ElementId{cert["fields"]["x"]["index"]});
}

TEST(Cli, WeakSemicommutativityWitness) {
  const auto r = cli({"--format", "json", "check", "weakly_semicommutative", "M(2,Z(2))"});
  ASSERT_EQ(r.code, 1);
  const auto f = r.json()["properties"]["weakly_semicommutative"]["certificate"]["fields"];
  EXPECT_EQ(f["a"]["index"], 1);
  EXPECT_EQ(f["r"]["index"], 2);
  EXPECT_EQ(f["b"]["index"], 4);
}

TEST(Cli, VerifySeparatingExample) {
  const auto r = cli({"--format", "json", "verify", "S15"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["theorems"]["S15"]["aggregate"], "all_pass");
}

TEST(Cli, WitnessZi) {
  auto r = cli({"--format", "json", "witness", "zi", "M(2,Z(2))", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["in_zi"], true);
  EXPECT_EQ(r.json()["witness"]["valid"], true);
  r = cli({"witness", "zi", "M(2,Z(2))", "6"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("not in ZI"), std::string::npos);
  EXPECT_EQ(cli({"witness", "zi", "M(2,Z(2))", "16"}).code, 2);
}

TEST(Cli, UsageParseAndGateErrors) {
  auto r = cli({"--format", "json", "check", "zinc", "M(2,Z(2)"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("byte 8"), std::string::npos) << r.err;
  EXPECT_EQ(cli({"check", "zinc", "GF(6)"}).code, 2);
  EXPECT_EQ(cli({"check", "tidy", "Z(2)"}).code, 2);
  EXPECT_EQ(cli({"--format", "yaml", "corpus"}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"verify", "S99"}).code, 2);
  r = cli({"--max-order", "10", "check", "zinc", "M(2,Z(2))"});
  EXPECT_EQ(r.code, 3);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, FullSetsLimit) {
  auto j = cli({"--format", "json", "classify", "M(2,Z(2))"}).json();
  EXPECT_TRUE(j["sets"]["E"].contains("members"));
  j = cli({"--format", "json", "--full-sets-limit", "4", "classify", "M(2,Z(2))"}).json();
  EXPECT_FALSE(j["sets"]["E"].contains("members"));
  EXPECT_EQ(j["sets"]["E"]["size"], 8);
  j = cli({"--format", "json", "--full-sets-limit", "4", "--full-sets", "classify", "M(2,Z(2))"}).json();
  EXPECT_TRUE(j["sets"]["E"].contains("members"));
}

TEST(Cli, OutputIsStableAcrossThreadCounts) {
  const auto a = cli({"--format", "json", "--threads", "1", "classify", "M(2,Z(3))"});
  const auto b = cli({"--format", "json", "--threads", "3", "classify", "M(2,Z(3))"});
  ASSERT_EQ(a.code, b.code);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.find("elapsed"), std::string::npos);
}

TEST(Cli, CorpusListing) {
  const auto r = cli({"--format", "json", "corpus"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["corpus"].size(), 26u);
  const auto text = cli({"corpus"});
  EXPECT_NE(text.out.find("M(2,Z(3))"), std::string::npos);
}

}  // namespace
