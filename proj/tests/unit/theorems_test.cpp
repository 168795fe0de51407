#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "zinc/constructions.hpp"
#include "zinc/error.hpp"
#include "zinc/theorems.hpp"

namespace {

using namespace zinc;

std::vector<RingExpr> parse_all(std::initializer_list<const char*> texts) {
  std::vector<RingExpr> out;
  for (auto t : texts) out.push_back(parse_expr(t));
  return out;
}

const RingOutcome* outcome_for(const TheoremVerdict& v, std::string_view ring) {
  for (const auto& o : v.per_ring)
    if (o.ring == ring) return &o;
  return nullptr;
}

TEST(Catalogue, Ids) {
  std::vector<std::string> ids;
  for (const auto& s : statements()) ids.push_back(s.id);
  EXPECT_EQ(ids.size(), 18u);
  EXPECT_EQ(ids.front(), "S0");
  EXPECT_NE(std::find(ids.begin(), ids.end(), "S10b"), ids.end());
  EXPECT_EQ(ids.back(), "S16");
}

TEST(Aggregate, Rules) {
  using O = Outcome;
  auto agg = [](std::initializer_list<O> os) {
    std::vector<RingOutcome> v;
    for (auto o : os) v.push_back({"R", o, "", {}, {}});
    return aggregate_of(v);
  };
  EXPECT_EQ(agg({}), Aggregate::vacuous);
  EXPECT_EQ(agg({O::hypothesis_not_met}), Aggregate::vacuous);
  EXPECT_EQ(agg({O::pass, O::hypothesis_not_met, O::skipped}), Aggregate::all_pass);
  EXPECT_EQ(agg({O::skipped, O::hypothesis_not_met}), Aggregate::skipped);
  EXPECT_EQ(agg({O::pass, O::fail}), Aggregate::refuted);
}

TEST(Corpus, ReadsCommentsAndReportsLines) {
  const auto c = read_corpus("# rings\nZ(2)\n\n  M(2,Z(2))  # matrices\n");
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[1], RingExpr::Matrix(2, RingExpr::Zn(2)));
  try {
    read_corpus("Z(2)\nM(2,\n");
    FAIL() << "expected a parse error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  EXPECT_EQ(default_corpus().size(), 26u);
}

TEST(Verify, MatricesOverFields) {
  const auto v = verify_statement("S11", default_corpus());
  EXPECT_EQ(v.aggregate, Aggregate::all_pass);
  for (auto [ring, zinc] : {std::pair{"M(2,Z(2))", true}, {"M(2,Z(3))", false}, {"M(2,GF(4))", false},
                            {"M(2,GF(5))", false}, {"M(3,Z(2))", true}}) {
    const auto* o = outcome_for(v, ring);
    ASSERT_NE(o, nullptr) << ring;
    EXPECT_EQ(o->outcome, Outcome::pass) << ring << ": " << o->detail;
  }
}

TEST(Verify, SeparatingExample) { EXPECT_EQ(verify_statement("S15", default_corpus()).aggregate, Aggregate::all_pass); }

TEST(Verify, ZiCharacterizationNeedsNoFiltering) {
  const auto v = verify_statement("S1", default_corpus());
  EXPECT_EQ(v.aggregate, Aggregate::all_pass);
  for (const auto& o : v.per_ring) EXPECT_NE(o.outcome, Outcome::hypothesis_not_met) << o.ring;
}

TEST(Verify, TrivialIdempotentHypothesisIsRecorded) {
  const auto v = verify_statement("S3", parse_all({"H(Z(4))"}));
  EXPECT_NE(v.aggregate, Aggregate::refuted);
  ASSERT_EQ(v.per_ring.size(), 1u);
}

TEST(Verify, UnknownId) { EXPECT_THROW(verify_statement("S99", default_corpus()), PreconditionError); }

TEST(RunAll, NoMatrixRingsLeavesFieldMatrixStatementVacuous) {
  const auto corpus = parse_all({"Z(2)", "Z(3)", "Z(4)", "GF(4)", "T(2,Z(2))", "TrivExt(Z(4))"});
  Harness h(corpus);
  const auto report = h.run_all();
  EXPECT_TRUE(report.ok());
  EXPECT_NE(std::find(report.vacuous.begin(), report.vacuous.end(), "S11"), report.vacuous.end());
  for (const auto& v : report.verdicts) EXPECT_NE(v.aggregate, Aggregate::refuted) << v.id;
}

TEST(RunAll, ZeroBudgetSkipsStatements) {
  Harness h(parse_all({"Z(2)"}));
  const auto report = h.run_all(std::chrono::seconds{0});
  EXPECT_EQ(report.skipped.size(), statements().size());
}

// Mutation hook: a ring with one corrupted product must not pass cleanly.
TEST(Mutation, CorruptedRingIsCaught) {
  const auto m = build(parse_expr("M(2,Z(2))"));
  for (auto [a, b] : {std::pair<ElementId, ElementId>{1, 1}, {2, 4}, {9, 9}, {15, 6}}) {
    std::vector<FiniteRing> rings{oracle::corrupt_mul(m, a, b, m.add(m.mul(a, b), m.one()))};
    Harness h(std::move(rings));
    const auto report = h.run_all();
    EXPECT_FALSE(report.ok()) << a << " * " << b;
  }
}

TEST(Certificates, StoredCertificatesValidate) {
  Harness h(parse_all({"M(2,Z(2))", "M(2,Z(3))", "T(2,Z(2))", "Z(6)", "TrivExt(M(2,Z(2)))"}));
  const auto report = h.run_all();
  for (const auto& v : report.verdicts)
    for (const auto& o : v.per_ring)
      if (o.certificate) {
        ASSERT_TRUE(o.certificate_ring) << v.id << " " << o.ring;
        EXPECT_TRUE(validate(*o.certificate_ring, *o.certificate)) << v.id << " " << o.ring;
      }
}

}  // namespace
