#include <map>
#include <vector>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "zinc/constructions.hpp"
#include "zinc/error.hpp"
#include "zinc/properties.hpp"
#include "zinc/theorems.hpp"

namespace {

using namespace zinc;
using Ids = std::vector<ElementId>;

FiniteRing ring_of(std::string_view text) { return build(parse_expr(text)); }

const FailureWitness& failure(const PropertyVerdict& v) { return std::get<FailureWitness>(*v.certificate); }

TEST(CheckProperty, CommutativeRingIsZinc) {
  const auto v = check_property(ring_of("Z(4)"), "zinc");
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.mode, CheckMode::full);
}

TEST(CheckProperty, TwoByTwoOverTwoSeparatesTheNotions) {
  const auto m = ring_of("M(2,Z(2))");
  const auto weak = check_property(m, "weakly_semicommutative");
  ASSERT_FALSE(weak.holds);
  EXPECT_EQ(failure(weak).elements, (Ids{1, 2, 4}));
  EXPECT_EQ(weak.characterization, false);
  EXPECT_TRUE(validate(m, *weak.certificate));
  EXPECT_TRUE(check_property(m, "zinc").holds);
}

TEST(CheckProperty, TwoByTwoOverThreeIsNotZinc) {
  const auto m = ring_of("M(2,Z(3))");
  const auto v = check_property(m, "zinc");
  ASSERT_FALSE(v.holds);
  const auto& f = failure(v);
  EXPECT_EQ(f.context, "zinc");
  EXPECT_EQ(f.elements.front(), 2u);
  EXPECT_EQ(format_element(m, f.elements.front()), "[[2,0],[0,0]]");
  EXPECT_EQ(f.exhausted, oracle::idempotents(m).size());
  EXPECT_TRUE(validate(m, *v.certificate));
}

TEST(CheckProperty, SmallExamples) {
  EXPECT_TRUE(check_property(ring_of("T(2,Z(2))"), "j_clean").holds);
  const auto z3 = check_property(ring_of("Z(3)"), "nil_clean");
  ASSERT_FALSE(z3.holds);
  EXPECT_EQ(failure(z3).elements, (Ids{2}));
  EXPECT_FALSE(check_property(ring_of("Z(6)"), "only_trivial_idempotents").holds);
  EXPECT_TRUE(check_property(ring_of("GF(9)"), "no_zero_divisors").holds);
  // ij = k = -k = ji in characteristic 2.
  EXPECT_TRUE(check_property(ring_of("H(Z(2))"), "commutative").holds);
  EXPECT_FALSE(check_property(ring_of("H(Z(3))"), "commutative").holds);
}

TEST(CheckProperty, UnknownNameAndGate) {
  EXPECT_THROW(check_property(ring_of("Z(2)"), "tidy"), PreconditionError);
  EXPECT_THROW(check_property(ring_of("PolyQuot(M(2,Z(3)),2)"), "zinc"), GateError);
  EXPECT_EQ(property_names().size(), 10u);
}

TEST(WeaklyClean, Examples) {
  const auto w = weakly_clean_witness(ring_of("Z(2)"), 1);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (WeaklyCleanWitness{1, 0, 1, 0}));
  const auto z6 = ring_of("Z(6)");
  const auto w6 = weakly_clean_witness(z6, 3);
  ASSERT_TRUE(w6);
  EXPECT_TRUE(validate(z6, *w6));
}

TEST(WeaklyClean, EveryCorpusElementHasAValidWitness) {
  for (const auto& e : default_corpus()) {
    if (expected_order(e).value() > 256) continue;
    RingAnalysis an(build(e));
    for (ElementId x = 0; x < an.ring().order(); ++x) {
      const auto w = weakly_clean_witness(an, x);
      ASSERT_TRUE(w) << to_string(e) << " " << x;
      ASSERT_TRUE(validate(an.ring(), *w)) << to_string(e) << " " << x;
    }
  }
}

TEST(CertificateCheck, LiftedCornerBlockRefutes) {
  const auto t = ring_of("T(2,M(2,Z(3)))");
  const std::vector<ZincCandidate> candidates{{1, 6, 9}};
  const auto v = zinc_certificate_check(t, candidates);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.mode, CheckMode::certificate_only);
  ASSERT_TRUE(v.certificate);
  EXPECT_EQ(failure(v).elements.front(), 2u);
  EXPECT_TRUE(validate(t, *v.certificate));
}

TEST(CertificateCheck, NilCleanCandidateHolds) {
  const auto m = ring_of("M(2,Z(2))");
  const std::vector<ZincCandidate> candidates{{1, 2, 4}};
  EXPECT_TRUE(zinc_certificate_check(m, candidates).holds);
  const auto empty = zinc_certificate_check(m, {});
  EXPECT_TRUE(empty.holds);
  EXPECT_EQ(empty.mode, CheckMode::certificate_only);
  const std::vector<ZincCandidate> bad{{1, 0, 1}};
  EXPECT_THROW(zinc_certificate_check(m, bad), PreconditionError);
}

TEST(CertificateCheck, NilCleanOnCandidates) {
  const auto z3 = ring_of("Z(3)");
  const std::vector<ElementId> xs{0, 1, 2};
  const auto v = check_property_on(z3, "nil_clean", xs);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.mode, CheckMode::certificate_only);
  EXPECT_TRUE(check_property_on(z3, "nil_clean", std::vector<ElementId>{0, 1}).holds);
}

// Per-ring property suite over the corpus inside the ZI gate.
class Suite : public ::testing::TestWithParam<std::string> {};

TEST_P(Suite, DualRoutesAgreeAndCertificatesValidate) {
  RingAnalysis an(build(parse_expr(GetParam())));
  const auto& r = an.ring();
  std::map<std::string, bool> holds;
  for (auto name : property_names()) {
    const auto v = check_property(an, name);
    holds[std::string(name)] = v.holds;
    if (v.characterization) EXPECT_EQ(*v.characterization, v.holds) << name;
    if (!v.holds) ASSERT_TRUE(v.certificate) << name;
    if (v.certificate) EXPECT_TRUE(validate(r, *v.certificate)) << name;
    for (const auto& c : v.evidence) ASSERT_TRUE(validate(r, c)) << name;
  }

  if (r.order() <= 256) {
    EXPECT_EQ(holds["semicommutative"], oracle::semicommutative(r, false));
    EXPECT_EQ(holds["weakly_semicommutative"], oracle::semicommutative(r, true));
    EXPECT_EQ(holds["zinc"], oracle::zinc(r));
  }

  auto implies = [&](const char* p, const char* q) {
    if (holds[p]) EXPECT_TRUE(holds[q]) << p << " => " << q;
  };
  implies("commutative", "semicommutative");
  implies("semicommutative", "weakly_semicommutative");
  implies("weakly_semicommutative", "zinc");
  implies("nil_clean", "clean");
  implies("nil_clean", "zinc");
  implies("j_clean", "clean");
  implies("clean", "weakly_clean");
  implies("no_zero_divisors", "only_trivial_idempotents");
  EXPECT_TRUE(holds["clean"]);
}

std::vector<std::string> zi_corpus() {
  std::vector<std::string> out;
  for (const auto& e : default_corpus())
    if (expected_order(e).value() <= Limits{}.zi_threshold) out.push_back(to_string(e));
  return out;
}

INSTANTIATE_TEST_SUITE_P(Corpus, Suite, ::testing::ValuesIn(zi_corpus()));

TEST(Counterexamples, LeastInScanOrder) {
  const auto m = ring_of("M(2,Z(2))");
  const auto semi = semicommutative_counterexample(m);
  ASSERT_TRUE(semi);
  EXPECT_TRUE(validate(m, *semi));
  EXPECT_FALSE(semicommutative_counterexample(ring_of("Z(8)")));
  EXPECT_FALSE(weakly_semicommutative_counterexample(ring_of("T(2,Z(2))")));
}

}  // namespace
