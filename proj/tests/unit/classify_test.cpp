#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "zinc/certificate.hpp"
#include "zinc/classify.hpp"
#include "zinc/constructions.hpp"
#include "zinc/error.hpp"
#include "zinc/theorems.hpp"

namespace {

using namespace zinc;
using Ids = std::vector<ElementId>;

FiniteRing ring_of(std::string_view text) { return build(parse_expr(text)); }

TEST(Idempotents, Examples) {
  EXPECT_EQ(idempotents(ring_of("Z(6)")).elements(), (Ids{0, 1, 3, 4}));
  EXPECT_EQ(idempotents(ring_of("GF(4)")).elements(), (Ids{0, 1}));
  EXPECT_EQ(idempotents(ring_of("M(2,Z(2))")).size(), 8u);
}

TEST(Nilpotents, ExamplesWithIndices) {
  const auto n = nilpotents(ring_of("Z(8)"));
  EXPECT_EQ(n.set.elements(), (Ids{0, 2, 4, 6}));
  EXPECT_EQ(n.index[0], 1u);
  EXPECT_EQ(n.index[2], 3u);
  EXPECT_EQ(n.index[4], 2u);
  EXPECT_EQ(n.index[6], 3u);
  EXPECT_EQ(nilpotents(ring_of("GF(4)")).set.elements(), (Ids{0}));
  EXPECT_EQ(nilpotents(ring_of("T(2,Z(2))")).set.elements(), (Ids{0, 2}));
}

TEST(Units, Examples) {
  EXPECT_EQ(units(ring_of("Z(8)")).set.elements(), (Ids{1, 3, 5, 7}));
  EXPECT_EQ(units(ring_of("M(2,Z(2))")).set.size(), 6u);
  EXPECT_EQ(units(ring_of("Z(2) x Z(4)")).set.elements(), (Ids{3, 7}));
  const auto u = units(ring_of("M(2,Z(3))"));
  for (auto x : u.set.elements()) EXPECT_EQ(u.set.ring.mul(x, u.inverse[x]), u.set.ring.one());
}

TEST(Center, Examples) {
  EXPECT_EQ(center(ring_of("Z(6)")).size(), 6u);
  EXPECT_EQ(center(ring_of("M(2,Z(2))")).elements(), (Ids{0, 9}));
  EXPECT_EQ(center(ring_of("T(2,Z(2))")).elements(), (Ids{0, 5}));
}

TEST(Radical, Examples) {
  EXPECT_EQ(jacobson_radical(ring_of("Z(4)")).elements(), (Ids{0, 2}));
  EXPECT_EQ(jacobson_radical(ring_of("M(2,Z(2))")).elements(), (Ids{0}));
  EXPECT_EQ(jacobson_radical(ring_of("T(2,Z(2))")).elements(), (Ids{0, 2}));
}

TEST(ZeroInsertive, CommutativeRingsGiveZeroOnly) {
  for (auto text : {"Z(2)", "Z(8)", "Z(6)", "GF(9)", "Z(2) x Z(4)", "PolyQuot(Z(2),3)", "TrivExt(Z(4))"})
    EXPECT_EQ(zero_insertive(ring_of(text)).set.elements(), (Ids{0})) << text;
}

TEST(ZeroInsertive, MatrixUnitWitness) {
  const auto zi = zero_insertive(ring_of("M(2,Z(2))"));
  ASSERT_TRUE(zi.set.contains(1));
  const auto& w = zi.witness[1];
  const auto& r = zi.set.ring;
  EXPECT_EQ(r.mul(w.a, w.b), r.zero());
  EXPECT_EQ(r.mul(r.mul(w.a, w.r), w.b), 1u);
  EXPECT_EQ(zi.set.size(), 10u);
}

TEST(ZeroInsertive, GateRefusesLargeRings) {
  EXPECT_THROW(zero_insertive(ring_of("PolyQuot(M(2,Z(3)),2)")), GateError);
}

TEST(ZeroInsertive, WorkerCountDoesNotChangeResult) {
  const auto r = ring_of("M(2,Z(3))");
  Limits four;
  four.threads = 4;
  const auto a = zero_insertive(r);
  const auto b = zero_insertive(r, four);
  EXPECT_EQ(a.set.members, b.set.members);
  for (auto x : a.set.elements()) EXPECT_EQ(a.witness[x], b.witness[x]);
}

TEST(NilClean, Examples) {
  const auto d = nil_clean_decomposition(ring_of("Z(4)"), 3);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->e, 1u);
  EXPECT_EQ(d->n, 2u);
  EXPECT_EQ(d->index, 2u);
  EXPECT_FALSE(nil_clean_decomposition(ring_of("Z(3)"), 2));
  const auto m = ring_of("M(2,Z(3))");
  const auto search = nil_clean_search(m, 2);
  EXPECT_FALSE(search.decomposition);
  EXPECT_EQ(search.idempotents_scanned, oracle::idempotents(m).size());
}

TEST(Sumset, RejectsSetsOfDifferentRings) {
  EXPECT_THROW(sumset(idempotents(ring_of("Z(4)")), idempotents(ring_of("Z(8)"))), PreconditionError);
}

// Differential oracle: optimized classifiers against the triple loops.
class Differential : public ::testing::TestWithParam<std::string> {};

TEST_P(Differential, MatchesNaiveReference) {
  RingAnalysis an(build(parse_expr(GetParam())));
  const auto& r = an.ring();

  EXPECT_EQ(an.idempotents().elements(), oracle::sorted(oracle::idempotents(r)));
  const auto nil = oracle::nilpotents(r);
  Ids nil_ids;
  for (auto [x, k] : nil) {
    nil_ids.push_back(x);
    EXPECT_EQ(an.nilpotents().index[x], k) << x;
  }
  EXPECT_EQ(an.nilpotents().set.elements(), nil_ids);
  EXPECT_EQ(an.units().set.elements(), oracle::sorted(oracle::units(r)));
  EXPECT_EQ(an.center().elements(), oracle::sorted(oracle::center(r)));
  EXPECT_EQ(an.jacobson_radical().elements(), oracle::sorted(oracle::radical(r)));

  const auto zi = oracle::zero_insertive(r);
  EXPECT_EQ(an.zero_insertive().set.elements(), oracle::sorted(zi.members));
  for (auto [x, abr] : zi.least_abr) {
    const auto& w = an.zero_insertive().witness[x];
    EXPECT_EQ((std::array<ElementId, 3>{w.a, w.b, w.r}), abr) << "least witness of " << x;
  }

  std::set<ElementId> n_set(nil_ids.begin(), nil_ids.end());
  EXPECT_EQ(an.en_sum().elements(), oracle::sorted(oracle::sumset(r, oracle::idempotents(r), n_set)));
  EXPECT_EQ(an.eu_sum().elements(), oracle::sorted(oracle::sumset(r, oracle::idempotents(r), oracle::units(r))));
}

std::vector<std::string> small_corpus() {
  std::vector<std::string> out;
  for (const auto& e : default_corpus())
    if (expected_order(e).value() <= 64) out.push_back(to_string(e));
  return out;
}

INSTANTIATE_TEST_SUITE_P(SmallCorpus, Differential, ::testing::ValuesIn(small_corpus()));

// Invariants over every corpus ring inside the full-set gates.
class Invariants : public ::testing::TestWithParam<std::string> {};

TEST_P(Invariants, SetRelations) {
  RingAnalysis an(build(parse_expr(GetParam())));
  const auto& r = an.ring();
  if (!an.full_sets_allowed()) GTEST_SKIP() << "above the full-set gate";

  const auto& e = an.idempotents();
  const auto& n = an.nilpotents();
  EXPECT_EQ((e.members & n.set.members).to_vector(), (Ids{0}));
  EXPECT_TRUE(an.jacobson_radical().is_subset_of(n.set));
  for (ElementId x = 0; x < r.order(); ++x)
    EXPECT_EQ(n.set.contains(x), r.pow(x, r.order()) == r.zero()) << x;

  if (!an.zero_insertive_allowed()) return;
  for (auto x : an.zero_insertive().set.elements())
    ASSERT_TRUE(validate(r, an.zero_insertive().witness[x])) << x;
}

std::vector<std::string> gated_corpus() {
  std::vector<std::string> out;
  for (const auto& e : default_corpus())
    if (expected_order(e).value() <= 4096) out.push_back(to_string(e));
  return out;
}

INSTANTIATE_TEST_SUITE_P(Corpus, Invariants, ::testing::ValuesIn(gated_corpus()));

// w E11 = E1n (w En1) E11 with E1n E11 = 0, for n = 2, 3 over bases of order <= 4.
TEST(ZeroInsertive, ScaledMatrixUnitsAreZeroInsertive) {
  for (auto base_text : {"Z(2)", "Z(3)", "Z(4)", "GF(4)", "Z(2) x Z(2)"}) {
    const auto base = ring_of(base_text);
    for (std::uint32_t n : {2u, 3u}) {
      const auto m = build(RingExpr::Matrix(n, parse_expr(base_text)));
      std::optional<ZeroInsertiveSet> zi;
      if (m.order() <= Limits{}.zi_threshold) zi = zero_insertive(m);
      for (ElementId w = 0; w < base.order(); ++w) {
        const ElementId x = matrix_unit(base, n, 0, 0, w);
        const ZeroInsertiveWitness cert{x, matrix_unit(base, n, 0, n - 1, base.one()),
                                        matrix_unit(base, n, n - 1, 0, w), matrix_unit(base, n, 0, 0, base.one())};
        EXPECT_TRUE(validate(m, Certificate{cert})) << base_text << " n=" << n << " w=" << w;
        if (zi) EXPECT_TRUE(zi->set.contains(x)) << base_text << " n=" << n << " w=" << w;
      }
    }
  }
}

TEST(RingAnalysis, CachesAndGates) {
  RingAnalysis an(ring_of("Z(8)"));
  EXPECT_EQ(&an.idempotents(), &an.idempotents());
  EXPECT_EQ(an.idempotent_list(), (Ids{0, 1}));
  EXPECT_EQ(an.unit_list(), (Ids{1, 3, 5, 7}));
  Limits tight;
  tight.full_set_threshold = 4;
  RingAnalysis gated(ring_of("Z(8)"), tight);
  EXPECT_FALSE(gated.full_sets_allowed());
  EXPECT_THROW(gated.idempotents(), GateError);
}

}  // namespace
