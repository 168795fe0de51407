#include <vector>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "zinc/audit.hpp"
#include "zinc/constructions.hpp"
#include "zinc/error.hpp"

namespace {

using namespace zinc;

FiniteRing ring_of(std::string_view text) { return build(parse_expr(text)); }

TEST(Build, Orders) {
  EXPECT_EQ(build(RingExpr::Matrix(2, RingExpr::Zn(2))).order(), 16u);
  EXPECT_EQ(build(RingExpr::UpperTriangular(3, RingExpr::Zn(2))).order(), 64u);
  EXPECT_EQ(ring_of("PolyQuot(GF(4),3)").order(), 64u);
  EXPECT_EQ(ring_of("Z(2) x Z(3) x Z(4)").order(), 24u);
  EXPECT_EQ(ring_of("H(Z(3))").order(), 81u);
  EXPECT_EQ(ring_of("TrivExt(Z(5))").order(), 25u);
  EXPECT_EQ(ring_of("Morita(Z(3))").order(), 81u);
  for (auto text : {"M(3,Z(2))", "T(2,GF(4))", "TrivExt(M(2,Z(2)))", "(Z(2) x Z(2)) x GF(8)"}) {
    const auto e = parse_expr(text);
    EXPECT_EQ(build(e).order(), expected_order(e).value()) << text;
  }
}

TEST(Build, ConstructedRingsPassTheAudit) {
  for (auto text : {"GF(8)", "GF(9)", "T(2,Z(4))", "TrivExt(Z(4))", "PolyQuot(Z(3),3)", "H(Z(3))", "Morita(Z(3))",
                    "Z(2) x M(2,Z(2))", "T(2,GF(4))"}) {
    const auto report = audit_axioms(ring_of(text));
    EXPECT_TRUE(report.ok()) << text << ": " << report.violations.front().axiom;
  }
}

TEST(Build, OrderCeiling) {
  Limits small;
  small.order_ceiling = 100;
  EXPECT_THROW(build(parse_expr("M(2,Z(4))"), small), GateError);
}

TEST(GaloisField, LeastModulus) {
  EXPECT_EQ(least_monic_irreducible(2, 2), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(least_monic_irreducible(2, 3), (std::vector<std::uint32_t>{1, 0, 1, 1}));
  EXPECT_EQ(least_monic_irreducible(3, 2), (std::vector<std::uint32_t>{1, 0, 1}));
}

// Every degree-2 monic over Z_2 except x^2+x+1 has a root.
TEST(GaloisField, IrreducibilityAgreesWithRootTest) {
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::uint32_t c0 = 0; c0 < p; ++c0)
      for (std::uint32_t c1 = 0; c1 < p; ++c1) {
        bool root = false;
        for (std::uint32_t t = 0; t < p; ++t) root = root || (c0 + c1 * t + t * t) % p == 0;
        const std::vector<std::uint32_t> f{c0, c1, 1};
        EXPECT_EQ(is_irreducible_mod_p(f, p), !root) << p << ": " << c0 << " " << c1;
      }
}

TEST(GaloisField, EveryNonzeroElementIsInvertible) {
  for (auto text : {"GF(4)", "GF(8)", "GF(9)", "GF(25)"}) {
    const auto f = ring_of(text);
    for (ElementId x = 1; x < f.order(); ++x) EXPECT_TRUE(oracle::inverse(f, x).has_value()) << text << " " << x;
  }
}

TEST(GaloisField, PrimePowers) {
  EXPECT_EQ(prime_power(5), (std::pair<std::uint32_t, std::uint32_t>{5, 1}));
  EXPECT_EQ(prime_power(64), (std::pair<std::uint32_t, std::uint32_t>{2, 6}));
  EXPECT_EQ(prime_power(81), (std::pair<std::uint32_t, std::uint32_t>{3, 4}));
  EXPECT_FALSE(prime_power(6).has_value());
  EXPECT_FALSE(prime_power(1).has_value());
}

TEST(Quaternion, Relations) {
  const auto h = ring_of("H(Z(4))");
  ASSERT_EQ(h.order(), 256u);
  const ElementId i = 4, j = 16, k = 64;
  EXPECT_EQ(h.mul(i, j), k);
  EXPECT_EQ(h.mul(j, i), h.neg(k));
  for (ElementId u : {i, j, k}) EXPECT_EQ(h.mul(u, u), h.neg(h.one()));
}

TEST(Corner, ProjectionOntoFactor) {
  const auto r = ring_of("Z(2) x Z(4)");
  const auto c = corner_ring(r, 1);
  EXPECT_EQ(c.order(), 2u);
  EXPECT_EQ(c.one(), 1u);
  EXPECT_TRUE(audit_axioms(c).ok());
}

TEST(Corner, CentralIdempotentOfZ6) {
  const auto c = corner_ring(ring_of("Z(6)"), 3);
  EXPECT_EQ(c.order(), 2u);
  EXPECT_TRUE(audit_axioms(c).ok());
}

TEST(Corner, RejectsNonCentralOrNonIdempotent) {
  EXPECT_THROW(corner_ring(ring_of("M(2,Z(2))"), 1), PreconditionError);
  EXPECT_THROW(corner_ring(ring_of("Z(6)"), 2), PreconditionError);
}

TEST(Morita, RegularContext) {
  const auto w = ring_of("Z(2)");
  const auto r = trivial_morita(w, w, regular_bimodule(w));
  ASSERT_EQ(r.order(), 16u);
  EXPECT_TRUE(audit_axioms(r).ok());
  // (a, m, p, b) with base order 2: m sits at weight 2, p at weight 4.
  for (ElementId m : {0u, 2u})
    for (ElementId n : {0u, 2u}) EXPECT_EQ(r.mul(m, n), r.zero());
  for (ElementId p : {0u, 4u})
    for (ElementId q : {0u, 4u}) EXPECT_EQ(r.mul(p, q), r.zero());
  EXPECT_EQ(r.mul(2, 4), r.zero());
  EXPECT_EQ(r.mul(4, 2), r.zero());
}

TEST(Morita, DistinctRingsThroughReduction) {
  const auto a = ring_of("Z(4)");
  const auto b = ring_of("Z(2)");
  BimoduleSpec spec{b,
                    [&](ElementId x, ElementId m) { return b.mul(x % 2, m); },
                    [&](ElementId m, ElementId y) { return b.mul(m, y); },
                    [&](ElementId y, ElementId p) { return b.mul(y, p); },
                    [&](ElementId p, ElementId x) { return b.mul(p, x % 2); }};
  EXPECT_TRUE(audit_bimodule(a, b, spec).empty());
  const auto r = trivial_morita(a, b, spec);
  EXPECT_EQ(r.order(), 32u);
  EXPECT_TRUE(audit_axioms(r).ok());

  spec.a_on_m = [](ElementId, ElementId m) { return m; };
  EXPECT_FALSE(audit_bimodule(a, b, spec).empty());
  EXPECT_THROW(trivial_morita(a, b, spec), PreconditionError);
}

TEST(Quotient, MatricesOverZ4ModTwo) {
  const auto r = ring_of("M(2,Z(4))");
  const ElementId two = r.add(r.one(), r.one());
  const auto q = quotient_by_nil_ideal(r, std::vector<ElementId>{two});
  EXPECT_EQ(q.ideal.members.count(), 16u);
  EXPECT_EQ(q.ring.order(), 16u);
  EXPECT_TRUE(audit_axioms(q.ring).ok());
  for (ElementId x = 0; x < r.order(); ++x)
    for (ElementId y = 0; y < r.order(); ++y) {
      ASSERT_EQ(q.projection[r.add(x, y)], q.ring.add(q.projection[x], q.projection[y]));
      ASSERT_EQ(q.projection[r.mul(x, y)], q.ring.mul(q.projection[x], q.projection[y]));
    }
  EXPECT_EQ(q.projection[r.one()], q.ring.one());
  for (ElementId c = 0; c < q.ring.order(); ++c) EXPECT_EQ(q.projection[q.representatives[c]], c);
}

TEST(Quotient, RejectsNonNilIdeal) {
  EXPECT_THROW(quotient_by_nil_ideal(ring_of("Z(6)"), std::vector<ElementId>{2}), PreconditionError);
  EXPECT_THROW(quotient_by_nil_ideal(ring_of("Z(4)"), std::vector<ElementId>{1}), PreconditionError);
}

TEST(IdealClosure, CosetRepresentatives) {
  const auto r = ring_of("Z(8)");
  const auto i = ideal_closure(r, std::vector<ElementId>{4});
  EXPECT_EQ(oracle::sorted(i.members.to_vector()), (std::vector<ElementId>{0, 4}));
  EXPECT_EQ(i.representative[5], 1u);
  EXPECT_EQ(i.representative[6], 2u);
}

TEST(UpperTriangular, UnitriangularMatricesAreUnits) {
  const auto t = ring_of("T(3,Z(2))");
  int unitriangular = 0;
  for (ElementId x = 0; x < t.order(); ++x) {
    const auto c = decode_coordinates(x, 2, 6);
    if (c[0] == 1 && c[3] == 1 && c[5] == 1) {
      ++unitriangular;
      EXPECT_TRUE(oracle::inverse(t, x).has_value()) << x;
    }
  }
  EXPECT_EQ(unitriangular, 8);
}

TEST(TrivialExtension, ModulePartSquaresToZero) {
  const auto r = ring_of("TrivExt(Z(4))");
  for (ElementId m = 0; m < 4; ++m)
    for (ElementId n = 0; n < 4; ++n) EXPECT_EQ(r.mul(4 * m, 4 * n), r.zero());
  EXPECT_EQ(r.mul(2, 4), 8u);
}

TEST(Product, DirectProductOfPrebuiltRings) {
  const std::vector<FiniteRing> factors{ring_of("Z(2)"), ring_of("Z(3)")};
  const auto p = direct_product(factors);
  EXPECT_EQ(p.order(), 6u);
  EXPECT_EQ(p.name(), "Z(2) x Z(3)");
  EXPECT_EQ(oracle::units(p).size(), 2u);
}

}  // namespace
