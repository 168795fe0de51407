#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zinc/limits.hpp"
#include "zinc/ring.hpp"

namespace zinc {

/// How audit_axioms covers the axiom instances.
///
///  - full: every tuple of every axiom (order^3 multiplication triples).
///  - sampled: `trials` pseudo-random tuples per axiom from a fixed seed.
///  - generated: every instance, proven through an additive generating set G
///    of (R,+); checks tuples (x, y, g) with g in G and extends them to all
///    tuples by induction on sums of generators. O(order^2 * |G|).
enum class AuditMode { full, sampled, generated };

struct AuditOptions {
  AuditMode mode = AuditMode::full;
  std::uint64_t seed = 0;
  std::uint64_t trials = 100000;
  /// Violations recorded before the audit stops.
  std::size_t max_violations = 16;
};

struct AxiomViolation {
  std::string axiom;
  std::vector<ElementId> witness;
};

struct AxiomReport {
  FiniteRing ring;
  AuditOptions options;
  std::vector<AxiomViolation> violations;
  /// Axiom instances evaluated.
  std::uint64_t instances = 0;

  bool ok() const noexcept { return violations.empty(); }
};

/// Checks abelian-group axioms of +, associativity of *, two-sided
/// distributivity and the unity. Full mode throws GateError when order^3
/// exceeds limits.audit_triple_budget.
AxiomReport audit_axioms(const FiniteRing& ring, const AuditOptions& options = {}, const Limits& limits = {});

/// Full when order^3 fits the triple budget, generated when order^2 * log2(order)
/// fits the generated budget (and the order the 16-bit tables), sampled otherwise.
/// Full and generated audits of a ring without tables run on a materialized copy.
AuditOptions default_audit_options(const FiniteRing& ring, const Limits& limits = {});

/// Greedy additive generating set: ascending scan, an element joins when it
/// lies outside the subgroup generated so far.
std::vector<ElementId> additive_generators(const FiniteRing& ring);

}  // namespace zinc
