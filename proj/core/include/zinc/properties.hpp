#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zinc/certificate.hpp"
#include "zinc/classify.hpp"
#include "zinc/ring.hpp"

namespace zinc {

enum class CheckMode { full, certificate_only };

std::string to_string(CheckMode mode);

struct PropertyVerdict {
  std::string ring;
  std::string property;
  bool holds = false;
  CheckMode mode = CheckMode::full;
  /// FailureWitness when holds is false; a representative decomposition on
  /// success where one applies.
  std::optional<Certificate> certificate;
  /// Every decomposition produced on the way (one per checked element).
  std::vector<Certificate> evidence;
  /// For semicommutative / weakly_semicommutative: the verdict of the
  /// ZI-set characterization, computed independently of `holds`.
  std::optional<bool> characterization;
  std::chrono::nanoseconds elapsed{0};
};

/// Names accepted by check_property, in report order.
std::span<const std::string_view> property_names();

/// Decides one ring property in full mode:
///   semicommutative, weakly_semicommutative, zinc, nil_clean, clean,
///   weakly_clean, j_clean, only_trivial_idempotents, commutative,
///   no_zero_divisors.
/// Universally quantified failures carry the lexicographically least
/// counterexample. Throws PreconditionError for an unknown name, GateError when
/// a required classifier is over its gate, and InternalError when the two
/// routes of a dual-route property disagree.
PropertyVerdict check_property(RingAnalysis& analysis, std::string_view property);
PropertyVerdict check_property(const FiniteRing& ring, std::string_view property, const Limits& limits = {});

/// Certificate-only check of nil_clean over the listed elements. Never reports
/// the property for the whole ring: holds means no listed element fails.
PropertyVerdict check_property_on(const FiniteRing& ring, std::string_view property,
                                  std::span<const ElementId> candidates);

/// Least (a, r, b) in (a, b, r) scan order with ab = 0 and arb != 0.
std::optional<FailureWitness> semicommutative_counterexample(const FiniteRing& ring, const Limits& limits = {});
/// Least (a, r, b) in (a, b, r) scan order with ab = 0 and arb not nilpotent.
std::optional<FailureWitness> weakly_semicommutative_counterexample(const FiniteRing& ring,
                                                                    const Limits& limits = {});

/// Least (e, u, r) with e idempotent, u a unit and x - e - u = (1 - e) r x.
std::optional<WeaklyCleanWitness> weakly_clean_witness(RingAnalysis& analysis, ElementId x);
std::optional<WeaklyCleanWitness> weakly_clean_witness(const FiniteRing& ring, ElementId x, const Limits& limits = {});

struct ZincCandidate {
  ElementId a = 0, r = 0, b = 0;
};

/// Certificate-only ZINC check for rings above the ZI gate. Each candidate
/// must satisfy ab = 0 (PreconditionError naming its position otherwise);
/// holds = false with the first x = arb that has no nil-clean decomposition.
PropertyVerdict zinc_certificate_check(const FiniteRing& ring, std::span<const ZincCandidate> candidates);

}  // namespace zinc
