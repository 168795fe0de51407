#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zinc/bitset.hpp"
#include "zinc/certificate.hpp"
#include "zinc/limits.hpp"
#include "zinc/ring.hpp"

namespace zinc {

enum class SetRole {
  idempotent,       // E(R)
  nilpotent,        // N(R)
  unit,             // U(R)
  central,          // Z(R)
  radical,          // J(R)
  zero_insertive,   // ZI(R)
  en_sum,           // E(R) + N(R)
  eu_sum,           // E(R) + U(R)
  custom,
};

/// Short tag used in reports: "E", "N", "U", "Z", "J", "ZI", "E+N", "E+U", "custom".
std::string role_tag(SetRole role);

/// Membership bitset over the elements of one ring.
struct ElementSet {
  FiniteRing ring;
  SetRole role = SetRole::custom;
  Bitset members;

  ElementSet(FiniteRing r, SetRole role_) : ring(std::move(r)), role(role_), members(ring.order()) {}

  bool contains(ElementId x) const { return members.test(x); }
  std::size_t size() const { return members.count(); }
  std::vector<ElementId> elements() const { return members.to_vector(); }
  bool is_subset_of(const ElementSet& other) const { return members.is_subset_of(other.members); }
};

struct NilpotentSet {
  ElementSet set;
  /// index[x] = least k >= 1 with x^k = 0 for members, 0 otherwise.
  std::vector<std::uint32_t> index;
};

struct UnitSet {
  ElementSet set;
  /// inverse[u] for members; unspecified otherwise.
  std::vector<ElementId> inverse;
};

struct ZeroInsertiveSet {
  ElementSet set;
  /// Lexicographically least (a, b, r) with ab = 0, arb = x, for members x.
  std::vector<ZeroInsertiveWitness> witness;
};

/// E(R) = {x : x^2 = x}. Gated by limits.full_set_threshold.
ElementSet idempotents(const FiniteRing& ring, const Limits& limits = {});

/// N(R) with nilpotency indices, by power iteration with cycle detection.
NilpotentSet nilpotents(const FiniteRing& ring, const Limits& limits = {});

/// U(R) with two-sided inverses: right inverse by scan, then checked on the left.
UnitSet units(const FiniteRing& ring, const Limits& limits = {});

/// Z(R) = {x : xr = rx for all r}.
ElementSet center(const FiniteRing& ring, const Limits& limits = {});

/// J(R) = {x : 1 - r x is a unit for all r}; post-checked to be a two-sided
/// ideal (InternalError otherwise).
ElementSet jacobson_radical(const FiniteRing& ring, const UnitSet& units, const Limits& limits = {});
ElementSet jacobson_radical(const FiniteRing& ring, const Limits& limits = {});

/// ZI(R) = {arb : ab = 0} by a scan of the zero pairs. Gated by limits.zi_threshold.
ZeroInsertiveSet zero_insertive(const FiniteRing& ring, const Limits& limits = {});

/// {s + t : s in S, t in T}. Throws PreconditionError for sets of different rings.
ElementSet sumset(const ElementSet& s, const ElementSet& t, SetRole role = SetRole::custom);

/// Least k >= 1 with x^k = 0, or nullopt when the powers of x cycle first.
std::optional<std::uint32_t> nilpotency_index(const FiniteRing& ring, ElementId x);

bool is_idempotent(const FiniteRing& ring, ElementId x);

/// Two-sided inverse by scan, or nullopt.
std::optional<ElementId> find_inverse(const FiniteRing& ring, ElementId x);

/// Result of the nil-clean search for one element.
struct NilCleanSearch {
  std::optional<NilCleanDecomposition> decomposition;
  /// Idempotents examined (all of E(R) when no decomposition exists).
  std::uint64_t idempotents_scanned = 0;
};

/// Scans e in ascending index order, testing e^2 = e and then x - e nilpotent.
/// Works above every full-scan gate.
NilCleanSearch nil_clean_search(const FiniteRing& ring, ElementId x);

/// Same search restricted to precomputed E(R) and N(R).
NilCleanSearch nil_clean_search(const ElementSet& idempotents, const NilpotentSet& nilpotents, ElementId x);

/// Decomposition with the least idempotent, or nullopt.
std::optional<NilCleanDecomposition> nil_clean_decomposition(const FiniteRing& ring, ElementId x);

/// Lazily computed classification of one ring.
///
/// Each set is computed on first use under the analysis' limits and cached.
/// Not thread-safe; give each worker its own analysis.
class RingAnalysis {
 public:
  explicit RingAnalysis(FiniteRing ring, Limits limits = {}) : ring_(std::move(ring)), limits_(limits) {}

  const FiniteRing& ring() const noexcept { return ring_; }
  const Limits& limits() const noexcept { return limits_; }

  const ElementSet& idempotents();
  const NilpotentSet& nilpotents();
  const UnitSet& units();
  const ElementSet& center();
  const ElementSet& jacobson_radical();
  const ZeroInsertiveSet& zero_insertive();
  const ElementSet& en_sum();
  const ElementSet& eu_sum();
  /// E(R) as an ascending list.
  const std::vector<ElementId>& idempotent_list();
  const std::vector<ElementId>& unit_list();

  bool full_sets_allowed() const noexcept { return ring_.order() <= limits_.full_set_threshold; }
  bool zero_insertive_allowed() const noexcept { return ring_.order() <= limits_.zi_threshold; }

 private:
  FiniteRing ring_;
  Limits limits_;
  std::optional<ElementSet> idempotents_;
  std::optional<NilpotentSet> nilpotents_;
  std::optional<UnitSet> units_;
  std::optional<ElementSet> center_;
  std::optional<ElementSet> radical_;
  std::optional<ZeroInsertiveSet> zero_insertive_;
  std::optional<ElementSet> en_sum_;
  std::optional<ElementSet> eu_sum_;
  std::optional<std::vector<ElementId>> idempotent_list_;
  std::optional<std::vector<ElementId>> unit_list_;
};

}  // namespace zinc
