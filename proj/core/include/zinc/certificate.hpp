#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "zinc/ring.hpp"

namespace zinc {

/// x = a r b with a b = 0.
struct ZeroInsertiveWitness {
  ElementId x = 0, a = 0, r = 0, b = 0;
  friend bool operator==(const ZeroInsertiveWitness&, const ZeroInsertiveWitness&) = default;
};

/// x = e + n, e idempotent, n^index = 0 with index minimal.
struct NilCleanDecomposition {
  ElementId x = 0, e = 0, n = 0;
  std::uint32_t index = 0;
  friend bool operator==(const NilCleanDecomposition&, const NilCleanDecomposition&) = default;
};

/// x = e + u, e idempotent, u a unit.
struct CleanDecomposition {
  ElementId x = 0, e = 0, u = 0;
  friend bool operator==(const CleanDecomposition&, const CleanDecomposition&) = default;
};

/// e idempotent, u a unit, x - e - u = (1 - e) r x.
struct WeaklyCleanWitness {
  ElementId x = 0, e = 0, u = 0, r = 0;
  friend bool operator==(const WeaklyCleanWitness&, const WeaklyCleanWitness&) = default;
};

/// Evidence that a universally quantified statement fails.
///
/// `context` names the claim (a property name such as "zinc") and fixes the
/// meaning of `elements`; `exhausted` counts the candidates a search ruled
/// out (idempotents scanned for "no nil-clean decomposition", for example).
struct FailureWitness {
  std::string context;
  std::vector<ElementId> elements;
  std::uint64_t exhausted = 0;
  friend bool operator==(const FailureWitness&, const FailureWitness&) = default;
};

using Certificate =
    std::variant<ZeroInsertiveWitness, NilCleanDecomposition, CleanDecomposition, WeaklyCleanWitness, FailureWitness>;

/// Short kind tag: "zero_insertive", "nil_clean", "clean", "weakly_clean", "failure".
std::string certificate_kind(const Certificate& certificate);

/// Named element slots of a certificate in display order, e.g. {"x", x}, {"a", a}.
/// Failure witnesses use the slot names of their context listed below.
std::vector<std::pair<std::string, ElementId>> certificate_fields(const Certificate& certificate);

/// Re-checks a certificate by direct arithmetic on `ring`, independently of
/// the classifiers that produced it. Nilpotency is tested as x^order == 0
/// and units by an inverse scan.
///
/// FailureWitness contexts understood:
///   semicommutative (a, r, b)         ab = 0, arb != 0
///   weakly_semicommutative (a, r, b)  ab = 0, arb not nilpotent
///   zinc (x, a, r, b)                 ab = 0, arb = x, x not in E + N,
///                                     `exhausted` = |E|
///   nil_clean (x)                     x not in E + N, `exhausted` = |E|
///   clean (x)                         x not in E + U, `exhausted` = |E|
///   j_clean (x)                       x - e not in J for every idempotent e
///   weakly_clean (x)                  no weakly-clean triple exists
///   only_trivial_idempotents (e)      e^2 = e, e not in {0, 1}
///   commutative (a, b)                ab != ba
///   no_zero_divisors (a, b)           a, b != 0, ab = 0
///   unit_offset (w)                   no unit v with w - v = 1 or w - v in R w^2
///   aJb_nil (a, j, b)                 ab = 0, j in J, ajb not nilpotent
///   zi_outside_E / zi_outside_N / zi_outside_EU (x, a, r, b)
///                                     ab = 0, arb = x, x outside E, N or E + U
bool validate(const FiniteRing& ring, const Certificate& certificate);

}  // namespace zinc
