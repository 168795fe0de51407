#pragma once

#include <cstdint>

namespace zinc {

/// Size gates shared by construction, classification and the theorem harness.
struct Limits {
  /// Largest ring order build() accepts.
  std::uint64_t order_ceiling = std::uint64_t{1} << 20;
  /// Rings up to this order get dense add/mul tables. Capped at 65536 (16-bit entries).
  std::uint64_t materialize_threshold = 4096;
  /// Gate for the full-scan classifiers E, N, U, Z, J.
  std::uint64_t full_set_threshold = std::uint64_t{1} << 16;
  /// Gate for the zero-insertive pair scan.
  std::uint64_t zi_threshold = std::uint64_t{1} << 12;
  /// Full axiom audit runs only when order^3 stays within this many triples.
  std::uint64_t audit_triple_budget = std::uint64_t{1} << 28;
  /// Generated audit runs when order^2 * bit_width(order) stays within this.
  std::uint64_t audit_generated_budget = std::uint64_t{1} << 32;
  /// Worker count for the parallel scans. Results never depend on it.
  unsigned threads = 1;
};

}  // namespace zinc
