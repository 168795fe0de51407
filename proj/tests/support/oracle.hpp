#pragma once

// Naive reference implementations used as test oracles. Everything here is
// a direct loop over the definitions and uses nothing but the ring's add,
// mul and neg; none of it shares code with the library classifiers.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "zinc/ring.hpp"

namespace oracle {

using zinc::ElementId;
using zinc::FiniteRing;

inline std::set<ElementId> idempotents(const FiniteRing& r) {
  std::set<ElementId> out;
  for (ElementId x = 0; x < r.order(); ++x)
    if (r.mul(x, x) == x) out.insert(x);
  return out;
}

// x^1, x^2, ..., x^order; the first zero fixes the index.
inline std::optional<std::uint32_t> nil_index(const FiniteRing& r, ElementId x) {
  ElementId p = x;
  for (std::uint32_t k = 1; k <= r.order(); ++k) {
    if (p == r.zero()) return k;
    p = r.mul(p, x);
  }
  return std::nullopt;
}

inline std::map<ElementId, std::uint32_t> nilpotents(const FiniteRing& r) {
  std::map<ElementId, std::uint32_t> out;
  for (ElementId x = 0; x < r.order(); ++x)
    if (auto k = nil_index(r, x)) out[x] = *k;
  return out;
}

inline std::optional<ElementId> inverse(const FiniteRing& r, ElementId x) {
  for (ElementId y = 0; y < r.order(); ++y)
    if (r.mul(x, y) == r.one() && r.mul(y, x) == r.one()) return y;
  return std::nullopt;
}

inline std::set<ElementId> units(const FiniteRing& r) {
  std::set<ElementId> out;
  for (ElementId x = 0; x < r.order(); ++x)
    if (inverse(r, x)) out.insert(x);
  return out;
}

inline std::set<ElementId> center(const FiniteRing& r) {
  std::set<ElementId> out;
  for (ElementId x = 0; x < r.order(); ++x) {
    bool central = true;
    for (ElementId y = 0; y < r.order() && central; ++y) central = r.mul(x, y) == r.mul(y, x);
    if (central) out.insert(x);
  }
  return out;
}

inline std::set<ElementId> radical(const FiniteRing& r) {
  const auto u = units(r);
  std::set<ElementId> out;
  for (ElementId x = 0; x < r.order(); ++x) {
    bool in = true;
    for (ElementId s = 0; s < r.order() && in; ++s) in = u.count(r.sub(r.one(), r.mul(s, x))) > 0;
    if (in) out.insert(x);
  }
  return out;
}

// (a, b, r) in lexicographic order; first hit per x is the least witness.
struct Zi {
  std::set<ElementId> members;
  std::map<ElementId, std::array<ElementId, 3>> least_abr;
};

inline Zi zero_insertive(const FiniteRing& r) {
  Zi out;
  const ElementId n = r.order();
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) {
      if (r.mul(a, b) != r.zero()) continue;
      for (ElementId s = 0; s < n; ++s) {
        const ElementId x = r.mul(r.mul(a, s), b);
        if (out.members.insert(x).second) out.least_abr[x] = {a, b, s};
      }
    }
  return out;
}

inline std::set<ElementId> sumset(const FiniteRing& r, const std::set<ElementId>& s, const std::set<ElementId>& t) {
  std::set<ElementId> out;
  for (auto a : s)
    for (auto b : t) out.insert(r.add(a, b));
  return out;
}

// Direct quantifier: ab = 0 implies arb = 0 (or arb nilpotent when weak).
inline bool semicommutative(const FiniteRing& r, bool weak) {
  const ElementId n = r.order();
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) {
      if (r.mul(a, b) != r.zero()) continue;
      for (ElementId s = 0; s < n; ++s) {
        const ElementId x = r.mul(r.mul(a, s), b);
        if (weak ? !nil_index(r, x) : x != r.zero()) return false;
      }
    }
  return true;
}

inline bool zinc(const FiniteRing& r) {
  const auto en = sumset(r, idempotents(r), [&] {
    std::set<ElementId> n;
    for (auto [x, k] : nilpotents(r)) n.insert(x);
    return n;
  }());
  for (auto x : zero_insertive(r).members)
    if (!en.count(x)) return false;
  return true;
}

template <class Set>
std::vector<ElementId> sorted(const Set& s) {
  return std::vector<ElementId>(s.begin(), s.end());
}

// Copy of `r` with dense tables in which mul(a, b) is replaced by `value`.
inline FiniteRing corrupt_mul(const FiniteRing& r, ElementId a, ElementId b, ElementId value) {
  const FiniteRing dense = zinc::materialize_tables(r, 65536);
  zinc::OperationTables t = *dense.tables();
  t.mul[std::size_t{a} * t.order + b] = static_cast<std::uint16_t>(value);
  return FiniteRing::from_tables(std::move(t), r.name() + " (mutant)", r.shared_expr());
}

}  // namespace oracle
