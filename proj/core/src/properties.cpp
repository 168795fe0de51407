#include "zinc/properties.hpp"

#include <array>
#include <chrono>

#include "zinc/error.hpp"

namespace zinc {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::array<std::string_view, 10> kProperties = {
    "semicommutative", "weakly_semicommutative", "zinc",    "nil_clean",
    "clean",           "weakly_clean",           "j_clean", "only_trivial_idempotents",
    "commutative",     "no_zero_divisors",
};

void pair_scan_gate(const FiniteRing& ring, const Limits& limits, const char* what) {
  if (ring.order() > limits.zi_threshold)
    throw GateError(std::string(what) + ": order " + std::to_string(ring.order()) + " of " + ring.name() +
                    " exceeds the ZI gate " + std::to_string(limits.zi_threshold));
}

// Direct quantifier scan over (a, b, r) with ab = 0; `bad` decides arb.
template <class Bad>
std::optional<FailureWitness> zero_pair_scan(const FiniteRing& ring, const char* context, Bad&& bad) {
  const ElementId n = ring.order(), zero = ring.zero();
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (ring.mul(a, b) != zero) continue;
      for (ElementId r = 0; r < n; ++r)
        if (bad(ring.mul(ring.mul(a, r), b))) return FailureWitness{context, {a, r, b}, 0};
    }
  }
  return std::nullopt;
}


void check_semicommutative(RingAnalysis& an, PropertyVerdict& v) {
  auto direct = semicommutative_counterexample(an.ring(), an.limits());
  v.characterization = an.zero_insertive().set.is_subset_of(an.idempotents());
  v.holds = !direct;
  if (v.holds != *v.characterization)
    throw InternalError("semicommutative: direct definition and ZI <= E disagree on " + an.ring().name());
  if (direct) v.certificate = *direct;
}

void check_weakly_semicommutative(RingAnalysis& an, PropertyVerdict& v) {
  auto direct = weakly_semicommutative_counterexample(an.ring(), an.limits());
  v.characterization = an.zero_insertive().set.is_subset_of(an.nilpotents().set);
  v.holds = !direct;
  if (v.holds != *v.characterization)
    throw InternalError("weakly_semicommutative: direct definition and ZI <= N disagree on " + an.ring().name());
  if (direct) v.certificate = *direct;
}

void check_zinc(RingAnalysis& an, PropertyVerdict& v) {
  const auto& zi = an.zero_insertive();
  const auto& idem = an.idempotents();
  const auto& nil = an.nilpotents();
  v.holds = true;
  zi.set.members.for_each([&](std::size_t x_) {
    if (!v.holds) return;
    const auto x = static_cast<ElementId>(x_);
    auto search = nil_clean_search(idem, nil, x);
    if (search.decomposition) {
      v.evidence.emplace_back(*search.decomposition);
      return;
    }
    const auto& w = zi.witness[x];
    v.holds = false;
    v.certificate = FailureWitness{"zinc", {x, w.a, w.r, w.b}, search.idempotents_scanned};
  });
  if (v.holds && !v.evidence.empty()) v.certificate = v.evidence.back();
}

void check_nil_clean(RingAnalysis& an, PropertyVerdict& v) {
  const auto& idem = an.idempotents();
  const auto& nil = an.nilpotents();
  v.holds = true;
  for (ElementId x = 0; x < an.ring().order() && v.holds; ++x) {
    auto search = nil_clean_search(idem, nil, x);
    if (search.decomposition) {
      v.evidence.emplace_back(*search.decomposition);
    } else {
      v.holds = false;
      v.certificate = FailureWitness{"nil_clean", {x}, search.idempotents_scanned};
    }
  }
  if (v.holds) v.certificate = v.evidence.back();
}

void check_clean(RingAnalysis& an, PropertyVerdict& v) {
  const FiniteRing& ring = an.ring();
  const auto& idem = an.idempotent_list();
  const auto& units = an.units().set;
  v.holds = true;
  for (ElementId x = 0; x < ring.order() && v.holds; ++x) {
    bool found = false;
    for (ElementId e : idem) {
      const ElementId u = ring.sub(x, e);
      if (units.contains(u)) {
        v.evidence.emplace_back(CleanDecomposition{x, e, u});
        found = true;
        break;
      }
    }
    if (!found) {
      v.holds = false;
      v.certificate = FailureWitness{"clean", {x}, idem.size()};
    }
  }
  if (v.holds) v.certificate = v.evidence.back();
}

void check_weakly_clean(RingAnalysis& an, PropertyVerdict& v) {
  v.holds = true;
  for (ElementId x = 0; x < an.ring().order() && v.holds; ++x) {
    if (auto w = weakly_clean_witness(an, x)) {
      v.evidence.emplace_back(*w);
    } else {
      v.holds = false;
      v.certificate = FailureWitness{"weakly_clean", {x}, 0};
    }
  }
  if (v.holds) v.certificate = v.evidence.back();
}

void check_j_clean(RingAnalysis& an, PropertyVerdict& v) {
  const FiniteRing& ring = an.ring();
  const auto& idem = an.idempotent_list();
  const auto& radical = an.jacobson_radical();
  v.holds = true;
  for (ElementId x = 0; x < ring.order() && v.holds; ++x) {
    bool found = false;
    for (ElementId e : idem) {
      if (radical.contains(ring.sub(x, e))) {
        found = true;
        break;
      }
    }
    if (!found) {
      v.holds = false;
      v.certificate = FailureWitness{"j_clean", {x}, idem.size()};
    }
  }
}

void check_trivial_idempotents(RingAnalysis& an, PropertyVerdict& v) {
  const FiniteRing& ring = an.ring();
  v.holds = true;
  for (ElementId e : an.idempotent_list()) {
    if (e != ring.zero() && e != ring.one()) {
      v.holds = false;
      v.certificate = FailureWitness{"only_trivial_idempotents", {e}, 0};
      return;
    }
  }
}

void check_commutative(RingAnalysis& an, PropertyVerdict& v) {
  const FiniteRing& ring = an.ring();
  v.holds = true;
  for (ElementId a = 0; a < ring.order(); ++a) {
    for (ElementId b = a + 1; b < ring.order(); ++b) {
      if (ring.mul(a, b) != ring.mul(b, a)) {
        v.holds = false;
        v.certificate = FailureWitness{"commutative", {a, b}, 0};
        return;
      }
    }
  }
}

void check_no_zero_divisors(RingAnalysis& an, PropertyVerdict& v) {
  const FiniteRing& ring = an.ring();
  const ElementId zero = ring.zero();
  v.holds = true;
  for (ElementId a = 0; a < ring.order(); ++a) {
    if (a == zero) continue;
    for (ElementId b = 0; b < ring.order(); ++b) {
      if (b != zero && ring.mul(a, b) == zero) {
        v.holds = false;
        v.certificate = FailureWitness{"no_zero_divisors", {a, b}, 0};
        return;
      }
    }
  }
}

}  // namespace

std::string to_string(CheckMode mode) { return mode == CheckMode::full ? "full" : "certificate_only"; }

std::span<const std::string_view> property_names() { return kProperties; }

PropertyVerdict check_property(RingAnalysis& analysis, std::string_view property) {
  const auto start = Clock::now();
  PropertyVerdict v;
  v.ring = analysis.ring().name();
  v.property = std::string(property);
  if (property == "semicommutative")
    check_semicommutative(analysis, v);
  else if (property == "weakly_semicommutative")
    check_weakly_semicommutative(analysis, v);
  else if (property == "zinc")
    check_zinc(analysis, v);
  else if (property == "nil_clean")
    check_nil_clean(analysis, v);
  else if (property == "clean")
    check_clean(analysis, v);
  else if (property == "weakly_clean")
    check_weakly_clean(analysis, v);
  else if (property == "j_clean")
    check_j_clean(analysis, v);
  else if (property == "only_trivial_idempotents")
    check_trivial_idempotents(analysis, v);
  else if (property == "commutative")
    check_commutative(analysis, v);
  else if (property == "no_zero_divisors")
    check_no_zero_divisors(analysis, v);
  else
    throw PreconditionError("unknown property '" + std::string(property) + "'");
  v.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return v;
}

PropertyVerdict check_property(const FiniteRing& ring, std::string_view property, const Limits& limits) {
  RingAnalysis analysis(ring, limits);
  return check_property(analysis, property);
}

PropertyVerdict check_property_on(const FiniteRing& ring, std::string_view property,
                                  std::span<const ElementId> candidates) {
  if (property != "nil_clean")
    throw PreconditionError("certificate-only mode supports nil_clean, not '" + std::string(property) + "'");
  const auto start = Clock::now();
  PropertyVerdict v;
  v.ring = ring.name();
  v.property = "nil_clean";
  v.mode = CheckMode::certificate_only;
  v.holds = true;
  for (ElementId x : candidates) {
    auto search = nil_clean_search(ring, x);
    if (!search.decomposition) {
      v.holds = false;
      v.certificate = FailureWitness{"nil_clean", {x}, search.idempotents_scanned};
      break;
    }
    v.evidence.emplace_back(*search.decomposition);
  }
  v.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return v;
}

std::optional<FailureWitness> semicommutative_counterexample(const FiniteRing& ring, const Limits& limits) {
  pair_scan_gate(ring, limits, "semicommutative");
  const ElementId zero = ring.zero();
  return zero_pair_scan(ring, "semicommutative", [&](ElementId x) { return x != zero; });
}

std::optional<FailureWitness> weakly_semicommutative_counterexample(const FiniteRing& ring, const Limits& limits) {
  pair_scan_gate(ring, limits, "weakly_semicommutative");
  std::vector<char> nil(ring.order());
  for (ElementId x = 0; x < ring.order(); ++x) nil[x] = nilpotency_index(ring, x).has_value();
  return zero_pair_scan(ring, "weakly_semicommutative", [&](ElementId x) { return !nil[x]; });
}

// For each idempotent e, the set (1 - e) R x is collected once with the least
// r per member; units are then tried in ascending order.
std::optional<WeaklyCleanWitness> weakly_clean_witness(RingAnalysis& analysis, ElementId x) {
  const FiniteRing& ring = analysis.ring();
  ring.check(x);
  const ElementId n = ring.order();
  const auto& units = analysis.unit_list();
  std::vector<ElementId> least_r(n);
  Bitset reached(n);
  for (ElementId e : analysis.idempotent_list()) {
    const ElementId f = ring.sub(ring.one(), e);
    reached.clear();
    for (ElementId r = 0; r < n; ++r) {
      const ElementId y = ring.mul(ring.mul(f, r), x);
      if (reached.insert(y)) least_r[y] = r;
    }
    const ElementId xe = ring.sub(x, e);
    for (ElementId u : units) {
      const ElementId rest = ring.sub(xe, u);
      if (reached.test(rest)) return WeaklyCleanWitness{x, e, u, least_r[rest]};
    }
  }
  return std::nullopt;
}

std::optional<WeaklyCleanWitness> weakly_clean_witness(const FiniteRing& ring, ElementId x, const Limits& limits) {
  RingAnalysis analysis(ring, limits);
  return weakly_clean_witness(analysis, x);
}

PropertyVerdict zinc_certificate_check(const FiniteRing& ring, std::span<const ZincCandidate> candidates) {
  const auto start = Clock::now();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& c = candidates[i];
    ring.check(c.a);
    ring.check(c.r);
    ring.check(c.b);
    if (ring.mul(c.a, c.b) != ring.zero())
      throw PreconditionError("candidate " + std::to_string(i) + ": a b != 0 (a = " + ring.format(c.a) +
                              ", b = " + ring.format(c.b) + ")");
  }
  PropertyVerdict v;
  v.ring = ring.name();
  v.property = "zinc";
  v.mode = CheckMode::certificate_only;
  v.holds = true;
  for (const auto& c : candidates) {
    const ElementId x = ring.mul(ring.mul(c.a, c.r), c.b);
    auto search = nil_clean_search(ring, x);
    if (!search.decomposition) {
      v.holds = false;
      v.certificate = FailureWitness{"zinc", {x, c.a, c.r, c.b}, search.idempotents_scanned};
      break;
    }
    v.evidence.emplace_back(*search.decomposition);
  }
  v.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return v;
}

}  // namespace zinc
