#include "zinc/classify.hpp"

#include <limits>

#include "zinc/error.hpp"
#include "zinc/parallel.hpp"

namespace zinc {
namespace {

void gate(const FiniteRing& ring, std::uint64_t threshold, const char* what) {
  if (ring.order() > threshold)
    throw GateError(std::string(what) + ": order " + std::to_string(ring.order()) + " of " + ring.name() +
                    " exceeds the full-scan gate " + std::to_string(threshold) +
                    "; use the certificate-mode APIs or raise the gate");
}

constexpr ElementId kNone = std::numeric_limits<ElementId>::max();

}  // namespace

std::string role_tag(SetRole role) {
  switch (role) {
    case SetRole::idempotent:
      return "E";
    case SetRole::nilpotent:
      return "N";
    case SetRole::unit:
      return "U";
    case SetRole::central:
      return "Z";
    case SetRole::radical:
      return "J";
    case SetRole::zero_insertive:
      return "ZI";
    case SetRole::en_sum:
      return "E+N";
    case SetRole::eu_sum:
      return "E+U";
    case SetRole::custom:
      break;
  }
  return "custom";
}

bool is_idempotent(const FiniteRing& ring, ElementId x) { return ring.mul(x, x) == x; }

// Walks x, x^2, x^3, ... one step at a time and stops at the first zero.
// Brent's cycle detection ends the walk when the powers repeat without
// reaching zero, so no visited-set is needed.
std::optional<std::uint32_t> nilpotency_index(const FiniteRing& ring, ElementId x) {
  const ElementId zero = ring.zero();
  if (x == zero) return 1;
  ElementId tortoise = x;
  ElementId hare = ring.mul(x, x);
  std::uint32_t k = 2;  // exponent of hare
  std::uint64_t power = 1, lam = 1;
  while (true) {
    if (hare == zero) return k;
    if (hare == tortoise) return std::nullopt;
    if (power == lam) {
      tortoise = hare;
      power *= 2;
      lam = 0;
    }
    hare = ring.mul(hare, x);
    ++k;
    ++lam;
  }
}

std::optional<ElementId> find_inverse(const FiniteRing& ring, ElementId x) {
  for (ElementId y = 0; y < ring.order(); ++y)
    if (ring.mul(x, y) == ring.one()) return ring.mul(y, x) == ring.one() ? std::optional<ElementId>(y) : std::nullopt;
  return std::nullopt;
}

ElementSet idempotents(const FiniteRing& ring, const Limits& limits) {
  gate(ring, limits.full_set_threshold, "idempotents");
  ElementSet out(ring, SetRole::idempotent);
  for (ElementId x = 0; x < ring.order(); ++x)
    if (ring.mul(x, x) == x) out.members.set(x);
  return out;
}

NilpotentSet nilpotents(const FiniteRing& ring, const Limits& limits) {
  gate(ring, limits.full_set_threshold, "nilpotents");
  NilpotentSet out{ElementSet(ring, SetRole::nilpotent), std::vector<std::uint32_t>(ring.order(), 0)};
  for (ElementId x = 0; x < ring.order(); ++x)
    if (auto k = nilpotency_index(ring, x)) {
      out.set.members.set(x);
      out.index[x] = *k;
    }
  return out;
}

UnitSet units(const FiniteRing& ring, const Limits& limits) {
  gate(ring, limits.full_set_threshold, "units");
  const ElementId n = ring.order(), one = ring.one();
  UnitSet out{ElementSet(ring, SetRole::unit), std::vector<ElementId>(n, kNone)};
  parallel_chunks(n, limits.threads, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (ElementId x = static_cast<ElementId>(begin); x < end; ++x)
      for (ElementId y = 0; y < n; ++y)
        if (ring.mul(x, y) == one) {
          if (ring.mul(y, x) != one)
            throw InternalError("units: " + ring.format(x) + " has a right inverse " + ring.format(y) +
                                " that is not a left inverse in " + ring.name());
          out.inverse[x] = y;
          break;
        }
  });
  for (ElementId x = 0; x < n; ++x)
    if (out.inverse[x] != kNone) out.set.members.set(x);
  return out;
}

ElementSet center(const FiniteRing& ring, const Limits& limits) {
  gate(ring, limits.full_set_threshold, "center");
  const ElementId n = ring.order();
  ElementSet out(ring, SetRole::central);
  std::vector<char> central(n, 0);
  parallel_chunks(n, limits.threads, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (ElementId x = static_cast<ElementId>(begin); x < end; ++x) {
      bool ok = true;
      for (ElementId r = 0; r < n && ok; ++r) ok = ring.mul(x, r) == ring.mul(r, x);
      central[x] = ok;
    }
  });
  for (ElementId x = 0; x < n; ++x)
    if (central[x]) out.members.set(x);
  return out;
}

ElementSet jacobson_radical(const FiniteRing& ring, const UnitSet& units_set, const Limits& limits) {
  gate(ring, limits.full_set_threshold, "jacobson_radical");
  if (!units_set.set.ring.same_as(ring)) throw PreconditionError("jacobson_radical: unit set of another ring");
  const ElementId n = ring.order(), one = ring.one();
  const Bitset& u = units_set.set.members;
  std::vector<char> in_radical(n, 0);
  parallel_chunks(n, limits.threads, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (ElementId x = static_cast<ElementId>(begin); x < end; ++x) {
      bool ok = true;
      for (ElementId r = 0; r < n && ok; ++r) ok = u.test(ring.sub(one, ring.mul(r, x)));
      in_radical[x] = ok;
    }
  });
  ElementSet out(ring, SetRole::radical);
  for (ElementId x = 0; x < n; ++x)
    if (in_radical[x]) out.members.set(x);

  // post-check: two-sided ideal
  const auto members = out.elements();
  for (ElementId x : members) {
    if (!out.contains(ring.neg(x))) throw InternalError("jacobson_radical: not closed under negation");
    for (ElementId y : members)
      if (!out.contains(ring.add(x, y))) throw InternalError("jacobson_radical: not closed under addition");
    for (ElementId r = 0; r < n; ++r)
      if (!out.contains(ring.mul(r, x)) || !out.contains(ring.mul(x, r)))
        throw InternalError("jacobson_radical: not closed under multiplication by " + ring.format(r));
  }
  return out;
}

ElementSet jacobson_radical(const FiniteRing& ring, const Limits& limits) {
  return jacobson_radical(ring, units(ring, limits), limits);
}

ZeroInsertiveSet zero_insertive(const FiniteRing& ring, const Limits& limits) {
  if (ring.order() > limits.zi_threshold)
    throw GateError("zero_insertive: order " + std::to_string(ring.order()) + " of " + ring.name() +
                    " exceeds the ZI gate " + std::to_string(limits.zi_threshold) +
                    "; use zinc_certificate_check or raise the gate");
  const ElementId n = ring.order(), zero = ring.zero();
  ZeroInsertiveSet out{ElementSet(ring, SetRole::zero_insertive), std::vector<ZeroInsertiveWitness>(n)};

  // Pairs are visited in (a, b, r) order within a chunk of a-values, so the
  // first hit per x inside a chunk is that chunk's least witness; chunks are
  // merged in ascending order.
  struct Local {
    Bitset found;
    std::vector<ZeroInsertiveWitness> witness;
  };
  std::vector<Local> locals(chunk_count(n, limits.threads));
  const std::uint16_t* mul_table = ring.materialized() ? ring.tables()->mul.data() : nullptr;
  parallel_chunks(n, limits.threads, [&](std::size_t w, std::size_t begin, std::size_t end) {
    Local& local = locals[w];
    local.found = Bitset(n);
    local.witness.resize(n);
    std::vector<ElementId> ar(n), zero_b;
    for (ElementId a = static_cast<ElementId>(begin); a < end; ++a) {
      if (a == zero) {
        if (local.found.insert(zero)) local.witness[zero] = {zero, zero, zero, zero};
        continue;
      }
      zero_b.clear();
      for (ElementId b = 0; b < n; ++b)
        if (b != zero && ring.mul(a, b) == zero) zero_b.push_back(b);
      if (zero_b.empty()) continue;
      for (ElementId r = 0; r < n; ++r) ar[r] = ring.mul(a, r);
      for (ElementId b : zero_b) {
        if (mul_table) {
          for (ElementId r = 0; r < n; ++r) {
            const ElementId x = mul_table[std::size_t{ar[r]} * n + b];
            if (local.found.insert(x)) local.witness[x] = {x, a, r, b};
          }
        } else {
          for (ElementId r = 0; r < n; ++r) {
            const ElementId x = ring.mul(ar[r], b);
            if (local.found.insert(x)) local.witness[x] = {x, a, r, b};
          }
        }
      }
    }
  });
  for (auto& local : locals) {
    local.found.for_each([&](std::size_t x) {
      if (out.set.members.insert(x)) out.witness[x] = local.witness[x];
    });
  }
  return out;
}

ElementSet sumset(const ElementSet& s, const ElementSet& t, SetRole role) {
  if (!s.ring.same_as(t.ring)) throw PreconditionError("sumset: sets belong to different rings");
  const FiniteRing& ring = s.ring;
  ElementSet out(ring, role);
  const auto ts = t.elements();
  const std::size_t n = ring.order();
  s.members.for_each([&](std::size_t a) {
    if (out.members.count() == n) return;
    for (ElementId b : ts) out.members.set(ring.add(static_cast<ElementId>(a), b));
  });
  return out;
}

NilCleanSearch nil_clean_search(const FiniteRing& ring, ElementId x) {
  ring.check(x);
  NilCleanSearch out;
  for (ElementId e = 0; e < ring.order(); ++e) {
    if (ring.mul(e, e) != e) continue;
    ++out.idempotents_scanned;
    const ElementId n = ring.sub(x, e);
    if (auto k = nilpotency_index(ring, n)) {
      out.decomposition = NilCleanDecomposition{x, e, n, *k};
      return out;
    }
  }
  return out;
}

NilCleanSearch nil_clean_search(const ElementSet& idem, const NilpotentSet& nil, ElementId x) {
  const FiniteRing& ring = idem.ring;
  ring.check(x);
  NilCleanSearch out;
  idem.members.for_each([&](std::size_t e_) {
    if (out.decomposition) return;
    const auto e = static_cast<ElementId>(e_);
    ++out.idempotents_scanned;
    const ElementId n = ring.sub(x, e);
    if (nil.set.contains(n)) out.decomposition = NilCleanDecomposition{x, e, n, nil.index[n]};
  });
  return out;
}

std::optional<NilCleanDecomposition> nil_clean_decomposition(const FiniteRing& ring, ElementId x) {
  return nil_clean_search(ring, x).decomposition;
}

// ---------------------------------------------------------------------------

const ElementSet& RingAnalysis::idempotents() {
  if (!idempotents_) idempotents_ = zinc::idempotents(ring_, limits_);
  return *idempotents_;
}
const NilpotentSet& RingAnalysis::nilpotents() {
  if (!nilpotents_) nilpotents_ = zinc::nilpotents(ring_, limits_);
  return *nilpotents_;
}
const UnitSet& RingAnalysis::units() {
  if (!units_) units_ = zinc::units(ring_, limits_);
  return *units_;
}
const ElementSet& RingAnalysis::center() {
  if (!center_) center_ = zinc::center(ring_, limits_);
  return *center_;
}
const ElementSet& RingAnalysis::jacobson_radical() {
  if (!radical_) radical_ = zinc::jacobson_radical(ring_, units(), limits_);
  return *radical_;
}
const ZeroInsertiveSet& RingAnalysis::zero_insertive() {
  if (!zero_insertive_) zero_insertive_ = zinc::zero_insertive(ring_, limits_);
  return *zero_insertive_;
}
const ElementSet& RingAnalysis::en_sum() {
  if (!en_sum_) en_sum_ = sumset(idempotents(), nilpotents().set, SetRole::en_sum);
  return *en_sum_;
}
const ElementSet& RingAnalysis::eu_sum() {
  if (!eu_sum_) eu_sum_ = sumset(idempotents(), units().set, SetRole::eu_sum);
  return *eu_sum_;
}
const std::vector<ElementId>& RingAnalysis::idempotent_list() {
  if (!idempotent_list_) idempotent_list_ = idempotents().elements();
  return *idempotent_list_;
}
const std::vector<ElementId>& RingAnalysis::unit_list() {
  if (!unit_list_) unit_list_ = units().set.elements();
  return *unit_list_;
}

}  // namespace zinc
