#include "zinc/audit.hpp"

#include <bit>
#include <deque>
#include <random>

#include "zinc/bitset.hpp"
#include "zinc/error.hpp"
#include "zinc/parallel.hpp"

namespace zinc {
namespace {

class Recorder {
 public:
  Recorder(AxiomReport& report, std::size_t cap) : report_(report), cap_(cap) {}

  bool full() const { return report_.violations.size() >= cap_; }
  void count(std::uint64_t n = 1) { report_.instances += n; }
  void fail(const char* axiom, std::vector<ElementId> witness) {
    if (!full()) report_.violations.push_back({axiom, std::move(witness)});
  }

 private:
  AxiomReport& report_;
  std::size_t cap_;
};

// Checks that need only O(order) or O(order^2) work; shared by every mode.
void check_linear(const FiniteRing& r, Recorder& rec) {
  const ElementId n = r.order(), z = r.zero(), one = r.one();
  if (n >= 2 && z == one) rec.fail("zero != one", {z});
  for (ElementId x = 0; x < n && !rec.full(); ++x) {
    if (r.add(x, z) != x || r.add(z, x) != x) rec.fail("additive identity", {x});
    if (r.add(x, r.neg(x)) != z) rec.fail("additive inverse", {x});
    if (r.mul(one, x) != x || r.mul(x, one) != x) rec.fail("unity", {x});
    if (r.mul(x, z) != z || r.mul(z, x) != z) rec.fail("zero product", {x});
  }
  rec.count(std::uint64_t{n} * 4);
}

void check_commutative_addition(const FiniteRing& r, Recorder& rec) {
  const ElementId n = r.order();
  for (ElementId x = 0; x < n && !rec.full(); ++x)
    for (ElementId y = x + 1; y < n; ++y)
      if (r.add(x, y) != r.add(y, x)) rec.fail("additive commutativity", {x, y});
  rec.count(std::uint64_t{n} * n / 2);
}

/// Triple checks with the third argument drawn from `thirds`.
void check_triples(const FiniteRing& r, const std::vector<ElementId>& thirds, Recorder& rec, unsigned threads) {
  const ElementId n = r.order();
  struct Local {
    std::vector<AxiomViolation> found;
  };
  std::vector<Local> locals(chunk_count(n, threads));
  parallel_chunks(n, threads, [&](std::size_t w, std::size_t begin, std::size_t end) {
    auto& found = locals[w].found;
    auto fail = [&](const char* axiom, std::vector<ElementId> witness) {
      if (found.size() < 16) found.push_back({axiom, std::move(witness)});
    };
    for (ElementId x = static_cast<ElementId>(begin); x < end && found.size() < 16; ++x)
      for (ElementId y = 0; y < n; ++y) {
        const ElementId xy = r.mul(x, y), x_plus_y = r.add(x, y);
        for (ElementId z : thirds) {
          if (r.add(x_plus_y, z) != r.add(x, r.add(y, z))) fail("additive associativity", {x, y, z});
          if (r.mul(xy, z) != r.mul(x, r.mul(y, z))) fail("associativity", {x, y, z});
          if (r.mul(x, r.add(y, z)) != r.add(xy, r.mul(x, z))) fail("left distributivity", {x, y, z});
          if (r.mul(r.add(x, y), z) != r.add(r.mul(x, z), r.mul(y, z))) fail("right distributivity", {x, y, z});
        }
      }
  });
  for (auto& l : locals)
    for (auto& v : l.found) rec.fail(v.axiom.c_str(), v.witness);
  rec.count(std::uint64_t{n} * n * thirds.size() * 4);
}

void check_sampled(const FiniteRing& r, const AuditOptions& opt, Recorder& rec) {
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<ElementId> pick(0, r.order() - 1);
  for (std::uint64_t t = 0; t < opt.trials && !rec.full(); ++t) {
    const ElementId x = pick(rng), y = pick(rng), z = pick(rng);
    if (r.add(x, y) != r.add(y, x)) rec.fail("additive commutativity", {x, y});
    if (r.add(r.add(x, y), z) != r.add(x, r.add(y, z))) rec.fail("additive associativity", {x, y, z});
    if (r.mul(r.mul(x, y), z) != r.mul(x, r.mul(y, z))) rec.fail("associativity", {x, y, z});
    if (r.mul(x, r.add(y, z)) != r.add(r.mul(x, y), r.mul(x, z))) rec.fail("left distributivity", {x, y, z});
    if (r.mul(r.add(x, y), z) != r.add(r.mul(x, z), r.mul(y, z))) rec.fail("right distributivity", {x, y, z});
  }
  rec.count(opt.trials * 5);
}

}  // namespace

std::vector<ElementId> additive_generators(const FiniteRing& ring) {
  const ElementId n = ring.order();
  Bitset reached(n);
  std::vector<ElementId> reached_list{ring.zero()};
  reached.set(ring.zero());
  std::vector<ElementId> gens;
  for (ElementId x = 0; x < n; ++x) {
    if (reached.test(x)) continue;
    gens.push_back(x);
    // extend the reached set to its closure under "+ g" for every generator
    std::deque<ElementId> frontier(reached_list.begin(), reached_list.end());
    while (!frontier.empty()) {
      const ElementId y = frontier.front();
      frontier.pop_front();
      for (ElementId g : gens) {
        const ElementId s = ring.add(y, g);
        if (reached.insert(s)) {
          reached_list.push_back(s);
          frontier.push_back(s);
        }
      }
    }
  }
  return gens;
}

AuditOptions default_audit_options(const FiniteRing& ring, const Limits& limits) {
  const std::uint64_t n = ring.order();
  AuditOptions opt;
  if (n * n * n <= limits.audit_triple_budget)
    opt.mode = AuditMode::full;
  else if (n * n * std::bit_width(n) <= limits.audit_generated_budget && n <= 65536)
    opt.mode = AuditMode::generated;
  else
    opt.mode = AuditMode::sampled;
  return opt;
}

AxiomReport audit_axioms(const FiniteRing& ring, const AuditOptions& options, const Limits& limits) {
  const std::uint64_t n = ring.order();
  if (options.mode == AuditMode::full && n * n * n > limits.audit_triple_budget)
    throw GateError("audit_axioms: " + std::to_string(n) + "^3 triples exceed the full-audit budget of " +
                    std::to_string(limits.audit_triple_budget) + "; use sampled mode");
  if (options.mode == AuditMode::generated &&
      (n * n * std::bit_width(n) > limits.audit_generated_budget || n > 65536))
    throw GateError("audit_axioms: " + std::to_string(n) + "^2 pairs exceed the generated-audit budget; use sampled mode");

  AxiomReport report{ring, options, {}, 0};
  Recorder rec(report, options.max_violations);
  // tables for the quadratic and cubic scans
  const FiniteRing r = options.mode == AuditMode::sampled || ring.materialized() ? ring : materialize_tables(ring, 65536);
  check_linear(r, rec);
  switch (options.mode) {
    case AuditMode::full: {
      check_commutative_addition(r, rec);
      std::vector<ElementId> all(n);
      for (ElementId x = 0; x < n; ++x) all[x] = x;
      check_triples(r, all, rec, limits.threads);
      break;
    }
    case AuditMode::generated: {
      check_commutative_addition(r, rec);
      check_triples(r, additive_generators(r), rec, limits.threads);
      break;
    }
    case AuditMode::sampled:
      check_sampled(r, options, rec);
      break;
  }
  return report;
}

}  // namespace zinc
