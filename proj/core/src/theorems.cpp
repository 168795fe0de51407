#include "zinc/theorems.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "zinc/constructions.hpp"
#include "zinc/error.hpp"

namespace zinc {
namespace {

using Clock = std::chrono::steady_clock;
using Kind = RingExpr::Kind;

const std::vector<Statement>& catalogue() {
  static const std::vector<Statement> list = {
      {"S0", "commutative rings", "commutative => ZINC", CheckMode::full},
      {"S1", "semicommutativity through ZI", "semicommutative <=> ZI <= E, both routes computed", CheckMode::full},
      {"S2", "weak semicommutativity through ZI", "(ab = 0 => aRb <= N) <=> ZI <= N", CheckMode::full},
      {"S3", "rings without nontrivial idempotents", "ZINC and E = {0, 1} => ZI <= N", CheckMode::full},
      {"S4", "upper triangular rings", "T_n(R), R with E(R) = {0, 1}: ZI <= E + N <=> ZI <= N", CheckMode::full},
      {"S5", "J-clean rings", "J-clean and J nil => ZI <= N", CheckMode::full},
      {"S6", "nil ideals", "I nil, R/I ZINC => R ZINC; |R/I| |I| = |R|", CheckMode::full},
      {"S7", "finite direct products", "product ZINC <=> every factor ZINC", CheckMode::full},
      {"S8", "triangular, trivial and truncated extensions",
       "T_n(R), R x| R, R[x]/(x^n) ZINC <=> R ZINC", CheckMode::certificate_only},
      {"S9", "ZI inside E + U", "ZINC => ZI <= E + U", CheckMode::full},
      {"S10", "matrix rings and weak cleanness", "M_n(R) ZINC, n >= 2 => R weakly clean", CheckMode::full},
      {"S10b", "unit offsets over domains",
       "R a domain, M_n(R) ZINC => each w has a unit v with w - v in R w^2 or w - v = 1", CheckMode::full},
      {"S11", "matrix rings over division rings", "M_n(K) ZINC <=> |K| = 2", CheckMode::full},
      {"S12", "trivial Morita contexts", "A, B ZINC => (A M; P B) ZINC when MP = PM = 0", CheckMode::full},
      {"S13", "central idempotents",
       "R ZINC <=> Re ZINC for every central e <=> Re, R(1-e) ZINC for some central e", CheckMode::full},
      {"S14", "aJb inside N", "ZINC and ab = 0 => aJb <= N", CheckMode::full},
      {"S15", "separating example", "M_2(Z_2) is ZINC and not weakly semicommutative", CheckMode::full},
      {"S16", "M_2(Z_3)", "M_2(Z_3) is not ZINC", CheckMode::full},
  };
  return list;
}

/// One ring under study with its lazily filled classification.
struct Entry {
  FiniteRing ring;
  std::unique_ptr<RingAnalysis> analysis;
  std::map<std::string, PropertyVerdict, std::less<>> verdicts;

  Entry(FiniteRing r, const Limits& limits)
      : ring(std::move(r)), analysis(std::make_unique<RingAnalysis>(ring, limits)) {}

  const PropertyVerdict& verdict(std::string_view property) {
    auto it = verdicts.find(property);
    if (it == verdicts.end()) it = verdicts.emplace(std::string(property), check_property(*analysis, property)).first;
    return it->second;
  }
  bool holds(std::string_view property) { return verdict(property).holds; }
  const ZeroInsertiveSet& zi() { return analysis->zero_insertive(); }
};

enum class Tri { yes, no, unknown };

RingOutcome make(const FiniteRing& r, Outcome o, std::string detail) { return {r.name(), o, std::move(detail), {}, {}}; }

RingOutcome with_certificate(RingOutcome out, const std::optional<Certificate>& c, const FiniteRing& where) {
  if (c) {
    out.certificate = c;
    out.certificate_ring = where;
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// Least x in ZI outside `target`, as a (x, a, r, b) failure witness.
std::optional<FailureWitness> zi_outside(Entry& e, const ElementSet& target, const char* context) {
  const auto& zi = e.zi();
  std::optional<FailureWitness> out;
  zi.set.members.for_each([&](std::size_t x) {
    if (out || target.contains(static_cast<ElementId>(x))) return;
    const auto& w = zi.witness[x];
    out = FailureWitness{context, {w.x, w.a, w.r, w.b}, 0};
  });
  return out;
}

bool is_matrix_over(const RingExpr* e, std::uint64_t n, std::uint64_t q) {
  if (!e || e->kind != Kind::matrix || e->param != n) return false;
  const RingExpr& b = e->base();
  return (b.kind == Kind::zn || b.kind == Kind::gf) && b.param == q;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::hypothesis_not_met:
      return "hypothesis_not_met";
    case Outcome::pass:
      return "pass";
    case Outcome::fail:
      return "fail";
    case Outcome::skipped:
      break;
  }
  return "skipped";
}

std::string to_string(Aggregate aggregate) {
  switch (aggregate) {
    case Aggregate::all_pass:
      return "all_pass";
    case Aggregate::vacuous:
      return "vacuous";
    case Aggregate::refuted:
      return "refuted";
    case Aggregate::skipped:
      break;
  }
  return "skipped";
}

std::span<const Statement> statements() { return catalogue(); }

Aggregate aggregate_of(std::span<const RingOutcome> outcomes) {
  bool pass = false, skipped = false;
  for (const auto& o : outcomes) {
    if (o.outcome == Outcome::fail) return Aggregate::refuted;
    pass |= o.outcome == Outcome::pass;
    skipped |= o.outcome == Outcome::skipped;
  }
  if (pass) return Aggregate::all_pass;
  return skipped ? Aggregate::skipped : Aggregate::vacuous;
}

std::vector<RingExpr> default_corpus() {
  using E = RingExpr;
  return {
      E::Zn(2),
      E::Zn(3),
      E::Zn(4),
      E::Zn(6),
      E::Zn(8),
      E::GF(4),
      E::GF(9),
      E::Product({E::Zn(2), E::Zn(4)}),
      E::Matrix(2, E::Zn(2)),
      E::Matrix(2, E::Zn(3)),
      E::Matrix(2, E::GF(4)),
      E::Matrix(2, E::GF(5)),
      E::Matrix(2, E::Zn(4)),
      E::Matrix(3, E::Zn(2)),
      E::UpperTriangular(2, E::Zn(2)),
      E::UpperTriangular(3, E::Zn(2)),
      E::UpperTriangular(2, E::Zn(4)),
      E::TrivialExtension(E::Zn(4)),
      E::TrivialExtension(E::Matrix(2, E::Zn(2))),
      E::PolyQuot(E::Zn(2), 3),
      E::PolyQuot(E::Matrix(2, E::Zn(3)), 2),
      E::Quaternion(E::Zn(2)),
      E::Quaternion(E::Zn(4)),
      E::Morita(E::Zn(2)),
      E::Morita(E::Zn(4)),
      E::UpperTriangular(2, E::Matrix(2, E::Zn(3))),
  };
}

std::vector<RingExpr> read_corpus(std::string_view text) {
  std::vector<RingExpr> out;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_expr(line));
    } catch (const ParseError& e) {
      throw ParseError("corpus line " + std::to_string(line_no) + ": " + e.what(), e.offset(), e.expected());
    } catch (const SemanticError& e) {
      throw SemanticError("corpus line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

bool HarnessReport::audit_clean() const {
  return std::all_of(audits.begin(), audits.end(), [](const AuditSummary& a) { return a.violations.empty(); });
}

// ---------------------------------------------------------------------------

struct Harness::State {
  Limits limits;
  std::vector<Entry> entries;
  std::vector<FiniteRing> rings;

  State(std::vector<FiniteRing> rs, const Limits& l) : limits(l), rings(std::move(rs)) {
    entries.reserve(rings.size());
    for (const auto& r : rings) entries.emplace_back(r, limits);
  }

  bool full(const FiniteRing& r) const { return r.order() <= limits.zi_threshold; }

  Entry fresh(FiniteRing r) const { return Entry(std::move(r), limits); }

  /// Corpus entry with the same construction tree, if any.
  Entry* find(const RingExpr& e) {
    for (auto& entry : entries)
      if (entry.ring.expr() && *entry.ring.expr() == e) return &entry;
    return nullptr;
  }

  template <class F>
  void guarded(std::vector<RingOutcome>& out, const std::string& name, F&& body) {
    try {
      body();
    } catch (const GateError& e) {
      out.push_back({name, Outcome::skipped, e.what(), {}, {}});
    } catch (const InternalError& e) {
      out.push_back({name, Outcome::fail, std::string("internal error: ") + e.what(), {}, {}});
    } catch (const Error& e) {
      out.push_back({name, Outcome::fail, std::string("error: ") + e.what(), {}, {}});
    }
  }

  /// Runs `body` on every corpus ring under the ZI gate; larger rings are skipped.
  template <class F>
  std::vector<RingOutcome> each_full(F&& body) {
    std::vector<RingOutcome> out;
    for (auto& e : entries) {
      if (!full(e.ring)) {
        out.push_back(make(e.ring, Outcome::skipped, "order above the ZI gate"));
        continue;
      }
      guarded(out, e.ring.name(), [&] { out.push_back(body(e)); });
    }
    return out;
  }

  /// ZINC status, with certificate-mode refutation for rings above the ZI gate.
  Tri zinc_status(Entry& e, std::optional<Certificate>* certificate = nullptr) {
    if (full(e.ring)) {
      const auto& v = e.verdict("zinc");
      if (certificate) *certificate = v.certificate;
      return v.holds ? Tri::yes : Tri::no;
    }
    const RingExpr* ex = e.ring.expr();
    if (!ex) return Tri::unknown;
    std::vector<ZincCandidate> candidates;
    if (ex->kind == Kind::matrix && ex->param >= 2) {
      // w E11 = E1n (w En1) E11
      const FiniteRing base = build(ex->base(), limits);
      const auto n = static_cast<std::uint32_t>(ex->param);
      for (ElementId w = 0; w < base.order(); ++w)
        candidates.push_back({matrix_unit(base, n, 0, n - 1, base.one()), matrix_unit(base, n, n - 1, 0, w),
                              matrix_unit(base, n, 0, 0, base.one())});
    } else if (auto embedded = corner_candidate(*ex)) {
      candidates.push_back(*embedded);
    }
    if (candidates.empty()) return Tri::unknown;
    auto v = zinc_certificate_check(e.ring, candidates);
    if (v.holds) return Tri::unknown;
    if (certificate) *certificate = v.certificate;
    return Tri::no;
  }

  /// For T_n(R), R x| R and R[x]/(x^n) over a non-ZINC base: the base's least
  /// ZINC failure placed in the first coordinate. That coordinate is the least
  /// significant digit and zero has index 0, so the element keeps its index.
  std::optional<ZincCandidate> corner_candidate(const RingExpr& ex) {
    if (ex.kind != Kind::upper_triangular && ex.kind != Kind::trivial_extension && ex.kind != Kind::poly_quot)
      return std::nullopt;
    Entry base = fresh(build(ex.base(), limits));
    if (!full(base.ring)) return std::nullopt;
    const auto& v = base.verdict("zinc");
    if (v.holds) return std::nullopt;
    const auto& w = std::get<FailureWitness>(*v.certificate).elements;
    return ZincCandidate{w[1], w[2], w[3]};
  }

  // -------------------------------------------------------------------------

  std::vector<RingOutcome> s0() {
    return each_full([&](Entry& e) {
      if (!e.holds("commutative")) return make(e.ring, Outcome::hypothesis_not_met, "not commutative");
      const auto& z = e.verdict("zinc");
      return with_certificate(make(e.ring, z.holds ? Outcome::pass : Outcome::fail, "ZINC: " + yes_no(z.holds)),
                              z.holds ? std::nullopt : z.certificate, e.ring);
    });
  }

  // The direct quantifier scan and the ZI-set inclusion are computed
  // separately here, not through check_property, so a disagreement is
  // reported with a certificate instead of an exception.
  std::vector<RingOutcome> dual_route(bool weak) {
    return each_full([&](Entry& e) {
      auto direct = weak ? weakly_semicommutative_counterexample(e.ring, limits)
                         : semicommutative_counterexample(e.ring, limits);
      const ElementSet& target = weak ? e.analysis->nilpotents().set : e.analysis->idempotents();
      auto outside = zi_outside(e, target, weak ? "zi_outside_N" : "zi_outside_E");
      const bool by_definition = !direct, by_zi = !outside;
      std::string detail = std::string(weak ? "weakly semicommutative: " : "semicommutative: ") +
                           yes_no(by_definition) + ", ZI <= " + (weak ? "N: " : "E: ") + yes_no(by_zi);
      std::optional<Certificate> cert;
      if (direct)
        cert = *direct;
      else if (outside)
        cert = *outside;
      return with_certificate(make(e.ring, by_definition == by_zi ? Outcome::pass : Outcome::fail, detail), cert,
                              e.ring);
    });
  }

  /// hypothesis => ZI <= target, failing with a zi_outside certificate.
  template <class Hyp>
  std::vector<RingOutcome> zi_inclusion(Hyp&& hypothesis, std::function<const ElementSet&(Entry&)> target,
                                        const char* context, const char* label) {
    return each_full([&](Entry& e) {
      std::string why;
      if (!hypothesis(e, why)) return make(e.ring, Outcome::hypothesis_not_met, why);
      auto outside = zi_outside(e, target(e), context);
      return with_certificate(
          make(e.ring, outside ? Outcome::fail : Outcome::pass, std::string(label) + ": " + yes_no(!outside)),
          outside ? std::optional<Certificate>(*outside) : std::nullopt, e.ring);
    });
  }

  std::vector<RingOutcome> s3() {
    return zi_inclusion(
        [](Entry& e, std::string& why) {
          if (!e.holds("zinc")) return why = "not ZINC", false;
          if (!e.holds("only_trivial_idempotents")) return why = "has a nontrivial idempotent", false;
          return true;
        },
        [](Entry& e) -> const ElementSet& { return e.analysis->nilpotents().set; }, "zi_outside_N", "ZI <= N");
  }

  std::vector<RingOutcome> s4() {
    std::vector<RingOutcome> out;
    for (auto& e : entries) {
      const RingExpr* ex = e.ring.expr();
      if (!ex || ex->kind != Kind::upper_triangular) continue;
      guarded(out, e.ring.name(), [&] {
        Entry base = fresh(build(ex->base(), limits));
        if (!base.holds("only_trivial_idempotents")) {
          out.push_back(make(e.ring, Outcome::hypothesis_not_met, "base has a nontrivial idempotent"));
          return;
        }
        if (!full(e.ring)) {
          out.push_back(make(e.ring, Outcome::skipped, "order above the ZI gate"));
          return;
        }
        const bool zinc = e.holds("zinc");
        auto outside = zi_outside(e, e.analysis->nilpotents().set, "zi_outside_N");
        const bool in_n = !outside;
        RingOutcome o = make(e.ring, zinc == in_n ? Outcome::pass : Outcome::fail,
                             "ZI <= E+N: " + yes_no(zinc) + ", ZI <= N: " + yes_no(in_n));
        out.push_back(with_certificate(std::move(o), outside ? std::optional<Certificate>(*outside) : std::nullopt,
                                       e.ring));
      });
    }
    return out;
  }

  std::vector<RingOutcome> s5() {
    return zi_inclusion(
        [](Entry& e, std::string& why) {
          if (!e.holds("j_clean")) return why = "not J-clean", false;
          if (!e.analysis->jacobson_radical().is_subset_of(e.analysis->nilpotents().set))
            return why = "J not nil", false;
          return true;
        },
        [](Entry& e) -> const ElementSet& { return e.analysis->nilpotents().set; }, "zi_outside_N", "ZI <= N");
  }

  std::vector<RingOutcome> s6() {
    std::vector<RingOutcome> out;
    for (auto& e : entries) {
      if (!full(e.ring)) {
        out.push_back(make(e.ring, Outcome::skipped, "order above the ZI gate"));
        continue;
      }
      guarded(out, e.ring.name(), [&] {
        const FiniteRing& r = e.ring;
        // Nil ideals: J(R), and <p 1> for each prime p with p 1 nilpotent and nonzero.
        std::vector<std::vector<ElementId>> generator_sets;
        const auto radical = e.analysis->jacobson_radical().elements();
        if (radical.size() > 1) generator_sets.push_back(radical);
        std::uint64_t characteristic = 1;
        for (ElementId s = r.one(); s != r.zero(); s = r.add(s, r.one())) ++characteristic;
        for (auto p : prime_factors(characteristic)) {
          ElementId p1 = r.zero();
          for (std::uint64_t i = 0; i < p; ++i) p1 = r.add(p1, r.one());
          if (p1 != r.zero() && nilpotency_index(r, p1)) generator_sets.push_back({p1});
        }
        std::vector<Bitset> seen;
        for (const auto& gens : generator_sets) {
          Quotient q = quotient_by_nil_ideal(r, gens, limits);
          if (std::find(seen.begin(), seen.end(), q.ideal.members) != seen.end()) continue;
          seen.push_back(q.ideal.members);
          const std::uint64_t qi = std::uint64_t{q.ring.order()} * q.ideal.members.count();
          std::string detail = "|R/I| = " + std::to_string(q.ring.order()) +
                               ", |I| = " + std::to_string(q.ideal.members.count());
          if (qi != r.order()) {
            out.push_back(make(q.ring, Outcome::fail, detail + ", product differs from |R|"));
            continue;
          }
          Entry quotient = fresh(q.ring);
          if (!full(quotient.ring) || !quotient.holds("zinc")) {
            out.push_back(make(q.ring, Outcome::hypothesis_not_met, detail + ", R/I not ZINC"));
            continue;
          }
          const auto& z = e.verdict("zinc");
          out.push_back(with_certificate(
              make(q.ring, z.holds ? Outcome::pass : Outcome::fail, detail + ", R ZINC: " + yes_no(z.holds)),
              z.holds ? std::nullopt : z.certificate, r));
        }
      });
    }
    return out;
  }

  RingOutcome product_outcome(Entry& product, std::vector<Entry*> factors) {
    const auto& pz = product.verdict("zinc");
    bool all = true;
    Entry* failing = nullptr;
    for (auto* f : factors) {
      if (!f->holds("zinc") && !failing) failing = f;
      all = all && f->holds("zinc");
    }
    RingOutcome o = make(product.ring, pz.holds == all ? Outcome::pass : Outcome::fail,
                         "product ZINC: " + yes_no(pz.holds) + ", factors ZINC: " + yes_no(all));
    if (!pz.holds) return with_certificate(std::move(o), pz.certificate, product.ring);
    if (failing) return with_certificate(std::move(o), failing->verdict("zinc").certificate, failing->ring);
    return o;
  }

  std::vector<RingOutcome> s7() {
    std::vector<RingOutcome> out;
    std::set<std::string> done;
    auto run = [&](std::vector<Entry*> factors) {
      std::vector<FiniteRing> rs;
      for (auto* f : factors) rs.push_back(f->ring);
      std::string name;
      guarded(out, "product", [&] {
        Entry product = fresh(direct_product(rs, limits));
        name = product.ring.name();
        if (!done.insert(name).second) return;
        if (!full(product.ring)) {
          out.push_back(make(product.ring, Outcome::skipped, "order above the ZI gate"));
          return;
        }
        out.push_back(product_outcome(product, factors));
      });
    };
    // Corpus products against their own factors.
    for (auto& e : entries) {
      const RingExpr* ex = e.ring.expr();
      if (!ex || ex->kind != Kind::product) continue;
      guarded(out, e.ring.name(), [&] {
        if (!full(e.ring)) {
          out.push_back(make(e.ring, Outcome::skipped, "order above the ZI gate"));
          return;
        }
        std::vector<Entry> fs;
        for (const auto& c : ex->children) fs.push_back(fresh(build(c, limits)));
        std::vector<Entry*> ptrs;
        for (auto& f : fs) ptrs.push_back(&f);
        done.insert(e.ring.name());
        out.push_back(product_outcome(e, ptrs));
      });
    }
    std::vector<Entry*> small;
    for (auto& e : entries)
      if (full(e.ring)) small.push_back(&e);
    if (small.empty()) return out;
    std::stable_sort(small.begin(), small.end(),
                     [](Entry* a, Entry* b) { return a->ring.order() < b->ring.order(); });
    Entry* smallest = small.front();
    for (auto& e : entries)
      if (&e != smallest && full(e.ring) && e.ring.order() <= 128) run({&e, smallest});
    for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
      Entry& a = entries[i];
      Entry& b = entries[i + 1];
      if (full(a.ring) && full(b.ring) && std::uint64_t{a.ring.order()} * b.ring.order() <= 1024) run({&a, &b});
    }
    if (small.size() >= 3) run({small[0], small[1], small[2]});
    return out;
  }

  std::vector<RingOutcome> s8() {
    std::vector<RingOutcome> out;
    for (auto& e : entries) {
      const RingExpr* ex = e.ring.expr();
      if (!ex || (ex->kind != Kind::upper_triangular && ex->kind != Kind::trivial_extension &&
                  ex->kind != Kind::poly_quot))
        continue;
      guarded(out, e.ring.name(), [&] {
        Entry base = fresh(build(ex->base(), limits));
        if (!full(base.ring)) {
          out.push_back(make(e.ring, Outcome::skipped, "base above the ZI gate"));
          return;
        }
        const auto& bz = base.verdict("zinc");
        if (full(e.ring)) {
          const auto& rz = e.verdict("zinc");
          RingOutcome o = make(e.ring, rz.holds == bz.holds ? Outcome::pass : Outcome::fail,
                               "ring ZINC: " + yes_no(rz.holds) + ", base ZINC: " + yes_no(bz.holds));
          if (!rz.holds)
            o = with_certificate(std::move(o), rz.certificate, e.ring);
          else if (!bz.holds)
            o = with_certificate(std::move(o), bz.certificate, base.ring);
          out.push_back(std::move(o));
          return;
        }
        if (bz.holds) {
          out.push_back(make(e.ring, Outcome::skipped, "base is ZINC; the converse needs a full ZI scan"));
          return;
        }
        const auto& w = std::get<FailureWitness>(*bz.certificate).elements;
        const ZincCandidate c{w[1], w[2], w[3]};
        auto v = zinc_certificate_check(e.ring, std::span<const ZincCandidate>(&c, 1));
        RingOutcome o = make(e.ring, v.holds ? Outcome::fail : Outcome::pass,
                             std::string("certificate mode: embedded base witness ") +
                                 (v.holds ? "is nil clean" : "is not nil clean"));
        out.push_back(with_certificate(std::move(o), v.holds ? std::nullopt : v.certificate, e.ring));
      });
    }
    return out;
  }

  std::vector<RingOutcome> s9() {
    return zi_inclusion(
        [](Entry& e, std::string& why) {
          if (!e.holds("zinc")) return why = "not ZINC", false;
          return true;
        },
        [](Entry& e) -> const ElementSet& { return e.analysis->eu_sum(); }, "zi_outside_EU", "ZI <= E+U");
  }

  std::vector<RingOutcome> s10() {
    std::vector<RingOutcome> out;
    for (auto& e : entries) {
      const RingExpr* ex = e.ring.expr();
      if (!ex || ex->kind != Kind::matrix || ex->param < 2) continue;
      guarded(out, e.ring.name(), [&] {
        const Tri z = zinc_status(e);
        if (z == Tri::unknown) {
          out.push_back(make(e.ring, Outcome::skipped, "ZINC status undecided above the ZI gate"));
          return;
        }
        if (z == Tri::no) {
          out.push_back(make(e.ring, Outcome::hypothesis_not_met, "not ZINC"));
          return;
        }
        Entry base = fresh(build(ex->base(), limits));
        const auto& wc = base.verdict("weakly_clean");
        std::size_t valid = 0;
        for (const auto& c : wc.evidence) valid += validate(base.ring, c);
        const bool ok = wc.holds && valid == wc.evidence.size() && valid == base.ring.order();
        RingOutcome o = make(e.ring, ok ? Outcome::pass : Outcome::fail,
                             "base weakly clean: " + yes_no(wc.holds) + ", witnesses validated: " +
                                 std::to_string(valid) + "/" + std::to_string(base.ring.order()));
        out.push_back(with_certificate(std::move(o), wc.certificate, base.ring));
      });
    }
    return out;
  }

  bool is_domain(Entry& e) { return e.ring.order() >= 2 && e.holds("no_zero_divisors"); }

  std::vector<RingOutcome> s10b() {
    std::vector<RingOutcome> out;
    std::vector<std::pair<std::uint64_t, RingExpr>> cases;
    auto add = [&](std::uint64_t n, const RingExpr& base) {
      for (const auto& c : cases)
        if (c.first == n && c.second == base) return;
      cases.emplace_back(n, base);
    };
    for (auto& e : entries) {
      const RingExpr* ex = e.ring.expr();
      if (ex && ex->kind == Kind::matrix && ex->param >= 2) add(ex->param, ex->base());
    }
    for (auto& e : entries) {
      const RingExpr* ex = e.ring.expr();
      if (ex && full(e.ring) && is_domain(e)) add(2, *ex);
    }
    for (const auto& [n, base_expr] : cases) {
      const RingExpr mexpr = RingExpr::Matrix(n, base_expr);
      guarded(out, to_string(mexpr), [&] {
        Entry base = fresh(build(base_expr, limits));
        if (!full(base.ring)) {
          out.push_back({to_string(mexpr), Outcome::skipped, "base above the ZI gate", {}, {}});
          return;
        }
        if (!is_domain(base)) {
          out.push_back({to_string(mexpr), Outcome::hypothesis_not_met, "base not a domain", {}, {}});
          return;
        }
        Entry* corpus = find(mexpr);
        std::optional<Entry> built;
        if (!corpus) built.emplace(fresh(build(mexpr, limits)));
        Entry& m = corpus ? *corpus : *built;
        const Tri z = zinc_status(m);
        if (z != Tri::yes) {
          out.push_back(make(m.ring, z == Tri::no ? Outcome::hypothesis_not_met : Outcome::skipped,
                             z == Tri::no ? "matrix ring not ZINC" : "ZINC status undecided above the ZI gate"));
          return;
        }
        const FiniteRing& r = base.ring;
        const auto& units = base.analysis->unit_list();
        std::optional<ElementId> bad;
        for (ElementId w = 0; w < r.order() && !bad; ++w) {
          Bitset multiples(r.order());
          const ElementId w2 = r.mul(w, w);
          for (ElementId s = 0; s < r.order(); ++s) multiples.set(r.mul(s, w2));
          const bool found = std::any_of(units.begin(), units.end(), [&](ElementId v) {
            const ElementId d = r.sub(w, v);
            return d == r.one() || multiples.test(d);
          });
          if (!found) bad = w;
        }
        RingOutcome o = make(m.ring, bad ? Outcome::fail : Outcome::pass,
                             "every w has a unit offset: " + yes_no(!bad));
        if (bad) o = with_certificate(std::move(o), Certificate{FailureWitness{"unit_offset", {*bad}, 0}}, r);
        out.push_back(std::move(o));
      });
    }
    return out;
  }

  std::vector<RingOutcome> s11() {
    std::vector<RingOutcome> out;
    for (auto& e : entries) {
      const RingExpr* ex = e.ring.expr();
      if (!ex || ex->kind != Kind::matrix || ex->param < 2) continue;
      guarded(out, e.ring.name(), [&] {
        Entry base = fresh(build(ex->base(), limits));
        if (!full(base.ring) || !is_domain(base)) {
          out.push_back(make(e.ring, full(base.ring) ? Outcome::hypothesis_not_met : Outcome::skipped,
                             full(base.ring) ? "base not a division ring" : "base above the ZI gate"));
          return;
        }
        std::optional<Certificate> cert;
        const Tri z = zinc_status(e, &cert);
        if (z == Tri::unknown) {
          out.push_back(make(e.ring, Outcome::skipped, "ZINC status undecided above the ZI gate"));
          return;
        }
        const bool zinc = z == Tri::yes, f2 = base.ring.order() == 2;
        RingOutcome o = make(e.ring, zinc == f2 ? Outcome::pass : Outcome::fail,
                             "ZINC: " + yes_no(zinc) + ", |K| = " + std::to_string(base.ring.order()));
        out.push_back(with_certificate(std::move(o), zinc ? std::nullopt : cert, e.ring));
      });
    }
    return out;
  }

  RingOutcome morita_outcome(Entry& ring, Entry& a, Entry& b) {
    if (!a.holds("zinc") || !b.holds("zinc")) return make(ring.ring, Outcome::hypothesis_not_met, "A or B not ZINC");
    const auto& z = ring.verdict("zinc");
    return with_certificate(make(ring.ring, z.holds ? Outcome::pass : Outcome::fail, "ZINC: " + yes_no(z.holds)),
                            z.holds ? std::nullopt : z.certificate, ring.ring);
  }

  std::vector<RingOutcome> s12() {
    std::vector<RingOutcome> out;
    for (auto& e : entries) {
      const RingExpr* ex = e.ring.expr();
      if (!ex || ex->kind != Kind::morita) continue;
      guarded(out, e.ring.name(), [&] {
        if (!full(e.ring)) {
          out.push_back(make(e.ring, Outcome::skipped, "order above the ZI gate"));
          return;
        }
        Entry w = fresh(build(ex->base(), limits));
        out.push_back(morita_outcome(e, w, w));
      });
    }
    // Distinct rings: A = Z(n), B = M = P = Z(m) for corpus moduli m | n,
    // with A acting through reduction mod m.
    std::vector<Entry*> cyclic;
    for (auto& e : entries)
      if (e.ring.expr() && e.ring.expr()->kind == Kind::zn) cyclic.push_back(&e);
    for (auto* a : cyclic) {
      for (auto* b : cyclic) {
        const auto n = a->ring.order(), m = b->ring.order();
        if (m < 2 || m >= n || n % m) continue;
        guarded(out, "Morita(" + a->ring.name() + ", " + b->ring.name() + ")", [&] {
          const FiniteRing mod = b->ring;
          BimoduleSpec spec{mod,
                            [mod, m](ElementId x, ElementId y) { return mod.mul(x % m, y); },
                            [mod](ElementId x, ElementId y) { return mod.mul(x, y); },
                            [mod](ElementId x, ElementId y) { return mod.mul(x, y); },
                            [mod, m](ElementId x, ElementId y) { return mod.mul(x, y % m); }};
          Entry ring = fresh(trivial_morita(a->ring, b->ring, spec, limits));
          if (!full(ring.ring)) {
            out.push_back(make(ring.ring, Outcome::skipped, "order above the ZI gate"));
            return;
          }
          out.push_back(morita_outcome(ring, *a, *b));
        });
      }
    }
    return out;
  }

  std::vector<RingOutcome> s13() {
    return each_full([&](Entry& e) {
      const FiniteRing& r = e.ring;
      std::vector<ElementId> central;
      for (ElementId x : e.analysis->idempotent_list())
        if (e.analysis->center().contains(x)) central.push_back(x);
      std::map<ElementId, std::unique_ptr<Entry>> corners;
      auto corner = [&](ElementId c) -> Entry& {
        auto& slot = corners[c];
        if (!slot) slot = std::make_unique<Entry>(c == r.one() ? r : corner_ring(r, c, limits), limits);
        return *slot;
      };
      const bool zinc = e.holds("zinc");
      bool every = true, some = false;
      Entry* failing = nullptr;
      for (ElementId c : central) {
        Entry& rc = corner(c);
        if (!rc.holds("zinc")) {
          every = false;
          if (!failing) failing = &rc;
        }
        if (rc.holds("zinc") && corner(r.sub(r.one(), c)).holds("zinc")) some = true;
      }
      const bool agree = zinc == every && every == some;
      RingOutcome o = make(r, agree ? Outcome::pass : Outcome::fail,
                           std::to_string(central.size()) + " central idempotents; R ZINC: " + yes_no(zinc) +
                               ", every Re: " + yes_no(every) + ", some split: " + yes_no(some));
      if (!zinc) return with_certificate(std::move(o), e.verdict("zinc").certificate, r);
      if (failing) return with_certificate(std::move(o), failing->verdict("zinc").certificate, failing->ring);
      return o;
    });
  }

  std::vector<RingOutcome> s14() {
    return each_full([&](Entry& e) {
      if (!e.holds("zinc")) return make(e.ring, Outcome::hypothesis_not_met, "not ZINC");
      const FiniteRing& r = e.ring;
      const auto radical = e.analysis->jacobson_radical().elements();
      const auto& nil = e.analysis->nilpotents().set;
      for (ElementId a = 0; a < r.order(); ++a) {
        for (ElementId b = 0; b < r.order(); ++b) {
          if (r.mul(a, b) != r.zero()) continue;
          for (ElementId j : radical) {
            if (!nil.contains(r.mul(r.mul(a, j), b))) {
              return with_certificate(make(r, Outcome::fail, "aJb <= N: no"),
                                      Certificate{FailureWitness{"aJb_nil", {a, j, b}, 0}}, r);
            }
          }
        }
      }
      return make(r, Outcome::pass, "aJb <= N: yes, |J| = " + std::to_string(radical.size()));
    });
  }

  std::vector<RingOutcome> s15() {
    std::vector<RingOutcome> out;
    for (auto& e : entries) {
      if (!is_matrix_over(e.ring.expr(), 2, 2)) continue;
      guarded(out, e.ring.name(), [&] {
        const auto& z = e.verdict("zinc");
        const auto& ws = e.verdict("weakly_semicommutative");
        RingOutcome o = make(e.ring, z.holds && !ws.holds ? Outcome::pass : Outcome::fail,
                             "ZINC: " + yes_no(z.holds) + ", weakly semicommutative: " + yes_no(ws.holds));
        out.push_back(with_certificate(std::move(o), z.holds ? ws.certificate : z.certificate, e.ring));
      });
    }
    return out;
  }

  std::vector<RingOutcome> s16() {
    std::vector<RingOutcome> out;
    for (auto& e : entries) {
      if (!is_matrix_over(e.ring.expr(), 2, 3)) continue;
      guarded(out, e.ring.name(), [&] {
        const auto& z = e.verdict("zinc");
        RingOutcome o = make(e.ring, z.holds ? Outcome::fail : Outcome::pass, "ZINC: " + yes_no(z.holds));
        out.push_back(with_certificate(std::move(o), z.holds ? std::nullopt : z.certificate, e.ring));
      });
    }
    return out;
  }

  std::vector<RingOutcome> run(std::string_view id) {
    if (id == "S0") return s0();
    if (id == "S1") return dual_route(false);
    if (id == "S2") return dual_route(true);
    if (id == "S3") return s3();
    if (id == "S4") return s4();
    if (id == "S5") return s5();
    if (id == "S6") return s6();
    if (id == "S7") return s7();
    if (id == "S8") return s8();
    if (id == "S9") return s9();
    if (id == "S10") return s10();
    if (id == "S10b") return s10b();
    if (id == "S11") return s11();
    if (id == "S12") return s12();
    if (id == "S13") return s13();
    if (id == "S14") return s14();
    if (id == "S15") return s15();
    if (id == "S16") return s16();
    throw PreconditionError("unknown statement '" + std::string(id) + "'");
  }
};

namespace {

std::vector<FiniteRing> build_all(std::span<const RingExpr> corpus, const Limits& limits) {
  std::vector<FiniteRing> out;
  out.reserve(corpus.size());
  for (const auto& e : corpus) out.push_back(build(e, limits));
  return out;
}

}  // namespace

Harness::Harness(std::span<const RingExpr> corpus, Limits limits)
    : state_(std::make_unique<State>(build_all(corpus, limits), limits)) {}

Harness::Harness(std::vector<FiniteRing> rings, Limits limits)
    : state_(std::make_unique<State>(std::move(rings), limits)) {}

Harness::~Harness() = default;
Harness::Harness(Harness&&) noexcept = default;
Harness& Harness::operator=(Harness&&) noexcept = default;

std::span<const FiniteRing> Harness::rings() const { return state_->rings; }

TheoremVerdict Harness::verify(std::string_view id) {
  const auto start = Clock::now();
  TheoremVerdict v;
  v.id = std::string(id);
  v.per_ring = state_->run(id);
  v.aggregate = aggregate_of(v.per_ring);
  v.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return v;
}

HarnessReport Harness::run_all(std::chrono::seconds budget) {
  const auto start = Clock::now();
  HarnessReport report;
  for (const auto& ring : state_->rings) {
    const auto options = default_audit_options(ring, state_->limits);
    auto audit = audit_axioms(ring, options, state_->limits);
    report.audits.push_back({ring.name(), options.mode, audit.instances, std::move(audit.violations)});
  }
  for (const auto& s : statements()) {
    TheoremVerdict v;
    if (Clock::now() - start > budget) {
      v.id = s.id;
      v.per_ring.push_back({"*", Outcome::skipped, "time budget exhausted before the statement started", {}, {}});
      v.aggregate = Aggregate::skipped;
    } else {
      v = verify(s.id);
    }
    switch (v.aggregate) {
      case Aggregate::vacuous:
        report.vacuous.push_back(v.id);
        break;
      case Aggregate::refuted:
        report.refuted.push_back(v.id);
        break;
      case Aggregate::skipped:
        report.skipped.push_back(v.id);
        break;
      case Aggregate::all_pass:
        break;
    }
    report.verdicts.push_back(std::move(v));
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return report;
}

TheoremVerdict verify_statement(std::string_view id, std::span<const RingExpr> corpus, const Limits& limits) {
  Harness h(corpus, limits);
  return h.verify(id);
}

}  // namespace zinc
