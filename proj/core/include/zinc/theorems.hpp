#pragma once

#include <chrono>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zinc/audit.hpp"
#include "zinc/certificate.hpp"
#include "zinc/classify.hpp"
#include "zinc/expr.hpp"
#include "zinc/limits.hpp"
#include "zinc/properties.hpp"
#include "zinc/ring.hpp"

namespace zinc {

/// One catalogued statement: hypothesis filter + conclusion check over a corpus.
struct Statement {
  std::string id;       // "S0" ... "S16", "S10b"
  std::string anchor;   // short name of the result being checked
  std::string summary;  // what is checked
  CheckMode required_mode = CheckMode::full;
};

/// Catalogue in report order.
std::span<const Statement> statements();

enum class Outcome { hypothesis_not_met, pass, fail, skipped };
enum class Aggregate { all_pass, vacuous, refuted, skipped };

std::string to_string(Outcome outcome);
std::string to_string(Aggregate aggregate);

struct RingOutcome {
  std::string ring;
  Outcome outcome = Outcome::hypothesis_not_met;
  std::string detail;
  std::optional<Certificate> certificate;
  /// Ring the certificate lives in (set whenever `certificate` is).
  std::optional<FiniteRing> certificate_ring;
};

struct TheoremVerdict {
  std::string id;
  std::vector<RingOutcome> per_ring;
  Aggregate aggregate = Aggregate::vacuous;
  std::chrono::nanoseconds elapsed{0};
};

/// Aggregate of a list of outcomes: refuted on any fail; otherwise all-pass
/// when something passed, skipped when only skips remain, else vacuous.
Aggregate aggregate_of(std::span<const RingOutcome> outcomes);

/// The built-in ring corpus, in canonical order.
std::vector<RingExpr> default_corpus();

/// Reads a corpus file: one DSL expression per line, `#` starts a comment.
std::vector<RingExpr> read_corpus(std::string_view text);

struct AuditSummary {
  std::string ring;
  AuditMode mode = AuditMode::full;
  std::uint64_t instances = 0;
  std::vector<AxiomViolation> violations;
};

struct HarnessReport {
  std::vector<AuditSummary> audits;
  std::vector<TheoremVerdict> verdicts;
  std::vector<std::string> vacuous;
  std::vector<std::string> refuted;
  std::vector<std::string> skipped;
  std::chrono::nanoseconds elapsed{0};

  bool audit_clean() const;
  /// No refuted statement and no axiom violation.
  bool ok() const { return refuted.empty() && audit_clean(); }
};

/// Runs catalogued statements over a ring corpus.
///
/// Corpus rings are built once and classified lazily; statements that need
/// derived rings (quotients, products, corners, extensions) build them on
/// demand. Rings above the ZI gate are used only by statements that have a
/// certificate-mode route; elsewhere they are reported as skipped.
class Harness {
 public:
  explicit Harness(std::span<const RingExpr> corpus, Limits limits = {});
  /// Prebuilt rings (mutation testing). Selectors use each ring's expr() when present.
  explicit Harness(std::vector<FiniteRing> rings, Limits limits = {});
  ~Harness();
  Harness(Harness&&) noexcept;
  Harness& operator=(Harness&&) noexcept;

  /// Throws PreconditionError for an unknown id.
  TheoremVerdict verify(std::string_view id);

  /// Audits every corpus ring, then runs every statement. Statements that
  /// would start after `budget` has elapsed are reported skipped.
  HarnessReport run_all(std::chrono::seconds budget = std::chrono::seconds{600});

  std::span<const FiniteRing> rings() const;

 private:
  struct State;
  std::unique_ptr<State> state_;
};

/// Convenience wrapper: a fresh Harness over `corpus`.
TheoremVerdict verify_statement(std::string_view id, std::span<const RingExpr> corpus, const Limits& limits = {});

}  // namespace zinc
