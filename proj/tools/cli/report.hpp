#pragma once

#include <cstddef>
#include <string>

#include <json.hpp>

#include "zinc/audit.hpp"
#include "zinc/certificate.hpp"
#include "zinc/classify.hpp"
#include "zinc/properties.hpp"
#include "zinc/theorems.hpp"

namespace zinc::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

struct RenderOptions {
  bool full_sets = false;
  std::size_t full_sets_limit = 256;
  bool timings = false;
};

Json element_json(const FiniteRing& ring, ElementId x);
/// Slots, kind-specific extras and the result of re-validating on `ring`.
Json certificate_json(const FiniteRing& ring, const Certificate& certificate);
Json verdict_json(const FiniteRing& ring, const PropertyVerdict& verdict, const RenderOptions& options);
/// Size always; members (and ZI witnesses) only under the full-sets limit.
Json set_json(const ElementSet& set, const RenderOptions& options, const ZeroInsertiveSet* zi = nullptr);
Json audit_json(const FiniteRing& ring, AuditMode mode, std::uint64_t instances,
                const std::vector<AxiomViolation>& violations);
Json theorem_json(const Statement& statement, const TheoremVerdict& verdict, const RenderOptions& options);

/// Indented key: value rendering of a report document.
std::string render_text(const Json& document);

}  // namespace zinc::cli
