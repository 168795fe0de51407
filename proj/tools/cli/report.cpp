#include "report.hpp"

#include <algorithm>
#include <chrono>

namespace zinc::cli {
namespace {

std::string mode_name(AuditMode mode) {
  switch (mode) {
    case AuditMode::full:
      return "full";
    case AuditMode::sampled:
      return "sampled";
    case AuditMode::generated:
      break;
  }
  return "generated";
}

double millis(std::chrono::nanoseconds ns) { return std::chrono::duration<double, std::milli>(ns).count(); }

bool scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

void emit(std::string& out, const Json& j, int indent);

void emit_value(std::string& out, const std::string& pad, const std::string& key, const Json& v, int indent) {
  if (scalar(v)) {
    out += pad + key + ": " + scalar_text(v) + "\n";
  } else if (v.empty()) {
    out += pad + key + ": (none)\n";
  } else if (v.is_array() && std::all_of(v.begin(), v.end(), scalar)) {
    out += pad + key + ": ";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + scalar_text(v[i]);
    out += "\n";
  } else {
    out += pad + key + ":\n";
    emit(out, v, indent + 2);
  }
}

void emit(std::string& out, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) emit_value(out, pad, k, v, indent);
    return;
  }
  for (const auto& item : j) {
    if (scalar(item)) {
      out += pad + "- " + scalar_text(item) + "\n";
      continue;
    }
    std::string inner;
    emit(inner, item, indent + 2);
    inner.replace(indent, 2, "- ");
    out += inner;
  }
}

}  // namespace

Json element_json(const FiniteRing& ring, ElementId x) { return Json{{"index", x}, {"element", ring.format(x)}}; }

Json certificate_json(const FiniteRing& ring, const Certificate& certificate) {
  Json j;
  j["kind"] = certificate_kind(certificate);
  if (const auto* f = std::get_if<FailureWitness>(&certificate)) j["context"] = f->context;
  j["ring"] = ring.name();
  Json fields = Json::object();
  for (const auto& [name, x] : certificate_fields(certificate)) fields[name] = element_json(ring, x);
  j["fields"] = std::move(fields);
  if (const auto* d = std::get_if<NilCleanDecomposition>(&certificate)) j["nilpotency_index"] = d->index;
  if (const auto* f = std::get_if<FailureWitness>(&certificate)) j["exhausted"] = f->exhausted;
  j["valid"] = validate(ring, certificate);
  return j;
}

Json verdict_json(const FiniteRing& ring, const PropertyVerdict& v, const RenderOptions& options) {
  Json j;
  j["holds"] = v.holds;
  j["mode"] = to_string(v.mode);
  if (v.characterization) j["zi_characterization"] = *v.characterization;
  j["certificate"] = v.certificate ? certificate_json(ring, *v.certificate) : Json();
  std::size_t valid = 0;
  for (const auto& c : v.evidence) valid += validate(ring, c);
  j["evidence"] = Json{{"count", v.evidence.size()}, {"valid", valid}};
  if (options.timings) j["elapsed_ms"] = millis(v.elapsed);
  return j;
}

Json set_json(const ElementSet& set, const RenderOptions& options, const ZeroInsertiveSet* zi) {
  Json j;
  j["size"] = set.size();
  if (!options.full_sets && set.size() > options.full_sets_limit) return j;
  Json members = Json::array(), indices = Json::array();
  for (ElementId x : set.elements()) {
    indices.push_back(x);
    members.push_back(set.ring.format(x));
  }
  j["indices"] = std::move(indices);
  j["members"] = std::move(members);
  if (zi) {
    Json witnesses = Json::object();
    for (ElementId x : set.elements()) {
      const auto& w = zi->witness[x];
      witnesses[std::to_string(x)] = Json{{"a", w.a}, {"r", w.r}, {"b", w.b}};
    }
    j["witnesses"] = std::move(witnesses);
  }
  return j;
}

Json audit_json(const FiniteRing& ring, AuditMode mode, std::uint64_t instances,
                const std::vector<AxiomViolation>& violations) {
  Json j;
  j["ring"] = ring.name();
  j["mode"] = mode_name(mode);
  j["instances"] = instances;
  Json vs = Json::array();
  for (const auto& v : violations) vs.push_back(Json{{"axiom", v.axiom}, {"witness", v.witness}});
  j["violations"] = std::move(vs);
  return j;
}

Json theorem_json(const Statement& statement, const TheoremVerdict& verdict, const RenderOptions& options) {
  Json j;
  j["anchor"] = statement.anchor;
  j["summary"] = statement.summary;
  j["mode"] = to_string(statement.required_mode);
  j["aggregate"] = to_string(verdict.aggregate);
  Json rings = Json::array();
  for (const auto& o : verdict.per_ring) {
    Json r;
    r["ring"] = o.ring;
    r["outcome"] = to_string(o.outcome);
    r["detail"] = o.detail;
    if (o.certificate && o.certificate_ring) r["certificate"] = certificate_json(*o.certificate_ring, *o.certificate);
    rings.push_back(std::move(r));
  }
  j["per_ring"] = std::move(rings);
  if (options.timings) j["elapsed_ms"] = millis(verdict.elapsed);
  return j;
}

std::string render_text(const Json& document) {
  std::string out;
  emit(out, document, 0);
  return out;
}

}  // namespace zinc::cli
