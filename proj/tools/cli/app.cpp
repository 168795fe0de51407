#include "app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "report.hpp"
#include "zinc/constructions.hpp"
#include "zinc/error.hpp"
#include "zinc/expr.hpp"

namespace zinc::cli {
namespace {

using Clock = std::chrono::steady_clock;

struct Settings {
  std::string format = "text";
  RenderOptions render;
  std::uint64_t max_order = Limits{}.order_ceiling;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t budget = 600;
  std::uint64_t seed = 0;
  std::uint64_t zi_gate = Limits{}.zi_threshold;
  std::uint64_t set_gate = Limits{}.full_set_threshold;
  std::string corpus_file;
  std::vector<std::string> triples;

  std::string expr, property, kind, statement;
  std::int64_t element = -1;
};

Limits limits_of(const Settings& s) {
  Limits l;
  l.order_ceiling = s.max_order;
  l.zi_threshold = s.zi_gate;
  l.full_set_threshold = s.set_gate;
  l.threads = std::max(1u, s.threads);
  return l;
}

Json header(const std::string& command) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

Json ring_json(const FiniteRing& r) { return Json{{"expr", r.name()}, {"order", r.order()}}; }

void write(std::ostream& out, const Settings& s, const Json& doc) {
  if (s.format == "json")
    out << doc.dump(2) << "\n";
  else
    out << render_text(doc);
}

void add_timing(Json& doc, const Settings& s, Clock::time_point start) {
  if (s.render.timings)
    doc["timings"] = Json{{"total_ms", std::chrono::duration<double, std::milli>(Clock::now() - start).count()}};
}

ZincCandidate parse_triple(const std::string& text, const FiniteRing& ring) {
  std::array<std::uint64_t, 3> v{};
  std::istringstream in(text);
  char c1 = 0, c2 = 0;
  if (!(in >> v[0] >> c1 >> v[1] >> c2 >> v[2]) || c1 != ',' || c2 != ',' || !(in >> std::ws).eof())
    throw PreconditionError("--triple expects a,r,b element indices, got '" + text + "'");
  for (auto x : v)
    if (x >= ring.order())
      throw DomainError("--triple '" + text + "': index " + std::to_string(x) + " out of range for " + ring.name() +
                        " (order " + std::to_string(ring.order()) + ")");
  return {static_cast<ElementId>(v[0]), static_cast<ElementId>(v[1]), static_cast<ElementId>(v[2])};
}

int classify_command(const Settings& s, std::ostream& out) {
  const auto start = Clock::now();
  const Limits limits = limits_of(s);
  const FiniteRing ring = build(parse_expr(s.expr), limits);
  Json doc = header("classify");
  doc["ring"] = ring_json(ring);

  auto options = default_audit_options(ring, limits);
  options.seed = s.seed;
  const auto audit = audit_axioms(ring, options, limits);
  Json a = audit_json(ring, options.mode, audit.instances, audit.violations);
  a.erase("ring");
  doc["audit"] = std::move(a);

  RingAnalysis an(ring, limits);
  Json sets = Json::object(), gated = Json::array();
  auto add_set = [&](const char* name, auto&& compute) {
    try {
      sets[name] = compute();
    } catch (const GateError& e) {
      gated.push_back(std::string(name) + ": " + e.what());
    }
  };
  add_set("E", [&] { return set_json(an.idempotents(), s.render); });
  add_set("N", [&] { return set_json(an.nilpotents().set, s.render); });
  add_set("U", [&] { return set_json(an.units().set, s.render); });
  add_set("Z", [&] { return set_json(an.center(), s.render); });
  add_set("J", [&] { return set_json(an.jacobson_radical(), s.render); });
  add_set("ZI", [&] { return set_json(an.zero_insertive().set, s.render, &an.zero_insertive()); });
  add_set("E+N", [&] { return set_json(an.en_sum(), s.render); });
  add_set("E+U", [&] { return set_json(an.eu_sum(), s.render); });
  doc["sets"] = std::move(sets);

  Json props = Json::object();
  for (auto name : property_names()) {
    try {
      props[std::string(name)] = verdict_json(ring, check_property(an, name), s.render);
    } catch (const GateError& e) {
      gated.push_back(std::string(name) + ": " + e.what());
    }
  }
  doc["properties"] = std::move(props);
  doc["gated"] = std::move(gated);
  add_timing(doc, s, start);
  write(out, s, doc);
  return audit.ok() ? kOk : kFalse;
}

int check_command(const Settings& s, std::ostream& out) {
  const auto start = Clock::now();
  const auto names = property_names();
  if (std::find(names.begin(), names.end(), s.property) == names.end())
    throw PreconditionError("unknown property '" + s.property + "'");
  if (!s.triples.empty() && s.property != "zinc") throw PreconditionError("--triple applies to the zinc property only");
  const Limits limits = limits_of(s);
  const FiniteRing ring = build(parse_expr(s.expr), limits);

  PropertyVerdict verdict;
  if (!s.triples.empty()) {
    std::vector<ZincCandidate> candidates;
    for (const auto& t : s.triples) candidates.push_back(parse_triple(t, ring));
    verdict = zinc_certificate_check(ring, candidates);
  } else {
    verdict = check_property(ring, s.property, limits);
  }
  Json doc = header("check");
  doc["ring"] = ring_json(ring);
  doc["properties"] = Json{{s.property, verdict_json(ring, verdict, s.render)}};
  add_timing(doc, s, start);
  write(out, s, doc);
  return verdict.holds ? kOk : kFalse;
}

int witness_command(const Settings& s, std::ostream& out) {
  const auto start = Clock::now();
  if (s.kind != "zi") throw PreconditionError("unknown witness kind '" + s.kind + "' (expected zi)");
  const Limits limits = limits_of(s);
  const FiniteRing ring = build(parse_expr(s.expr), limits);
  if (s.element < 0 || static_cast<std::uint64_t>(s.element) >= ring.order())
    throw DomainError("element index " + std::to_string(s.element) + " out of range for " + ring.name() + " (order " +
                      std::to_string(ring.order()) + ")");
  const auto x = static_cast<ElementId>(s.element);
  const auto zi = zero_insertive(ring, limits);
  Json doc = header("witness");
  doc["ring"] = ring_json(ring);
  doc["element"] = element_json(ring, x);
  const bool member = zi.set.contains(x);
  doc["in_zi"] = member;
  doc["witness"] = member ? certificate_json(ring, zi.witness[x]) : Json("not in ZI");
  add_timing(doc, s, start);
  write(out, s, doc);
  return member ? kOk : kFalse;
}

std::vector<RingExpr> load_corpus(const Settings& s) {
  if (s.corpus_file.empty()) return default_corpus();
  std::ifstream in(s.corpus_file);
  if (!in) throw PreconditionError("cannot read corpus file '" + s.corpus_file + "'");
  std::stringstream text;
  text << in.rdbuf();
  return read_corpus(text.str());
}

Json corpus_json(const std::vector<RingExpr>& corpus) {
  Json list = Json::array();
  for (const auto& e : corpus) {
    const auto order = expected_order(e);
    list.push_back(Json{{"expr", to_string(e)}, {"order", order ? Json(*order) : Json()}});
  }
  return list;
}

int verify_command(const Settings& s, std::ostream& out) {
  const auto start = Clock::now();
  const auto catalogue = statements();
  const bool all = s.statement == "all";
  auto statement = std::find_if(catalogue.begin(), catalogue.end(), [&](const Statement& st) { return st.id == s.statement; });
  if (!all && statement == catalogue.end()) throw PreconditionError("unknown statement '" + s.statement + "'");

  const auto corpus = load_corpus(s);
  Harness harness(corpus, limits_of(s));
  Json doc = header("verify");
  doc["corpus"] = corpus_json(corpus);
  Json theorems = Json::object();
  int code = kOk;
  if (all) {
    const auto report = harness.run_all(std::chrono::seconds(s.budget));
    Json audits = Json::array();
    for (std::size_t i = 0; i < report.audits.size(); ++i) {
      const auto& a = report.audits[i];
      audits.push_back(audit_json(harness.rings()[i], a.mode, a.instances, a.violations));
    }
    doc["audits"] = std::move(audits);
    for (std::size_t i = 0; i < report.verdicts.size(); ++i)
      theorems[report.verdicts[i].id] = theorem_json(catalogue[i], report.verdicts[i], s.render);
    doc["theorems"] = std::move(theorems);
    doc["vacuous"] = report.vacuous;
    doc["refuted"] = report.refuted;
    doc["skipped"] = report.skipped;
    doc["ok"] = report.ok();
    code = report.ok() ? kOk : kFalse;
  } else {
    const auto verdict = harness.verify(statement->id);
    theorems[verdict.id] = theorem_json(*statement, verdict, s.render);
    doc["theorems"] = std::move(theorems);
    code = verdict.aggregate == Aggregate::refuted ? kFalse : kOk;
  }
  doc["notes"] = Json::array({
      "S12 instantiates Morita(W) as A = B = M = P = W, and A = Z(n), B = M = P = Z(m) for corpus moduli m | n "
      "with A acting through reduction mod m",
      "S10b reads the disjunction per element: each w needs one unit v with w - v in R w^2 or w - v = 1",
  });
  add_timing(doc, s, start);
  write(out, s, doc);
  return code;
}

int corpus_command(const Settings& s, std::ostream& out) {
  Json doc = header("corpus");
  doc["corpus"] = corpus_json(load_corpus(s));
  write(out, s, doc);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Exact laboratory for finite rings: zero-insertive sets, nil-clean decompositions, ZINC checks",
               "zinc-lab"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", s.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--full-sets", s.render.full_sets, "List set members regardless of size");
  app.add_option("--full-sets-limit", s.render.full_sets_limit, "List members of sets up to this size");
  app.add_option("--max-order", s.max_order, "Order ceiling for constructed rings");
  app.add_option("--threads", s.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--budget", s.budget, "Time budget in seconds for verify all");
  app.add_flag("--timings", s.render.timings, "Include timings in the report");
  app.add_option("--seed", s.seed, "Seed of sampled axiom audits");
  app.add_option("--zi-gate", s.zi_gate, "Largest order for the ZI pair scan");
  app.add_option("--set-gate", s.set_gate, "Largest order for E, N, U, Z and J");
  app.add_option("--corpus", s.corpus_file, "Corpus file, one expression per line");

  auto* classify = app.add_subcommand("classify", "Audit a ring and compute its element sets and properties");
  classify->add_option("expr", s.expr, "Ring expression")->required();
  auto* check = app.add_subcommand("check", "Decide one property");
  check->add_option("property", s.property, "Property name")->required();
  check->add_option("expr", s.expr, "Ring expression")->required();
  check->add_option("--triple", s.triples, "Certificate-mode ZINC candidate a,r,b (repeatable)")
      ->allow_extra_args(false);
  auto* witness = app.add_subcommand("witness", "Zero-insertive witness of one element");
  witness->add_option("kind", s.kind, "Witness kind (zi)")->required();
  witness->add_option("expr", s.expr, "Ring expression")->required();
  witness->add_option("element", s.element, "Element index")->required();
  auto* verify = app.add_subcommand("verify", "Run catalogued statements over the corpus");
  verify->add_option("statement", s.statement, "Statement id or all")->required();
  auto* corpus = app.add_subcommand("corpus", "Print the ring corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classify) return classify_command(s, out);
    if (*check) return check_command(s, out);
    if (*witness) return witness_command(s, out);
    if (*verify) return verify_command(s, out);
    if (*corpus) return corpus_command(s, out);
  } catch (const GateError& e) {
    err << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace zinc::cli
