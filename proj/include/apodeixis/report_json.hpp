#pragma once

// JSON renderings of check, catalog and property reports. Key order is fixed
// and wall-clock time is left out unless asked for, so equal runs produce
// byte-identical documents.

#include <chrono>
#include <string>

#include <json.hpp>

#include "apodeixis/catalog.hpp"
#include "apodeixis/model_json.hpp"
#include "apodeixis/properties.hpp"
#include "apodeixis/search.hpp"

namespace apodeixis {

using ojson = nlohmann::ordered_json;

inline std::string_view to_string(IndividualPolicy p) {
  return p == IndividualPolicy::AllFunctions ? "functions" : "subsets";
}

inline std::string_view to_string(EntryGroup g) {
  switch (g) {
    case EntryGroup::NNN: return "nnn";
    case EntryGroup::MixedNX: return "mixed";
    case EntryGroup::Contingency: return "contingency";
  }
  return "";
}

inline std::string_view to_string(CatalogScope s) {
  switch (s) {
    case CatalogScope::All: return "all";
    case CatalogScope::NNN: return "nnn";
    case CatalogScope::Mixed: return "mixed";
    case CatalogScope::Contingency: return "contingency";
  }
  return "";
}

inline ojson to_json(const EnumerationBounds& b) {
  ojson j;
  j["t_count"] = b.t_count;
  j["world_sizes"] = b.world_sizes;
  j["concepts"] = b.concept_names;
  j["individuals"] = std::string(to_string(b.individual_policy));
  j["max_models"] = b.max_models;
  return j;
}

inline ojson to_json(const CheckReport& r, bool timing = false) {
  ojson j;
  j["inference"] = r.inference;
  j["premises"] = r.premises;
  j["side_conditions"] = r.side_conditions;
  j["conclusion"] = r.conclusion;
  j["bounds"] = r.bounds ? to_json(*r.bounds) : ojson(nullptr);
  j["models_checked"] = r.models_checked;
  j["outcome"] = std::string(to_string(r.outcome));
  j["countermodel"] = r.countermodel ? model_to_json(*r.countermodel) : ojson(nullptr);
  j["fixture"] = r.fixture ? ojson(*r.fixture) : ojson(nullptr);
  j["engine_version"] = r.engine_version;
  if (timing) j["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
  return j;
}

inline ojson to_json(const CatalogRun& run, bool timing = false) {
  ojson j;
  j["engine_version"] = std::string(kEngineVersion);
  j["bounds"] = to_json(run.bounds);
  j["scope"] = std::string(to_string(run.scope));
  ojson entries = ojson::array();
  for (const auto& row : run.rows) {
    const auto& e = *row.entry;
    ojson x;
    x["mood"] = std::string(mood_name(e.mood));
    x["pattern"] = e.pattern.label();
    x["group"] = std::string(to_string(e.group));
    x["verdict"] = std::string(to_string(e.verdict));
    x["derived_verdict"] = e.derived_verdict ? ojson(std::string(to_string(*e.derived_verdict))) : ojson(nullptr);
    x["engine_result"] = std::string(to_string(row.search.outcome));
    x["divergent"] = row.divergent;
    x["reading"] = e.reading == Reading::Ampliated ? "ampliated" : "two_sided";
    x["locator"] = e.locator;
    x["notes"] = e.notes;
    x["fixture"] = e.fixture ? ojson(*e.fixture) : ojson(nullptr);
    ojson letters = ojson::object();
    for (const auto& [to, from] : e.letter_map) letters[std::string(1, to)] = std::string(1, from);
    x["letter_map"] = letters;
    if (e.partial_conclusion) {
      const auto& d = *e.partial_conclusion;
      x["partial_conclusion"] = "(" + std::to_string(d.index) + ") for " + to_string(d.subject) + "o" +
                                to_string(d.predicate);
    } else {
      x["partial_conclusion"] = nullptr;
    }
    x["weakening"] = row.weakening ? ojson(*row.weakening) : ojson(nullptr);
    x["search"] = to_json(row.search, timing);
    x["fixture_check"] = row.fixture_check ? to_json(*row.fixture_check, timing) : ojson(nullptr);
    entries.push_back(std::move(x));
  }
  j["entries"] = std::move(entries);
  ojson summary;
  summary["entries"] = run.rows.size();
  summary["valid"] = run.count(Verdict::Valid);
  summary["invalid"] = run.count(Verdict::Invalid);
  summary["unasserted"] = run.count(Verdict::Unasserted);
  summary["divergences"] = run.divergences;
  j["summary"] = std::move(summary);
  if (run.schematic) {
    j["schematic_barbara_kkk"] = {{"assignments", run.schematic->assignments}, {"holds", run.schematic->holds}};
  } else {
    j["schematic_barbara_kkk"] = nullptr;
  }
  return j;
}

inline std::string_view status(const PropertyResult& r) {
  if (r.property->kind == PropertyKind::Universal) return r.first_index ? "violated" : "holds";
  return r.first_index ? "witnessed" : "no_witness";
}

inline ojson to_json(const PropertyRun& run) {
  ojson j;
  j["engine_version"] = std::string(kEngineVersion);
  j["bounds"] = to_json(run.bounds);
  j["total_checks"] = run.total_checks();
  j["ok"] = run.ok();
  ojson results = ojson::array();
  for (const auto& r : run.results) {
    ojson x;
    x["suite"] = std::string(to_string(r.property->suite));
    x["name"] = r.property->name;
    x["kind"] = r.property->kind == PropertyKind::Universal ? "universal" : "witness";
    x["status"] = std::string(status(r));
    x["models"] = r.models;
    x["checks"] = r.checks;
    x["detail"] = r.first_index ? ojson(r.detail) : ojson(nullptr);
    x["model"] = r.model ? model_to_json(*r.model) : ojson(nullptr);
    results.push_back(std::move(x));
  }
  j["results"] = std::move(results);
  return j;
}

}  // namespace apodeixis
