// apodeixis: evaluate statements, check moods, reproduce the verdict table.
//
// Exit codes: 0 claim confirmed, 1 claim refuted or divergence,
// 2 usage or parse error, 3 internal invariant or fixture failure.

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apodeixis/apodeixis.hpp"

namespace fs = std::filesystem;
using namespace apodeixis;

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct UsageError : Error {
  using Error::Error;
};

// "W0,W1[,subsets|functions]"
EnumerationBounds parse_bounds(const std::string& text, const std::string& concepts, std::uint64_t max_models) {
  EnumerationBounds b;
  b.world_sizes.clear();
  std::stringstream in(text);
  std::string part;
  bool policy_seen = false;
  while (std::getline(in, part, ',')) {
    if (policy_seen) throw UsageError("bounds: the policy must come last");
    if (part == "subsets") {
      b.individual_policy = IndividualPolicy::AllSubsetsOfFunctions;
      policy_seen = true;
      continue;
    }
    if (part == "functions") {
      b.individual_policy = IndividualPolicy::AllFunctions;
      policy_seen = true;
      continue;
    }
    std::uint32_t w = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), w);
    if (ec != std::errc{} || ptr != part.data() + part.size() || w == 0) {
      throw UsageError("bounds: '" + part + "' is not a positive world size");
    }
    b.world_sizes.push_back(w);
  }
  if (b.world_sizes.empty()) throw UsageError("bounds: need at least one world size");
  b.t_count = b.world_sizes.size();
  b.concept_names = concepts;
  b.max_models = max_models;
  return b;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path.string());
  out << text;
}

void print_parse_error(const std::string& input, const ParseError& e) {
  std::cerr << "error: " << e.what() << "\n  " << input << "\n  "
            << std::string(e.span().begin, ' ')
            << std::string(std::max<std::size_t>(1, e.span().end - e.span().begin), '^') << "\n";
}

// Human-readable model, with the fixture's element and individual names when known.
void print_model(std::ostream& os, const Model& m, const Fixture* fx) {
  auto element = [&](std::size_t t, Element e) -> std::string {
    if (fx && t < fx->element_labels.size() && e < fx->element_labels[t].size()) return fx->element_labels[t][e];
    return std::to_string(e);
  };
  if (fx) {
    os << "    labels:";
    for (std::size_t t = 0; t < fx->element_labels.size(); ++t) {
      os << (t ? ";" : "") << " W_" << t << " = {";
      for (std::size_t e = 0; e < fx->element_labels[t].size(); ++e) {
        os << (e ? ", " : "") << e << "↦" << fx->element_labels[t][e];
      }
      os << "}";
    }
    os << "\n";
  }
  os << "    world sizes:";
  for (auto w : m.world_sizes) os << " " << w;
  os << "\n    individuals:";
  for (std::size_t i = 0; i < m.individuals.size(); ++i) {
    const std::string name =
        fx && i < fx->individual_names.size() ? fx->individual_names[i] : "i" + std::to_string(i);
    os << " " << name << "=(";
    for (std::size_t t = 0; t < m.individuals[i].size(); ++t) os << (t ? "," : "") << element(t, m.individuals[i][t]);
    os << ")";
  }
  if (m.individuals.empty()) os << " none";
  os << "\n";
  for (const auto& [name, extents] : m.concepts) {
    os << "    " << name << ":";
    for (std::size_t t = 0; t < extents.size(); ++t) {
      os << " " << name << "_" << t << "={";
      for (std::size_t k = 0; k < extents[t].size(); ++k) os << (k ? "," : "") << element(t, extents[t][k]);
      os << "}";
    }
    os << "\n";
  }
}

void print_report(std::ostream& os, const CheckReport& r) {
  os << r.inference << "\n  premises:";
  for (const auto& p : r.premises) os << " " << p;
  for (const auto& s : r.side_conditions) os << " " << s;
  os << "\n  conclusion: " << r.conclusion << "\n  outcome: " << to_string(r.outcome) << " (" << r.models_checked
     << " models checked)\n";
  if (r.countermodel) {
    os << "  countermodel:\n";
    std::optional<Fixture> fx;
    if (r.fixture) fx = fixture(*r.fixture);
    print_model(os, *r.countermodel, fx ? &*fx : nullptr);
  }
}

// --- subcommands ----------------------------------------------------------------

int cmd_eval(const std::string& model_path, const std::vector<std::string>& statements) {
  Model m;
  try {
    m = decode_model(read_file(model_path));
  } catch (const SchemaError& e) {
    std::cerr << "error: " << model_path << ": " << e.path() << ": " << e.what() << "\n";
    return kUsage;
  }
  if (auto v = validate(m); !v.empty()) {
    std::cerr << "error: " << model_path << ": " << v.front() << "\n";
    return kUsage;
  }
  std::vector<std::pair<std::string, bool>> lines;
  for (const auto& text : statements) {
    try {
      lines.emplace_back(text, holds(m, parse_statement(text)));
    } catch (const ParseError& e) {
      print_parse_error(text, e);
      return kUsage;
    } catch (const EvalError& e) {
      std::cerr << "error: " << text << ": " << e.what() << "\n";
      return kUsage;
    }
  }
  for (const auto& [text, value] : lines) std::cout << text << "\t" << (value ? "true" : "false") << "\n";
  return kOk;
}

int cmd_check(const std::string& mood_text, const EnumerationBounds& bounds, unsigned threads, bool json,
              bool timing) {
  std::pair<Mood, ModalPattern> parsed;
  try {
    parsed = parse_mood(mood_text);
  } catch (const ParseError& e) {
    print_parse_error(mood_text, e);
    return kUsage;
  }
  const auto& [mood, pattern] = parsed;
  const CatalogEntry* entry = find_entry(mood, pattern);
  Inference inf;
  if (entry) {
    inf = entry->inference;
  } else {
    try {
      inf = instantiate(mood, pattern);
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kUsage;
    }
  }
  inf.name = to_string(mood, pattern);
  const CheckReport report = verify_up_to(inf, bounds, threads);
  const bool found = report.outcome == Outcome::CountermodelFound;

  if (json) {
    std::cout << to_json(report, timing).dump(2) << "\n";
  } else {
    print_report(std::cout, report);
  }

  std::optional<Verdict> expected;
  if (entry) {
    expected = entry->verdict == Verdict::Unasserted ? entry->derived_verdict : entry->verdict;
    if (!json) {
      std::cout << "  Aristotle: " << to_string(entry->verdict) << " (" << entry->locator << ")";
      if (entry->derived_verdict) std::cout << "; derived: " << to_string(*entry->derived_verdict);
      std::cout << "\n";
    }
  } else {
    expected = pattern.refute ? Verdict::Invalid : Verdict::Valid;
  }
  const Verdict engine = found ? Verdict::Invalid : Verdict::Valid;
  if (expected && *expected != engine) {
    std::cerr << "divergence: " << report.inference << " expected " << to_string(*expected) << ", engine says "
              << to_string(engine) << "\n";
    return kRefuted;
  }
  return kOk;
}

std::string witness_reference(const CatalogRow& row) {
  const auto& e = *row.entry;
  if (e.fixture) {
    std::string s = "fixture " + *e.fixture;
    if (!e.letter_map.empty()) {
      s += " [";
      bool first = true;
      for (const auto& [to, from] : e.letter_map) {
        s += std::string(first ? "" : " ") + to + "<-" + from;
        first = false;
      }
      s += "]";
    }
    return s;
  }
  if (row.weakening) return "via " + *row.weakening;
  if (row.search.countermodel) return "least countermodel";
  return "exhaustive";
}

int cmd_verify_catalog(CatalogScope scope, const EnumerationBounds& bounds, unsigned threads,
                       const std::string& json_path, bool timing) {
  const CatalogRun run = run_catalog(bounds, scope, threads);
  std::cout << std::left << std::setw(11) << "mood" << std::setw(8) << "pattern" << std::setw(12) << "Aristotle"
            << std::setw(30) << "engine" << "witness\n";
  std::size_t no_cm = 0, cm = 0;
  for (const auto& row : run.rows) {
    const auto& e = *row.entry;
    const bool found = row.search.outcome == Outcome::CountermodelFound;
    (found ? cm : no_cm)++;
    std::string verdict(to_string(e.verdict));
    if (e.derived_verdict) verdict += "*";
    std::cout << std::setw(11) << mood_name(e.mood) << std::setw(8) << e.pattern.label() << std::setw(12) << verdict
              << std::setw(30) << to_string(row.search.outcome) << witness_reference(row)
              << (row.divergent ? "  DIVERGENT" : "") << "\n";
  }
  for (const auto& row : run.rows) {
    if (row.entry->derived_verdict) {
      std::cout << "* " << row.entry->label() << ": Aristotle neither asserts nor denies; engine verdict "
                << (row.search.outcome == Outcome::CountermodelFound ? "invalid" : "valid") << "\n";
    }
  }
  if (run.schematic) {
    std::cout << "schematic Barbara KKK: " << run.schematic->assignments << " assignments, "
              << (run.schematic->holds ? "holds" : "FAILS") << "\n";
  }
  std::cout << "entries: " << run.rows.size() << "; Aristotle valid " << run.count(Verdict::Valid) << ", invalid "
            << run.count(Verdict::Invalid) << ", unasserted " << run.count(Verdict::Unasserted) << "; engine "
            << no_cm << " no_countermodel_up_to_bound, " << cm << " countermodel_found; divergences "
            << run.divergences.size() << "\n";
  for (const auto& d : run.divergences) std::cout << "divergence: " << d << "\n";
  if (!json_path.empty()) write_file(json_path, to_json(run, timing).dump(2) + "\n");
  return run.divergences.empty() ? kOk : kRefuted;
}

int cmd_fixtures(const std::vector<std::string>& names, const fs::path& out_dir) {
  for (const auto& name : names) {
    if (std::find(fixture_names().begin(), fixture_names().end(), name) == fixture_names().end()) {
      std::cerr << "error: unknown fixture '" << name << "'\n";
      return kUsage;
    }
  }
  fs::create_directories(out_dir);
  for (const auto& name : names) {
    const Fixture fx = fixture(name);
    write_file(out_dir / (name + ".json"), encode_model(fx.model));
    ojson report;
    report["fixture"] = name;
    report["engine_version"] = std::string(kEngineVersion);
    ojson confirmations = ojson::array();
    std::cout << name << "\n";
    print_model(std::cout, fx.model, &fx);
    for (const auto& e : verdict_table()) {
      if (e.fixture != name) continue;
      const CheckReport r = confirm_fixture(e);
      confirmations.push_back(to_json(r));
      std::cout << "  " << e.label() << ": " << to_string(r.outcome) << "\n";
    }
    report["confirmations"] = std::move(confirmations);
    write_file(out_dir / (name + ".report.json"), report.dump(2) + "\n");
  }
  return kOk;
}

int cmd_properties(std::optional<Suite> suite, const EnumerationBounds& bounds, unsigned threads,
                   const std::string& json_path) {
  const PropertyRun run = run_properties(bounds, suite, threads);
  std::optional<Suite> current;
  for (const auto& r : run.results) {
    if (current != r.property->suite) {
      current = r.property->suite;
      std::uint64_t n = 0, passed = 0, total = 0;
      for (const auto& x : run.results) {
        if (x.property->suite != *current) continue;
        ++total;
        passed += x.ok();
        n += x.checks;
      }
      std::cout << "suite " << to_string(*current) << ": " << passed << "/" << total << " pass, " << n
                << " checks\n";
    }
    std::cout << "  [" << status(r) << "] " << r.property->name << " (" << r.checks << " checks)";
    if (r.first_index) std::cout << ": " << r.detail;
    std::cout << "\n";
    if (r.model) print_model(std::cout, *r.model, nullptr);
  }
  std::cout << "total checks: " << run.total_checks() << " over " << ModelSpace(bounds).size() << " models\n";
  if (!json_path.empty()) write_file(json_path, to_json(run).dump(2) + "\n");
  return run.ok() ? kOk : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Model checker for Aristotle's modal syllogistic"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kEngineVersion));

  unsigned threads = 0;
  std::string bounds_text = "2,2";
  std::string concepts = "ABC";
  std::uint64_t max_models = 100'000'000;
  bool timing = false;
  auto add_search_flags = [&](CLI::App* sub) {
    sub->add_option("--threads", threads, "worker threads (0 = hardware concurrency)")->envname("APODEIXIS_THREADS");
    sub->add_option("--bounds", bounds_text, "world sizes and policy, e.g. 2,2 or 2,1,functions");
    sub->add_option("--concepts", concepts, "concept letters to enumerate");
    sub->add_option("--max-models", max_models, "abort when the bounds admit more models");
  };

  auto* eval = app.add_subcommand("eval", "evaluate statements in a model file");
  std::string model_path;
  std::vector<std::string> statements;
  eval->add_option("--model", model_path, "model JSON file")->required();
  eval->add_option("statements", statements, "statements such as N(CaB)")->required();

  auto* check = app.add_subcommand("check", "bounded validity check of a mood and pattern");
  std::string mood_text;
  bool json = false;
  check->add_option("mood", mood_text, "e.g. \"Barbara NXN\" or \"Bocardo NX?\"")->required();
  check->add_flag("--json", json, "print the report as JSON");
  check->add_flag("--timing", timing, "include elapsed time in JSON");
  add_search_flags(check);

  auto* verify = app.add_subcommand("verify-catalog", "reproduce the verdict table");
  std::string scope_text = "all";
  std::string json_path;
  verify->add_option("--scope", scope_text, "nnn|mixed|contingency|all")
      ->check(CLI::IsMember({"nnn", "mixed", "contingency", "all"}));
  verify->add_option("--json", json_path, "write the JSON report to this path");
  verify->add_flag("--timing", timing, "include elapsed time in JSON");
  add_search_flags(verify);

  auto* fixtures = app.add_subcommand("fixtures", "write and confirm the hand-built countermodels");
  std::string fixture_name;
  bool all_fixtures = false;
  std::string out_dir = ".";
  auto* name_opt = fixtures->add_option("--name", fixture_name, "fixture name");
  fixtures->add_flag("--all", all_fixtures, "all fixtures")->excludes(name_opt);
  fixtures->add_option("--out", out_dir, "output directory");

  auto* properties = app.add_subcommand("properties", "exhaustive property suites");
  std::string suite_text = "all";
  properties->add_option("--suite", suite_text, "req|diagram|remarks|contingency|all")
      ->check(CLI::IsMember({"req", "diagram", "remarks", "contingency", "all"}));
  properties->add_option("--json", json_path, "write the JSON report to this path");
  add_search_flags(properties);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) return cmd_eval(model_path, statements);

    const auto bounds = parse_bounds(bounds_text, concepts, max_models);
    if (*check) return cmd_check(mood_text, bounds, threads, json, timing);
    if (*verify) {
      const CatalogScope scope = scope_text == "nnn"     ? CatalogScope::NNN
                                 : scope_text == "mixed" ? CatalogScope::Mixed
                                 : scope_text == "contingency" ? CatalogScope::Contingency
                                                               : CatalogScope::All;
      return cmd_verify_catalog(scope, bounds, threads, json_path, timing);
    }
    if (*fixtures) {
      if (!all_fixtures && fixture_name.empty()) throw UsageError("fixtures: give --name NAME or --all");
      return cmd_fixtures(all_fixtures ? fixture_names() : std::vector<std::string>{fixture_name}, out_dir);
    }
    if (*properties) {
      return cmd_properties(suite_text == "all" ? std::nullopt : parse_suite(suite_text), bounds, threads,
                            json_path);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BoundsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FixtureError& e) {
    std::cerr << "fixture failure: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
