// Acceptance gate: one PASS/FAIL line per criterion.
//
// usage: acceptance CLI_BINARY FIXTURE_DIR SCRATCH_DIR

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "apodeixis/apodeixis.hpp"

namespace fs = std::filesystem;
using namespace apodeixis;

namespace {

std::string g_cli;
fs::path g_fixtures;
fs::path g_scratch;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = "\"" + g_cli + "\" " + args + " > \"" + (g_scratch / "cli.out").string() + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
#ifdef WEXITSTATUS
  return WEXITSTATUS(status);
#else
  return status;
#endif
}

struct Criterion {
  std::string id;
  std::string title;
  std::function<void(std::vector<std::string>&, std::string&)> body;  // failures, summary
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void ac1(std::vector<std::string>& fail, std::string& summary) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto run = run_catalog(EnumerationBounds{}, CatalogScope::Mixed, 0);
  const double secs = seconds_since(t0);
  std::size_t none = 0, found = 0;
  for (const auto& row : run.rows) (row.search.outcome == Outcome::CountermodelFound ? found : none)++;
  if (run.rows.size() != 28) fail.push_back("expected 28 rows, got " + std::to_string(run.rows.size()));
  if (none != 13) fail.push_back("expected 13 no_countermodel, got " + std::to_string(none));
  if (found != 15) fail.push_back("expected 15 countermodel_found, got " + std::to_string(found));
  if (!run.divergences.empty()) fail.push_back(std::to_string(run.divergences.size()) + " divergences");
  for (const auto& row : run.rows) {
    if (row.entry->verdict == Verdict::Invalid &&
        (!row.fixture_check || row.fixture_check->outcome != Outcome::FixtureConfirmed)) {
      fail.push_back(row.entry->label() + " lacks a confirmed fixture");
    }
  }
  if (secs > 300) fail.push_back("took " + std::to_string(secs) + " s");

  const auto json_path = g_scratch / "ac1.json";
  const int code = run_cli("verify-catalog --scope mixed --bounds 2,2 --json \"" + json_path.string() + "\"");
  if (code != 0) fail.push_back("CLI exit code " + std::to_string(code));
  const auto j = nlohmann::json::parse(slurp(json_path), nullptr, false);
  std::size_t cli_none = 0, cli_found = 0;
  if (!j.is_discarded()) {
    for (const auto& e : j["entries"]) (e["engine_result"] == "countermodel_found" ? cli_found : cli_none)++;
  }
  if (cli_none != 13 || cli_found != 15) fail.push_back("CLI report counts differ");
  std::ostringstream s;
  s << none << " no_countermodel_up_to_bound, " << found << " countermodel_found, " << run.divergences.size()
    << " divergences, " << secs << " s";
  summary = s.str();
}

void ac2(std::vector<std::string>& fail, std::string& summary) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto run = run_catalog(EnumerationBounds{}, CatalogScope::NNN, 0);
  const double secs = seconds_since(t0);
  std::size_t confirmed = 0;
  for (const auto& row : run.rows) {
    const bool ok = row.search.outcome == Outcome::NoCountermodelUpToBound &&
                    row.search.models_checked == ModelSpace(EnumerationBounds{}).size();
    confirmed += ok;
    const bool direct_only = row.entry->mood == Mood::Baroco || row.entry->mood == Mood::Bocardo;
    if (direct_only && row.weakening) fail.push_back(row.entry->label() + " used a weakening shortcut");
  }
  if (run.rows.size() != 14 || confirmed != 14) fail.push_back(std::to_string(confirmed) + "/14 confirmed");
  if (!run.divergences.empty()) fail.push_back(std::to_string(run.divergences.size()) + " divergences");
  if (secs > 300) fail.push_back("took " + std::to_string(secs) + " s");
  const int code = run_cli("verify-catalog --scope nnn --bounds 2,2");
  if (code != 0) fail.push_back("CLI exit code " + std::to_string(code));
  std::ostringstream s;
  s << confirmed << "/14 confirmed by exhaustive search (Baroco, Bocardo direct), " << secs << " s";
  summary = s.str();
}

void ac3(std::vector<std::string>& fail, std::string& summary) {
  std::size_t files = 0, confirmations = 0;
  const auto out_dir = g_scratch / "fixtures";
  const int code = run_cli("fixtures --all --out \"" + out_dir.string() + "\"");
  if (code != 0) fail.push_back("CLI fixtures exit code " + std::to_string(code));
  for (const auto& name : fixture_names()) {
    const auto path = g_fixtures / (name + ".json");
    const std::string bytes = slurp(path);
    Model m;
    try {
      m = decode_model(bytes);
    } catch (const std::exception& e) {
      fail.push_back(name + ": " + e.what());
      continue;
    }
    ++files;
    if (!validate(m).empty()) fail.push_back(name + " does not validate");
    if (m != fixture(name).model) fail.push_back(name + " differs from the built-in fixture");
    if (encode_model(m) != bytes) fail.push_back(name + " does not re-encode bit-exactly");
    if (slurp(out_dir / (name + ".json")) != bytes) fail.push_back(name + " CLI output differs from data file");
    for (const auto& e : verdict_table()) {
      if (e.fixture != name) continue;
      try {
        const Model relabelled = relabel(m, e.letter_map);
        if (!premises_hold(relabelled, e.inference) || holds(relabelled, e.inference.conclusion)) {
          fail.push_back(e.label() + " not refuted by decoded " + name);
        }
        confirm_fixture(e);
        ++confirmations;
      } catch (const std::exception& ex) {
        fail.push_back(ex.what());
      }
    }
  }
  const Model bx = decode_model(slurp(g_fixtures / "baroco_xn.json"));
  if (diagram_expr(bx, {4, Term{'C'}, Term{'B'}})) fail.push_back("baroco_xn satisfies (4) for CoB");
  const Model bn = decode_model(slurp(g_fixtures / "baroco_nx.json"));
  bool weak = false;
  for (std::size_t y = 0; y < bn.individuals.size(); ++y) {
    if (!atom(bn, {AtomKind::Ax, y, y, Term{'C'}})) continue;
    bool apart = true;
    for (std::size_t x = 0; x < bn.individuals.size(); ++x) {
      if (atom(bn, {AtomKind::NAx, x, x, Term{'B'}}) && !atom(bn, {AtomKind::NDistinct, x, y, Term{}})) apart = false;
    }
    weak = weak || apart;
  }
  if (weak) fail.push_back("baroco_nx satisfies exists y (Cy & forall x (NBx -> N(x!=y)))");
  summary = std::to_string(files) + "/5 fixture files decode bit-exactly, " + std::to_string(confirmations) +
            " entry confirmations, stronger Baroco remarks hold";
}

void ac4(std::vector<std::string>& fail, std::string& summary) {
  const EnumerationBounds b;  // [2,2], all subsets of functions, concepts A B C
  const auto run = run_properties(b, std::nullopt, 0);
  std::size_t universal = 0, witnessed = 0;
  for (const auto& r : run.results) {
    if (!r.ok()) fail.push_back(r.property->name + " failed: " + r.detail);
    if (r.property->kind == PropertyKind::Universal) {
      ++universal;
      if (r.models != ModelSpace(b).size()) fail.push_back(r.property->name + " skipped models");
    } else {
      witnessed += r.ok();
    }
  }
  auto require = [&](std::string_view prefix, PropertyKind kind) {
    for (const auto& r : run.results) {
      if (r.property->name.starts_with(prefix) && r.property->kind == kind) return;
    }
    fail.push_back("no property named " + std::string(prefix));
  };
  for (auto p : {"REQ1", "REQ2", "REQ3", "DIAG (1) implies (2)", "DIAG (1) implies (3)", "DIAG (3) implies (4)",
                 "DIAG (2) implies (4)", "DIAG (5) implies (6)", "DIAG (4) implies (6)", "DIAG N(SoP) iff",
                 "DIAG SoP iff", "K-EQ", "MONO SaP"}) {
    require(p, PropertyKind::Universal);
  }
  for (auto p : {"N(BeA) and N(Ba~A) differ", "N(BoA) and N(Bi~A) differ", "N(BaA) and N(~Aa~B) differ",
                 "N(AaA) fails", "micro pos(1) without pos(2)", "micro pos(2) without pos(1)", "DIAG-NEG"}) {
    require(p, PropertyKind::Witness);
  }
  if (run.total_checks() < 2'000'000) fail.push_back("only " + std::to_string(run.total_checks()) + " checks");
  summary = std::to_string(universal) + " universal properties hold over " + std::to_string(ModelSpace(b).size()) +
            " models, " + std::to_string(witnessed) + " witnesses found, " + std::to_string(run.total_checks()) +
            " checks";
}

void ac5(std::vector<std::string>& fail, std::string& summary) {
  const EnumerationBounds b;
  const std::vector<std::pair<std::string, Outcome>> cases{
      {"Celarent NKX", Outcome::NoCountermodelUpToBound}, {"Camestres NKM", Outcome::NoCountermodelUpToBound},
      {"Camestres XK?", Outcome::CountermodelFound},      {"Cesare KN?", Outcome::CountermodelFound},
      {"Barbara XKM", Outcome::NoCountermodelUpToBound},  {"Celarent XKM", Outcome::NoCountermodelUpToBound},
  };
  std::string parts;
  for (const auto& [label, expected] : cases) {
    const auto* e = find_entry(label);
    if (!e) {
      fail.push_back("no catalog entry " + label);
      continue;
    }
    const auto r = verify_up_to(e->inference, b, 0);
    if (r.outcome != expected) fail.push_back(label + ": " + std::string(to_string(r.outcome)));
    parts += (parts.empty() ? "" : ", ") + label + " " + std::string(to_string(r.outcome));
  }
  if (to_string(find_entry("Cesare KN?")->inference.conclusion) != "CeB") fail.push_back("Cesare KN target");
  if (to_string(find_entry("Barbara XKM")->inference.conclusion) != "Ma2(CaA)") fail.push_back("Barbara XKM target");
  if (to_string(find_entry("Celarent XKM")->inference.conclusion) != "Mo2(CaA)") fail.push_back("Celarent XKM target");
  summary = parts;
}

void ac6(std::vector<std::string>& fail, std::string& summary) {
  const auto a = g_scratch / "catalog_t1.json";
  const auto b = g_scratch / "catalog_t8.json";
  const int c1 = run_cli("verify-catalog --scope all --threads 1 --json \"" + a.string() + "\"");
  const int c8 = run_cli("verify-catalog --scope all --threads 8 --json \"" + b.string() + "\"");
  if (c1 != 0 || c8 != 0) fail.push_back("CLI exit codes " + std::to_string(c1) + ", " + std::to_string(c8));
  const auto ja = slurp(a), jb = slurp(b);
  if (ja.empty() || ja != jb) fail.push_back("JSON reports differ");
  const auto in1 = to_json(run_catalog(EnumerationBounds{}, CatalogScope::All, 1)).dump();
  const auto in8 = to_json(run_catalog(EnumerationBounds{}, CatalogScope::All, 8)).dump();
  if (in1 != in8) fail.push_back("in-process reports differ");
  summary = "full catalog JSON byte-identical for 1 and 8 threads (" + std::to_string(ja.size()) + " bytes)";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 4) {
    std::cerr << "usage: acceptance CLI_BINARY FIXTURE_DIR SCRATCH_DIR\n";
    return 2;
  }
  g_cli = argv[1];
  g_fixtures = argv[2];
  g_scratch = argv[3];
  fs::create_directories(g_scratch);

  const std::vector<Criterion> criteria{
      {"AC1", "mixed-table reproduction", ac1}, {"AC2", "NNN reproduction", ac2},
      {"AC3", "fixture fidelity", ac3},         {"AC4", "property suites", ac4},
      {"AC5", "contingency reproduction", ac5}, {"AC6", "determinism", ac6},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::vector<std::string> failures;
    std::string summary;
    try {
      c.body(failures, summary);
    } catch (const std::exception& e) {
      failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS " : "FAIL ") << c.id << " " << c.title << ": " << summary << "\n";
    for (const auto& f : failures) std::cout << "     - " << f << "\n";
  }
  return failed == 0 ? 0 : 1;
}
