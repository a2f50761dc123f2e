#pragma once

// The fourteen moods under their modal patterns, Aristotle's verdict for each
// situation, and the hand-built countermodels for the invalid mixed ones.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apodeixis/dsl.hpp"
#include "apodeixis/error.hpp"
#include "apodeixis/model.hpp"
#include "apodeixis/mood.hpp"
#include "apodeixis/semantics.hpp"

namespace apodeixis {

/// Aristotle's verdict on a situation. Unasserted: he neither draws the
/// conclusion nor denies it.
enum class Verdict { Valid, Invalid, Unasserted };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Valid: return "valid";
    case Verdict::Invalid: return "invalid";
    case Verdict::Unasserted: return "unasserted";
  }
  return "";
}

enum class EntryGroup { NNN, MixedNX, Contingency };

/// How the contingent "K" slots of a pattern are read.
enum class Reading {
  TwoSided,   // for all x (Sx -> K Px)
  Ampliated,  // for all x (K Sx -> K Px)
};

// ---------------------------------------------------------------------------
// Instantiation

/// The conclusion slot a pattern claims; an absent slot on N/X premises means N.
inline std::optional<Slot> effective_conclusion(const ModalPattern& p) {
  if (p.conclusion) return p.conclusion;
  const auto nx = [](Slot s) { return s == Slot::N || s == Slot::X; };
  if (nx(p.major) && nx(p.minor)) return Slot::N;
  return std::nullopt;
}

namespace detail {

inline Statement premise_statement(const Schema& s, Slot slot, Reading reading) {
  Statement st{s.relation, Modality::X, Term{s.subject}, Term{s.predicate}};
  switch (slot) {
    case Slot::N: st.modality = Modality::N; break;
    case Slot::X: st.modality = Modality::X; break;
    case Slot::K: st.modality = reading == Reading::Ampliated ? Modality::Kamp : Modality::Ktwo; break;
    case Slot::M: throw Error("an M slot is only allowed in the conclusion");
  }
  if (!supported(st.modality, st.relation)) {
    throw Error("unknown mood/pattern combination: contingency needs a universal premise");
  }
  return st;
}

inline Statement conclusion_statement(const Schema& s, Slot slot, Reading reading) {
  if (slot != Slot::M) {
    auto st = premise_statement(s, slot, reading);
    return st;
  }
  // Possible conclusions are universal: "all C are possibly A" or "possibly not A".
  switch (s.relation) {
    case Relation::a: return {Relation::a, Modality::Ma2, Term{s.subject}, Term{s.predicate}};
    case Relation::e: return {Relation::a, Modality::Mo2, Term{s.subject}, Term{s.predicate}};
    default: throw Error("unknown mood/pattern combination: M conclusion needs a universal mood");
  }
}

}  // namespace detail

inline Inference instantiate(Mood mood, const ModalPattern& pattern, Reading reading = Reading::TwoSided) {
  const auto schema = mood_schema(mood);
  const auto target = effective_conclusion(pattern);
  if (!target) {
    throw Error("unknown mood/pattern combination: " + to_string(mood, pattern) +
                " has no default conclusion to refute");
  }
  Inference inf;
  inf.name = to_string(mood, pattern);
  inf.premises.push_back(detail::premise_statement(schema.major, pattern.major, reading));
  inf.premises.push_back(detail::premise_statement(schema.minor, pattern.minor, reading));
  if (schema.needs_nonempty_c) inf.nonempty.push_back('C');
  inf.conclusion = detail::conclusion_statement(schema.conclusion, *target, reading);
  return inf;
}

// ---------------------------------------------------------------------------
// Fixtures

struct Fixture {
  std::string name;
  Model model;
  std::vector<std::vector<std::string>> element_labels;  // [t][element]
  std::vector<std::string> individual_names;             // parallel to model.individuals
};

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"barbara_xn", "celarent_xn", "baroco_nx", "baroco_xn",
                                              "bocardo_nx"};
  return names;
}

inline Fixture fixture(std::string_view name) {
  // x = (x0, x1); the two-individual fixtures add y = (y0, x1).
  const std::vector<std::vector<std::string>> one_labels{{"x₀"}, {"x₁"}};
  const std::vector<std::vector<std::string>> two_labels{{"x₀", "y₀"}, {"x₁"}};
  auto two = [&](std::string n, std::vector<Extent> a, std::vector<Extent> b, std::vector<Extent> c) {
    Model m{2, {2, 1}, {{0, 0}, {1, 0}}, {{'A', std::move(a)}, {'B', std::move(b)}, {'C', std::move(c)}}};
    return Fixture{std::move(n), std::move(m), two_labels, {"x", "y"}};
  };

  if (name == "barbara_xn") {
    Model m{2, {1, 1}, {{0, 0}}, {{'A', {{0}, {}}}, {'B', {{0}, {0}}}, {'C', {{0}, {}}}}};
    return Fixture{"barbara_xn", std::move(m), one_labels, {"x"}};
  }
  if (name == "celarent_xn") return two("celarent_xn", {{1}, {0}}, {{0}, {0}}, {{0}, {0}});
  if (name == "baroco_nx") return two("baroco_nx", {{0}, {0}}, {{0}, {0}}, {{1}, {0}});
  if (name == "baroco_xn") return two("baroco_xn", {{0}, {}}, {{0}, {0}}, {{1}, {0}});
  if (name == "bocardo_nx") return two("bocardo_nx", {{1}, {}}, {{0}, {}}, {{0}, {0}});
  throw Error("unknown fixture '" + std::string(name) + "'");
}

/// Re-letters a model: concept L of the result takes the extents of
/// `letters[L]` in the source. Letters absent from the map stay as they are.
inline Model relabel(const Model& source, const std::map<char, char>& letters) {
  Model out = source;
  for (const auto& [to, from] : letters) {
    auto it = source.concepts.find(from);
    if (it == source.concepts.end()) throw Error(std::string("relabel: no concept ") + from);
    out.concepts[to] = it->second;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Catalog entries

/// An additional fact about a fixture, checked after relabelling.
struct FixtureClaim {
  std::string description;
  std::function<bool(const Model&)> predicate;
  bool expected = true;
};

struct CatalogEntry {
  Mood mood = Mood::Barbara;
  ModalPattern pattern;
  EntryGroup group = EntryGroup::NNN;
  Verdict verdict = Verdict::Valid;
  Inference inference;
  Reading reading = Reading::TwoSided;
  std::optional<std::string> fixture;
  std::map<char, char> letter_map;  // entry letter -> fixture letter
  std::vector<FixtureClaim> fixture_claims;
  std::optional<DiagramExpr> partial_conclusion;  // weaker expression that does follow
  std::optional<std::string> weakened_to;         // NNN: the valid mixed entry it reduces to
  std::optional<Verdict> derived_verdict;         // engine's own verdict where Aristotle is silent
  std::string notes;
  std::string locator;

  std::string label() const { return to_string(mood, pattern); }
};

namespace detail {

inline ModalPattern pat(std::string_view s) {
  ModalPattern p;
  p.major = static_cast<Slot>(s[0]);
  p.minor = static_cast<Slot>(s[1]);
  std::size_t k = 2;
  if (k < s.size() && s[k] != '?') p.conclusion = static_cast<Slot>(s[k++]);
  p.refute = k < s.size() && s[k] == '?';
  return p;
}

inline FixtureClaim claim_atom(std::string desc, AtomKind kind, std::size_t x, std::size_t y, char c,
                               bool expected) {
  return {std::move(desc), [=](const Model& m) { return atom(m, Atom{kind, x, y, Term{c}}); }, expected};
}

inline FixtureClaim claim_holds(std::string_view text, bool expected) {
  const auto s = parse_statement(text);
  return {std::string(text), [s](const Model& m) { return holds(m, s); }, expected};
}

inline FixtureClaim claim_diagram(int index, char subject, char predicate, bool expected) {
  const DiagramExpr d{index, Term{subject}, Term{predicate}};
  std::string desc = "(" + std::to_string(index) + ") for " + subject + "o" + predicate;
  return {desc, [d](const Model& m) { return diagram_expr(m, d); }, expected};
}

inline CatalogEntry make_entry(Mood m, ModalPattern p, EntryGroup g, Verdict v, Inference inf) {
  CatalogEntry e;
  e.mood = m;
  e.pattern = p;
  e.group = g;
  e.verdict = v;
  e.inference = std::move(inf);
  return e;
}

inline std::vector<CatalogEntry> build_table() {
  std::vector<CatalogEntry> table;
  constexpr std::size_t x = 0, y = 1;

  // Two necessary premises: every mood yields a necessary conclusion.
  const std::map<Mood, std::string> weakening{
      {Mood::Barbara, "Barbara NXN"},   {Mood::Celarent, "Celarent NXN"}, {Mood::Darii, "Darii NXN"},
      {Mood::Ferio, "Ferio NXN"},       {Mood::Cesare, "Cesare NXN"},     {Mood::Camestres, "Camestres XNN"},
      {Mood::Festino, "Festino NXN"},   {Mood::Darapti, "Darapti NXN"},   {Mood::Felapton, "Felapton NXN"},
      {Mood::Datisi, "Datisi NXN"},     {Mood::Disamis, "Disamis XNN"},   {Mood::Ferison, "Ferison NXN"},
  };
  for (Mood m : kAllMoods) {
    auto e = make_entry(m, pat("NNN"), EntryGroup::NNN, Verdict::Valid, instantiate(m, pat("NNN")));
    e.locator = "Prior Analytics I.8";
    if (auto it = weakening.find(m); it != weakening.end()) {
      e.weakened_to = it->second;
      e.notes = "weaken one premise to its assertoric form, then " + it->second;
    } else {
      e.locator = "Prior Analytics I.8, 30a6ff";
      e.notes = "direct search only; the minor premise may be read as diagram expression (4)";
    }
    table.push_back(std::move(e));
  }

  // One necessary and one assertoric premise.
  struct Mixed {
    Mood mood;
    std::string_view pattern;
    Verdict verdict;
    std::optional<std::string> fixture = std::nullopt;
    std::map<char, char> letters = {};
  };
  const std::map<char, char> swap_ab{{'A', 'B'}, {'B', 'A'}};
  const std::map<char, char> swap_bc{{'B', 'C'}, {'C', 'B'}};
  const std::vector<Mixed> mixed{
      {Mood::Barbara, "NXN", Verdict::Valid},
      {Mood::Barbara, "XN?", Verdict::Invalid, "barbara_xn"},
      {Mood::Celarent, "NXN", Verdict::Valid},
      {Mood::Celarent, "XN?", Verdict::Invalid, "celarent_xn"},
      {Mood::Darii, "NXN", Verdict::Valid},
      {Mood::Darii, "XN?", Verdict::Invalid, "barbara_xn"},
      {Mood::Ferio, "NXN", Verdict::Valid},
      {Mood::Ferio, "XN?", Verdict::Invalid, "celarent_xn"},
      {Mood::Cesare, "NXN", Verdict::Valid},
      {Mood::Cesare, "XN?", Verdict::Invalid, "celarent_xn", swap_ab},
      {Mood::Camestres, "NX?", Verdict::Invalid, "celarent_xn", {{'A', 'B'}, {'B', 'C'}, {'C', 'A'}}},
      {Mood::Camestres, "XNN", Verdict::Valid},
      {Mood::Festino, "NXN", Verdict::Valid},
      {Mood::Festino, "XN?", Verdict::Invalid, "celarent_xn", swap_ab},
      {Mood::Baroco, "NX?", Verdict::Invalid, "baroco_nx"},
      {Mood::Baroco, "XN?", Verdict::Invalid, "baroco_xn"},
      {Mood::Darapti, "NXN", Verdict::Valid},
      {Mood::Darapti, "XNN", Verdict::Valid},
      {Mood::Felapton, "NXN", Verdict::Valid},
      {Mood::Felapton, "XN?", Verdict::Invalid, "celarent_xn"},
      {Mood::Datisi, "NXN", Verdict::Valid},
      {Mood::Datisi, "XN?", Verdict::Invalid, "barbara_xn", swap_bc},
      {Mood::Disamis, "NX?", Verdict::Invalid, "barbara_xn", swap_bc},
      {Mood::Disamis, "XNN", Verdict::Valid},
      {Mood::Ferison, "NXN", Verdict::Valid},
      {Mood::Ferison, "XN?", Verdict::Invalid, "celarent_xn"},
      {Mood::Bocardo, "NX?", Verdict::Invalid, "bocardo_nx"},
      {Mood::Bocardo, "XN?", Verdict::Invalid, "celarent_xn"},
  };
  for (const auto& row : mixed) {
    const auto p = pat(row.pattern);
    auto e = make_entry(row.mood, p, EntryGroup::MixedNX, row.verdict, instantiate(row.mood, p));
    e.fixture = row.fixture;
    e.letter_map = row.letters;
    const int fig = figure(row.mood);
    e.locator = fig == 1 ? "Prior Analytics I.9" : fig == 2 ? "Prior Analytics I.10" : "Prior Analytics I.11";
    if (row.fixture && !row.letters.empty()) e.notes = "reuses " + *row.fixture + " with relettering";
    table.push_back(std::move(e));
  }

  auto entry = [&](Mood m, std::string_view pattern) -> CatalogEntry& {
    for (auto& e : table) {
      if (e.mood == m && e.pattern == pat(pattern)) return e;
    }
    throw Error("catalog construction: missing entry");
  };

  {
    auto& e = entry(Mood::Barbara, "XN?");
    e.locator = "Prior Analytics I.9, 30a25ff";
    e.fixture_claims = {
        claim_atom("N(Bx)", AtomKind::NAx, x, x, 'B', true),
        claim_atom("N(Ax)", AtomKind::NAx, x, x, 'A', false),
        claim_atom("N(Cx)", AtomKind::NAx, x, x, 'C', false),
        claim_holds("N(CaB)", true),
    };
  }
  entry(Mood::Darii, "XN?").notes = "shares the barbara_xn countermodel";
  {
    auto& e = entry(Mood::Celarent, "XN?");
    e.fixture_claims = {
        claim_atom("N(Ay)", AtomKind::NAx, y, y, 'A', true),
        claim_atom("N(Bx)", AtomKind::NAx, x, x, 'B', true),
        claim_atom("N(Cx)", AtomKind::NAx, x, x, 'C', true),
        claim_atom("M(x=y)", AtomKind::MEqual, x, y, 'A', true),
        claim_holds("N(BoA)", false),
    };
  }
  {
    auto& e = entry(Mood::Ferio, "XN?");
    e.notes = "shares the celarent_xn countermodel";
    e.fixture_claims = {
        {"exists x (N(Cx) & N(Bx))",
         [](const Model& m) {
           for (std::size_t i = 0; i < m.individuals.size(); ++i) {
             if (atom(m, {AtomKind::NAx, i, i, Term{'C'}}) && atom(m, {AtomKind::NAx, i, i, Term{'B'}})) return true;
           }
           return false;
         },
         true},
        claim_diagram(2, 'C', 'A', false),
        claim_diagram(3, 'C', 'A', false),
    };
  }
  entry(Mood::Camestres, "NX?").locator = "Prior Analytics I.10, 30b24ff";
  {
    auto& e = entry(Mood::Baroco, "NX?");
    e.fixture_claims = {
        claim_atom("N(Ax)", AtomKind::NAx, x, x, 'A', true),
        claim_atom("N(Bx)", AtomKind::NAx, x, x, 'B', true),
        claim_atom("M(x=y)", AtomKind::MEqual, x, y, 'A', true),
        {"exists y (Cy & forall x (N(Bx) -> N(x!=y)))",
         [](const Model& m) {
           const auto n = m.individuals.size();
           for (std::size_t j = 0; j < n; ++j) {
             if (!atom(m, {AtomKind::Ax, j, j, Term{'C'}})) continue;
             bool apart = true;
             for (std::size_t i = 0; i < n; ++i) {
               if (atom(m, {AtomKind::NAx, i, i, Term{'B'}}) && !atom(m, {AtomKind::NDistinct, i, j, Term{}})) {
                 apart = false;
               }
             }
             if (apart) return true;
           }
           return false;
         },
         false},
    };
  }
  {
    auto& e = entry(Mood::Baroco, "XN?");
    e.partial_conclusion = DiagramExpr{5, Term{'C'}, Term{'B'}};
    e.notes = "only (5) for CoB follows, from the unfavourable reading of the minor premise";
    e.fixture_claims = {
        claim_atom("N(Ax)", AtomKind::NAx, x, x, 'A', false),
        claim_atom("N(Bx)", AtomKind::NAx, x, x, 'B', true),
        claim_atom("N(Cy)", AtomKind::NAx, y, y, 'C', true),
        claim_diagram(4, 'C', 'B', false),
        claim_diagram(5, 'C', 'B', true),
    };
  }
  for (Mood m : {Mood::Felapton, Mood::Ferison, Mood::Bocardo}) {
    auto& e = entry(m, "XN?");
    e.partial_conclusion = DiagramExpr{5, Term{'B'}, Term{'A'}};
    e.fixture_claims = {claim_diagram(5, 'B', 'A', true)};
    if (e.notes.empty()) e.notes = "shares the celarent_xn countermodel; only (5) for BoA follows";
  }
  {
    auto& e = entry(Mood::Bocardo, "NX?");
    e.partial_conclusion = DiagramExpr{4, Term{'B'}, Term{'A'}};
    e.notes = "only (4) for BoA follows";
    e.fixture_claims = {claim_diagram(4, 'B', 'A', true), claim_diagram(3, 'B', 'A', false)};
  }

  // Contingency situations.
  auto contingent = [&](Mood m, std::string_view pattern, Verdict v, std::string locator,
                        Reading reading = Reading::TwoSided) -> CatalogEntry& {
    const auto p = pat(pattern);
    Inference inf;
    if (effective_conclusion(p)) {
      inf = instantiate(m, p, reading);
    } else {
      inf.name = to_string(m, p);
    }
    table.push_back(make_entry(m, p, EntryGroup::Contingency, v, std::move(inf)));
    table.back().reading = reading;
    table.back().locator = std::move(locator);
    return table.back();
  };
  contingent(Mood::Barbara, "KKK", Verdict::Valid, "Prior Analytics I.14", Reading::Ampliated).notes =
      "ampliated reading: for all x (K Bx -> K Ax)";
  contingent(Mood::Barbara, "KXK", Verdict::Valid, "Prior Analytics I.15");
  contingent(Mood::Celarent, "KXK", Verdict::Valid, "Prior Analytics I.15");
  contingent(Mood::Barbara, "XKM", Verdict::Valid, "Prior Analytics I.15").notes =
      "conclusion: possibly A in sense (2)";
  contingent(Mood::Celarent, "NKX", Verdict::Valid, "Prior Analytics I.16");
  contingent(Mood::Celarent, "XKM", Verdict::Valid, "Prior Analytics I.15").notes =
      "conclusion: possibly not A in sense (2)";
  {
    auto& e = contingent(Mood::Camestres, "XK?", Verdict::Invalid, "Prior Analytics I.17");
    e.inference.premises = {parse_statement("BaA"), parse_statement("K(CeA)")};
    e.inference.conclusion = parse_statement("Mo3(CaB)");
    e.notes = "no conclusion: possibly-not in sense (3) is not monotone";
  }
  {
    auto& e = contingent(Mood::Cesare, "KN?", Verdict::Invalid, "Prior Analytics I.19");
    e.inference.premises = {parse_statement("K(BeA)"), parse_statement("N(CaA)")};
    e.inference.conclusion = parse_statement("CeB");
    e.notes = "claimed conclusion: C and B disjoint";
  }
  {
    auto& e = contingent(Mood::Camestres, "NKM", Verdict::Unasserted, "Prior Analytics I.19");
    e.derived_verdict = Verdict::Valid;
    e.notes = "Aristotle neither draws nor rejects this conclusion";
  }
  return table;
}

}  // namespace detail

/// The complete, duplicate-free table: 14 NNN, 28 mixed and 9 contingency entries.
inline const std::vector<CatalogEntry>& verdict_table() {
  static const std::vector<CatalogEntry> table = detail::build_table();
  return table;
}

/// Looks up the entry for a mood and pattern; patterns match on their premises
/// and effective conclusion, so "Barbara XNN" finds "Barbara XN?".
inline const CatalogEntry* find_entry(Mood mood, const ModalPattern& pattern) {
  for (const auto& e : verdict_table()) {
    if (e.mood == mood && e.pattern.major == pattern.major && e.pattern.minor == pattern.minor &&
        effective_conclusion(e.pattern) == effective_conclusion(pattern)) {
      return &e;
    }
  }
  return nullptr;
}

inline const CatalogEntry* find_entry(std::string_view label) {
  const auto [mood, pattern] = parse_mood(label);
  return find_entry(mood, pattern);
}

/// The fixture model of an entry after applying its letter map.
inline std::optional<Model> entry_fixture_model(const CatalogEntry& e) {
  if (!e.fixture) return std::nullopt;
  return relabel(fixture(*e.fixture).model, e.letter_map);
}

}  // namespace apodeixis
