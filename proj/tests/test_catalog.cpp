#include <gtest/gtest.h>

#include <set>

#include "apodeixis/catalog.hpp"
#include "apodeixis/search.hpp"

using namespace apodeixis;

TEST(Instantiate, FirstFigure) {
  const auto [m, p] = parse_mood("Barbara NXN");
  const auto inf = instantiate(m, p);
  ASSERT_EQ(inf.premises.size(), 2u);
  EXPECT_EQ(to_string(inf.premises[0]), "N(BaA)");
  EXPECT_EQ(to_string(inf.premises[1]), "CaB");
  EXPECT_EQ(to_string(inf.conclusion), "N(CaA)");
  EXPECT_TRUE(inf.nonempty.empty());
}

TEST(Instantiate, ThirdFigureSideCondition) {
  const auto [m, p] = parse_mood("Felapton NXN");
  const auto inf = instantiate(m, p);
  EXPECT_EQ(to_string(inf.premises[0]), "N(CeA)");
  EXPECT_EQ(to_string(inf.conclusion), "N(BoA)");
  EXPECT_EQ(inf.nonempty, std::vector<char>{'C'});
}

TEST(Instantiate, RefutationTargetDefaultsToNecessity) {
  const auto [m, p] = parse_mood("Baroco NX?");
  EXPECT_EQ(to_string(instantiate(m, p).conclusion), "N(CoB)");
}

TEST(Instantiate, PossibleConclusions) {
  auto [m, p] = parse_mood("Barbara XKM");
  EXPECT_EQ(to_string(instantiate(m, p).conclusion), "Ma2(CaA)");
  std::tie(m, p) = parse_mood("Celarent XKM");
  EXPECT_EQ(to_string(instantiate(m, p).conclusion), "Mo2(CaA)");
  std::tie(m, p) = parse_mood("Barbara KKK");
  EXPECT_EQ(to_string(instantiate(m, p, Reading::Ampliated).conclusion), "Kamp(CaA)");
}

TEST(Instantiate, UnknownCombinations) {
  auto [m, p] = parse_mood("Darii KXK");
  EXPECT_THROW(instantiate(m, p), Error);
  std::tie(m, p) = parse_mood("Ferio XXM");
  EXPECT_THROW(instantiate(m, p), Error);
  std::tie(m, p) = parse_mood("Camestres XK?");
  EXPECT_THROW(instantiate(m, p), Error);
}

TEST(VerdictTable, Shape) {
  const auto& t = verdict_table();
  std::size_t nnn = 0, mixed = 0, cont = 0, mixed_valid = 0, mixed_invalid = 0;
  std::set<std::string> labels;
  for (const auto& e : t) {
    EXPECT_TRUE(labels.insert(e.label()).second) << "duplicate " << e.label();
    EXPECT_FALSE(e.locator.empty()) << e.label();
    switch (e.group) {
      case EntryGroup::NNN: ++nnn; break;
      case EntryGroup::MixedNX:
        ++mixed;
        (e.verdict == Verdict::Valid ? mixed_valid : mixed_invalid)++;
        EXPECT_EQ(e.verdict == Verdict::Invalid, e.fixture.has_value()) << e.label();
        break;
      case EntryGroup::Contingency: ++cont; break;
    }
  }
  EXPECT_EQ(nnn, 14u);
  EXPECT_EQ(mixed, 28u);
  EXPECT_EQ(cont, 9u);
  EXPECT_EQ(mixed_valid, 13u);
  EXPECT_EQ(mixed_invalid, 15u);
}

TEST(VerdictTable, NnnWeakeningTargets) {
  for (const auto& e : verdict_table()) {
    if (e.group != EntryGroup::NNN) continue;
    if (e.mood == Mood::Baroco || e.mood == Mood::Bocardo) {
      EXPECT_FALSE(e.weakened_to) << e.label();
      continue;
    }
    ASSERT_TRUE(e.weakened_to) << e.label();
    const auto* target = find_entry(*e.weakened_to);
    ASSERT_NE(target, nullptr);
    EXPECT_EQ(target->verdict, Verdict::Valid);
    EXPECT_EQ(target->mood, e.mood);
  }
}

TEST(VerdictTable, LookupMatchesEffectiveConclusion) {
  EXPECT_EQ(find_entry("Barbara XNN"), find_entry("Barbara XN?"));
  EXPECT_EQ(find_entry("Barbara XN")->verdict, Verdict::Invalid);
  EXPECT_EQ(find_entry("Camestres XK")->verdict, Verdict::Invalid);
  EXPECT_EQ(find_entry("Camestres NKM")->verdict, Verdict::Unasserted);
  EXPECT_EQ(find_entry("Camestres NKM")->derived_verdict, Verdict::Valid);
  EXPECT_EQ(find_entry("Barbara XXX"), nullptr);
}

TEST(VerdictTable, ContingencyConclusions) {
  EXPECT_EQ(to_string(find_entry("Camestres XK?")->inference.conclusion), "Mo3(CaB)");
  EXPECT_EQ(to_string(find_entry("Cesare KN?")->inference.conclusion), "CeB");
  EXPECT_EQ(to_string(find_entry("Camestres NKM")->inference.conclusion), "Mo2(CaB)");
  EXPECT_EQ(to_string(find_entry("Celarent NKX")->inference.conclusion), "CeA");
  EXPECT_EQ(find_entry("Barbara KKK")->reading, Reading::Ampliated);
}

TEST(Fixtures, AllKnownFixturesValidate) {
  for (const auto& name : fixture_names()) {
    const auto fx = fixture(name);
    EXPECT_EQ(fx.name, name);
    EXPECT_TRUE(validate(fx.model).empty()) << name;
    EXPECT_EQ(fx.individual_names.size(), fx.model.individuals.size());
    EXPECT_EQ(fx.element_labels.size(), fx.model.t_count);
  }
  EXPECT_THROW(fixture("unknown"), Error);
}

TEST(Fixtures, BarocoXnData) {
  // A1 empty, B1 = C1 = {x1}.
  const auto m = fixture("baroco_xn").model;
  EXPECT_TRUE(m.concepts.at('A')[1].empty());
  EXPECT_EQ(m.concepts.at('B')[1], Extent{0});
  EXPECT_EQ(m.concepts.at('C')[1], Extent{0});
}

TEST(Fixtures, EveryInvalidMixedEntryConfirms) {
  for (const auto& e : verdict_table()) {
    if (!e.fixture) continue;
    const auto r = confirm_fixture(e);
    EXPECT_EQ(r.outcome, Outcome::FixtureConfirmed) << e.label();
  }
}

TEST(Fixtures, RelabelPermutesConcepts) {
  const auto base = fixture("celarent_xn").model;
  const auto m = relabel(base, {{'A', 'B'}, {'B', 'C'}, {'C', 'A'}});
  EXPECT_EQ(m.concepts.at('A'), base.concepts.at('B'));
  EXPECT_EQ(m.concepts.at('B'), base.concepts.at('C'));
  EXPECT_EQ(m.concepts.at('C'), base.concepts.at('A'));
  EXPECT_THROW(relabel(base, {{'A', 'Q'}}), Error);
}

TEST(Fixtures, WrongFixtureIsRejected) {
  CatalogEntry e = *find_entry("Barbara XN?");
  e.fixture = "celarent_xn";
  EXPECT_THROW(confirm_fixture(e), FixtureError);
  e = *find_entry("Baroco XN?");
  e.fixture_claims.push_back({"always false", [](const Model&) { return false; }, true});
  EXPECT_THROW(confirm_fixture(e), FixtureError);
}
