#include <gtest/gtest.h>

#include "apodeixis/dsl.hpp"

using namespace apodeixis;

TEST(ParseStatement, AllForms) {
  const auto s = parse_statement("N(CaB)");
  EXPECT_EQ(s.modality, Modality::N);
  EXPECT_EQ(s.relation, Relation::a);
  EXPECT_EQ(s.subject, (Term{'C'}));
  EXPECT_EQ(s.predicate, (Term{'B'}));

  EXPECT_EQ(parse_statement("BeA").modality, Modality::X);
  EXPECT_EQ(parse_statement("K(CeA)").modality, Modality::Ktwo);
  EXPECT_EQ(parse_statement("Kamp(CaA)").modality, Modality::Kamp);
  EXPECT_EQ(parse_statement("Ma2(CaA)").modality, Modality::Ma2);
  EXPECT_EQ(parse_statement("Mo3(CaB)").modality, Modality::Mo3);
  EXPECT_EQ(parse_statement(" N ( ~A o B ) ").subject, (Term{'A', true}));
}

TEST(ParseStatement, ConceptLettersNamedLikeModalities) {
  // "K" and "N" are concept letters unless followed by "(".
  const auto s = parse_statement("KaN");
  EXPECT_EQ(s.modality, Modality::X);
  EXPECT_EQ(s.subject, (Term{'K'}));
  EXPECT_EQ(s.predicate, (Term{'N'}));
  EXPECT_EQ(parse_statement("N(NaK)").subject, (Term{'N'}));
}

TEST(ParseStatement, UnicodeNegationOnInput) {
  EXPECT_EQ(parse_statement("N(Ba\xC2\xAC" "A)"), parse_statement("N(Ba~A)"));
  EXPECT_EQ(to_string(parse_statement("N(Ba\xC2\xAC" "A)")), "N(Ba~A)");
}

TEST(ParseStatement, RoundTrip) {
  for (const char* text : {"AaA", "N(BeA)", "N(~Aa~B)", "K(CaA)", "Kamp(CeA)", "Ma2(CaA)", "Mo2(CaB)",
                           "Mo3(CaB)", "~CiB", "N(BoA)"}) {
    EXPECT_EQ(to_string(parse_statement(text)), text);
  }
}

TEST(ParseStatement, ErrorSpans) {
  auto span_of = [](std::string_view text) {
    try {
      parse_statement(text);
    } catch (const ParseError& e) {
      return std::make_pair(e.span().begin, e.span().end);
    }
    return std::make_pair(std::size_t{999}, std::size_t{999});
  };
  EXPECT_EQ(span_of("N(CxB)"), std::make_pair(std::size_t{3}, std::size_t{4}));
  EXPECT_EQ(span_of("N(CaB"), std::make_pair(std::size_t{5}, std::size_t{5}));
  EXPECT_EQ(span_of("CaB)"), std::make_pair(std::size_t{3}, std::size_t{4}));
  EXPECT_EQ(span_of("caB"), std::make_pair(std::size_t{0}, std::size_t{1}));
  EXPECT_EQ(span_of("K(CiB)"), std::make_pair(std::size_t{0}, std::size_t{6}));
  EXPECT_EQ(span_of("Mo2(CeB)"), std::make_pair(std::size_t{0}, std::size_t{8}));
  EXPECT_EQ(span_of(""), std::make_pair(std::size_t{0}, std::size_t{0}));
}

TEST(ParseMood, Patterns) {
  auto [m, p] = parse_mood("Barbara NXN");
  EXPECT_EQ(m, Mood::Barbara);
  EXPECT_EQ(p.label(), "NXN");
  EXPECT_FALSE(p.refute);

  std::tie(m, p) = parse_mood("bocardo nx?");
  EXPECT_EQ(m, Mood::Bocardo);
  EXPECT_EQ(p.label(), "NX?");
  EXPECT_TRUE(p.refute);
  EXPECT_FALSE(p.conclusion);

  std::tie(m, p) = parse_mood("Camestres XK");
  EXPECT_EQ(p.label(), "XK?");

  std::tie(m, p) = parse_mood("Celarent XKM");
  EXPECT_EQ(p.conclusion, Slot::M);
  EXPECT_EQ(to_string(m, p), "Celarent XKM");
}

TEST(ParseMood, Errors) {
  EXPECT_THROW(parse_mood("Bramantip NNN"), ParseError);
  EXPECT_THROW(parse_mood("Barbara N"), ParseError);
  EXPECT_THROW(parse_mood("Barbara NXNN"), ParseError);
  EXPECT_THROW(parse_mood("Barbara MXN"), ParseError);
  EXPECT_THROW(parse_mood("Barbara NQN"), ParseError);
  EXPECT_THROW(parse_mood("Barbara NXN extra"), ParseError);
  try {
    parse_mood("Barbara MXN");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.span().begin, 8u);
    EXPECT_EQ(e.span().end, 9u);
  }
}
