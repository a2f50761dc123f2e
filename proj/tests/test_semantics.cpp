#include <gtest/gtest.h>

#include "apodeixis/catalog.hpp"
#include "apodeixis/dsl.hpp"
#include "apodeixis/semantics.hpp"

using namespace apodeixis;

namespace {

bool H(const Model& m, std::string_view s) { return holds(m, parse_statement(s)); }

const Term A{'A'}, B{'B'}, notA{'A', true};

}  // namespace

TEST(Atoms, BarbaraFixture) {
  const Model m = fixture("barbara_xn").model;
  EXPECT_TRUE(atom(m, {AtomKind::NAx, 0, 0, B}));
  EXPECT_FALSE(atom(m, {AtomKind::NAx, 0, 0, A}));
  EXPECT_TRUE(atom(m, {AtomKind::Ax, 0, 0, A}));
  EXPECT_TRUE(atom(m, {AtomKind::MAx, 0, 0, A}));
  EXPECT_TRUE(atom(m, {AtomKind::MNotAx, 0, 0, A}));
  EXPECT_FALSE(atom(m, {AtomKind::NotAx, 0, 0, A}));
  EXPECT_TRUE(atom(m, {AtomKind::MEqual, 0, 0, A}));
  EXPECT_FALSE(atom(m, {AtomKind::NDistinct, 0, 0, A}));
}

TEST(Atoms, ComplementIsTakenPerParameter) {
  const Model m = fixture("barbara_xn").model;
  EXPECT_FALSE(atom(m, {AtomKind::Ax, 0, 0, notA}));
  EXPECT_TRUE(atom(m, {AtomKind::MAx, 0, 0, notA}));
}

TEST(Atoms, OutOfRangeIndividualThrows) {
  EXPECT_THROW(atom(fixture("barbara_xn").model, {AtomKind::Ax, 1, 0, A}), EvalError);
  EXPECT_THROW(atom(fixture("barbara_xn").model, {AtomKind::Ax, 0, 0, Term{'Z'}}), EvalError);
}

TEST(Statements, BarbaraFixtureEvaluation) {
  const Model m = fixture("barbara_xn").model;
  EXPECT_TRUE(H(m, "BaA"));
  EXPECT_TRUE(H(m, "N(CaB)"));
  EXPECT_FALSE(H(m, "N(CaA)"));
  EXPECT_TRUE(H(m, "AaA"));
}

TEST(Statements, CelarentFixtureEvaluation) {
  const Model m = fixture("celarent_xn").model;
  EXPECT_TRUE(H(m, "BeA"));
  EXPECT_TRUE(H(m, "N(CaB)"));
  EXPECT_FALSE(H(m, "N(CeA)"));
  EXPECT_FALSE(H(m, "N(BoA)"));
  EXPECT_TRUE(atom(m, {AtomKind::MEqual, 0, 1, A}));
}

TEST(Statements, EmptyModelMakesUniversalsTrue) {
  const Model m{1, {1}, {}, {{'A', {{0}}}, {'B', {{}}}}};
  EXPECT_TRUE(H(m, "N(AaB)"));
  EXPECT_TRUE(H(m, "N(AeB)"));
  EXPECT_FALSE(H(m, "N(AiB)"));
  EXPECT_FALSE(H(m, "N(AoB)"));
  EXPECT_FALSE(nonempty(m, A));
  EXPECT_TRUE(H(m, "K(AaB)"));
}

TEST(Statements, UnsupportedPairThrows) {
  const Model m = fixture("barbara_xn").model;
  EXPECT_THROW(holds(m, Statement{Relation::i, Modality::Ktwo, A, B}), EvalError);
  EXPECT_THROW(holds(m, Statement{Relation::o, Modality::Ma2, A, B}), EvalError);
  EXPECT_FALSE(supported(Modality::Kamp, Relation::o));
  EXPECT_TRUE(supported(Modality::N, Relation::o));
}

TEST(Diagram, BarocoFixtures) {
  const Model xn = fixture("baroco_xn").model;
  EXPECT_FALSE(diagram_expr(xn, {4, Term{'C'}, B}));
  EXPECT_TRUE(diagram_expr(xn, {5, Term{'C'}, B}));
  const Model nx = fixture("bocardo_nx").model;
  EXPECT_TRUE(diagram_expr(nx, {4, B, A}));
  EXPECT_FALSE(diagram_expr(nx, {3, B, A}));
  EXPECT_THROW(diagram_expr(nx, {7, B, A}), EvalError);
}

TEST(Diagram, NecessaryOIsTwoOrThree) {
  for (const auto& name : fixture_names()) {
    const Model m = fixture(name).model;
    for (char s : {'A', 'B', 'C'}) {
      for (char p : {'A', 'B', 'C'}) {
        const bool alt = diagram_expr(m, {2, Term{s}, Term{p}}) || diagram_expr(m, {3, Term{s}, Term{p}});
        EXPECT_EQ(holds(m, {Relation::o, Modality::N, Term{s}, Term{p}}), alt) << name << s << p;
      }
    }
  }
}

// Hand-built witnesses, each small enough to check by hand.

TEST(Witness, Pos1WithoutPos2) {
  const Model m{2, {1, 1}, {{0, 0}}, {{'A', {{}, {0}}}}};
  EXPECT_TRUE(micro_candidate(m, Polarity::Pos, 1, 0, A));
  EXPECT_FALSE(micro_candidate(m, Polarity::Pos, 2, 0, A));
  EXPECT_TRUE(micro_candidate(m, Polarity::Pos, 3, 0, A));
}

TEST(Witness, Pos2WithoutPos1) {
  const Model m{2, {2, 1}, {{0, 0}, {1, 0}}, {{'A', {{1}, {}}}}};
  EXPECT_FALSE(micro_candidate(m, Polarity::Pos, 1, 0, A));
  EXPECT_TRUE(micro_candidate(m, Polarity::Pos, 2, 0, A));
  EXPECT_TRUE(micro_candidate(m, Polarity::Pos, 3, 0, A));
}

TEST(Witness, NecessaryEIsNotNecessaryAOfComplement) {
  const Model m{2, {1, 1}, {{0, 0}}, {{'A', {{}, {0}}}, {'B', {{0}, {}}}}};
  EXPECT_NE(H(m, "N(BeA)"), H(m, "N(Ba~A)"));
}

TEST(Witness, NecessaryOIsNotNecessaryIOfComplement) {
  const Model m = fixture("celarent_xn").model;
  EXPECT_NE(H(m, "N(BoA)"), H(m, "N(Bi~A)"));
}

TEST(Witness, NoContraposition) {
  const Model m{2, {2, 1}, {{0, 0}, {1, 0}}, {{'A', {{0}, {0}}}, {'B', {{0}, {0}}}}};
  EXPECT_TRUE(H(m, "N(BaA)"));
  EXPECT_FALSE(H(m, "N(~Aa~B)"));
}

TEST(Witness, NecessaryReflexiveInclusionFails) {
  const Model m{2, {1, 1}, {{0, 0}}, {{'A', {{0}, {}}}}};
  EXPECT_TRUE(H(m, "AaA"));
  EXPECT_TRUE(H(m, "~AeA"));
  EXPECT_FALSE(H(m, "N(AaA)"));
  // With a single individual N(Ae~A) is vacuous; a second one sharing x_1 breaks it.
  EXPECT_TRUE(H(m, "N(Ae~A)"));
  const Model two{2, {2, 1}, {{0, 0}, {1, 0}}, {{'A', {{0}, {}}}}};
  EXPECT_TRUE(H(two, "~AeA"));
  EXPECT_FALSE(H(two, "N(Ae~A)"));
}

TEST(Witness, FiveWithoutNecessaryO) {
  const Model m = fixture("celarent_xn").model;
  EXPECT_TRUE(diagram_expr(m, {5, B, A}));
  EXPECT_FALSE(H(m, "N(BoA)"));
}

TEST(Witness, AnalyticInclusionIsWeakerThanNecessity) {
  const Model m{2, {1, 1}, {{0, 0}}, {{'A', {{0}, {}}}, {'B', {{0}, {}}}}};
  EXPECT_TRUE(analytic_a(m, A, B));
  EXPECT_FALSE(H(m, "N(AaB)"));
}

TEST(Witness, Neg3IsNotMonotone) {
  const Model m{2, {1, 1}, {{0, 0}}, {{'A', {{0}, {}}}, {'B', {{0}, {0}}}, {'C', {{0}, {}}}}};
  EXPECT_TRUE(H(m, "BaA"));
  EXPECT_TRUE(micro_candidate(m, Polarity::Neg, 3, 0, A));
  EXPECT_FALSE(micro_candidate(m, Polarity::Neg, 3, 0, B));
}

TEST(Contingency, NegatedFormCoincides) {
  const Model m = fixture("celarent_xn").model;
  for (std::size_t x = 0; x < 2; ++x) {
    for (char c : {'A', 'B', 'C'}) EXPECT_EQ(contingent(m, x, Term{c}), contingent_not(m, x, Term{c}));
  }
  EXPECT_EQ(H(m, "K(CaA)"), H(m, "K(CeA)"));
  EXPECT_EQ(H(m, "Kamp(CaA)"), H(m, "Kamp(CeA)"));
}

TEST(Contingency, CamestresXKCountermodel) {
  const Model m{2, {1, 1}, {{0, 0}}, {{'A', {{0}, {}}}, {'B', {{0}, {0}}}, {'C', {{0}, {}}}}};
  EXPECT_TRUE(H(m, "BaA"));
  EXPECT_TRUE(H(m, "K(CeA)"));
  EXPECT_FALSE(H(m, "Mo3(CaB)"));
}
