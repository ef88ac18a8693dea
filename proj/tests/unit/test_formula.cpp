#include <gtest/gtest.h>

#include <set>

#include "boxdot/formula.hpp"
#include "boxdot/parser.hpp"
#include "boxdot/prover.hpp"
#include "oracles.hpp"

namespace boxdot {
namespace {

Formula P(std::string_view text) { return parse_formula(text); }
std::string S(const Formula& f) { return to_string(f); }

std::vector<std::string> strings(const std::vector<Formula>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(S(f));
  return out;
}

// --- parse -----------------------------------------------------------------

TEST(Parse, ImplicationOfBox) {
  EXPECT_EQ(P("[]p -> p"), implies(box(var("p")), var("p")));
}

TEST(Parse, DottedBoxSugarExpands) {
  EXPECT_EQ(P("[.]q"), conj(var("q"), box(var("q"))));
}

TEST(Parse, ExampleFormulaStructure) {
  const Formula expected =
      implies(conj(var("p"), box(implies(box(var("p")), var("p")))), box(var("p")));
  EXPECT_EQ(P("p & []([]p -> p) -> []p"), expected);
}

TEST(Parse, Precedence) {
  EXPECT_EQ(P("p | q & r"), disj(var("p"), conj(var("q"), var("r"))));
  EXPECT_EQ(P("p -> q -> r"), implies(var("p"), implies(var("q"), var("r"))));
  EXPECT_EQ(P("p <-> q -> r"), iff(var("p"), implies(var("q"), var("r"))));
  EXPECT_EQ(P("p & q & r"), conj(conj(var("p"), var("q")), var("r")));
  EXPECT_EQ(P("~[]<>p"), neg(box(dia(var("p")))));
  EXPECT_EQ(P("true -> false"), implies(top(), bottom()));
}

TEST(Parse, UnicodeSpellings) {
  EXPECT_EQ(P("□p → p"), P("[]p -> p"));
  EXPECT_EQ(P("⊡p ∧ ◇q ∨ ¬r"), P("[.]p & <>q | ~r"));
  EXPECT_EQ(P("⊤ ↔ ⊥"), P("true <-> false"));
}

TEST(Parse, ErrorsCarryByteOffset) {
  try {
    (void)P("p & ");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4u);
  }
  try {
    (void)P("p q");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
  EXPECT_THROW((void)P(""), ParseError);
  EXPECT_THROW((void)P("(p"), ParseError);
  EXPECT_THROW((void)P("P"), ParseError);
  EXPECT_THROW((void)P("[p"), ParseError);
  EXPECT_THROW((void)P("p -> "), ParseError);
}

// --- print -----------------------------------------------------------------

TEST(Print, Examples) {
  EXPECT_EQ(S(box(var("p"))), "[]p");
  EXPECT_EQ(S(conj(var("p"), box(var("p")))), "p & []p");
  EXPECT_EQ(S(implies(box(var("p")), box(box(var("p"))))), "[]p -> [][]p");
}

TEST(Print, MinimalParentheses) {
  EXPECT_EQ(S(implies(implies(var("p"), var("q")), var("r"))), "(p -> q) -> r");
  EXPECT_EQ(S(implies(var("p"), implies(var("q"), var("r")))), "p -> q -> r");
  EXPECT_EQ(S(conj(var("p"), conj(var("q"), var("r")))), "p & (q & r)");
  EXPECT_EQ(S(conj(conj(var("p"), var("q")), var("r"))), "p & q & r");
  EXPECT_EQ(S(neg(conj(var("p"), var("q")))), "~(p & q)");
  EXPECT_EQ(S(box(neg(var("p")))), "[]~p");
}

TEST(Print, RoundTripOnRandomFormulas) {
  testing::Rng rng(101);
  testing::FormulaShape shape;
  shape.max_connectives = 20;
  for (int i = 0; i < 2000; ++i) {
    const Formula f = testing::random_formula(rng, shape);
    ASSERT_EQ(P(S(f)), f) << S(f);
  }
}

// --- boxdot translation ----------------------------------------------------

TEST(Translate, Examples) {
  EXPECT_EQ(S(boxdot_translate(P("[]p"))), "p & []p");
  EXPECT_EQ(boxdot_translate(P("p -> q")), P("p -> q"));
  EXPECT_EQ(boxdot_translate(P("[][]p")), P("(p & []p) & [](p & []p)"));
}

TEST(Translate, DiamondViaDualBox) {
  // <>p is read as ~[]~p before translating.
  EXPECT_EQ(boxdot_translate(P("<>p")), P("~(~p & []~p)"));
}

TEST(Translate, HomomorphicOnBooleans) {
  testing::Rng rng(202);
  testing::FormulaShape shape;
  for (int i = 0; i < 500; ++i) {
    const Formula f = testing::random_formula(rng, shape);
    const Formula t = boxdot_translate(f);
    switch (f.connective()) {
      case Connective::Not: ASSERT_EQ(t, neg(boxdot_translate(f.arg()))); break;
      case Connective::And:
      case Connective::Or:
      case Connective::Imp:
      case Connective::Iff:
        ASSERT_EQ(t, Formula::binary(f.connective(), boxdot_translate(f.lhs()),
                                     boxdot_translate(f.rhs())));
        break;
      default: break;
    }
    ASSERT_EQ(t == f, is_modal_free(f)) << S(f);
    ASSERT_EQ(modal_degree(t), modal_degree(f)) << S(f);
  }
}

TEST(DottedBox, Examples) {
  EXPECT_EQ(S(dotted_box(var("p"))), "p & []p");
  EXPECT_EQ(S(dotted_box(bottom())), "false & []false");
  EXPECT_EQ(S(dotted_box(P("[]p"))), "[]p & [][]p");
}

// --- subformulas, degree ---------------------------------------------------

TEST(Subformulas, Examples) {
  EXPECT_EQ(strings(subformulas(P("[]p"))), (std::vector<std::string>{"[]p", "p"}));
  EXPECT_EQ(strings(subformulas(P("[]p -> [][]p"))),
            (std::vector<std::string>{"[]p -> [][]p", "[]p", "p", "[][]p"}));
  EXPECT_EQ(strings(subformulas(P("p"))), (std::vector<std::string>{"p"}));
  EXPECT_EQ(strings(subformulas(P("<>p"))), (std::vector<std::string>{"<>p", "p"}));
}

TEST(ModalDegree, Examples) {
  EXPECT_EQ(modal_degree(P("p & q")), 0u);
  EXPECT_EQ(modal_degree(P("[]p -> [][]p")), 2u);
  EXPECT_EQ(modal_degree(boxdot_translate(P("[][]p"))), 2u);
}

// Structural-induction oracle written independently of modal_degree.
std::size_t degree_oracle(const Formula& f) {
  std::size_t best = 0;
  const std::size_t here = (f.is(Connective::Box) || f.is(Connective::Dia)) ? 1 : 0;
  if (f.is(Connective::Not) || here == 1) best = degree_oracle(f.arg());
  if (f.is(Connective::And) || f.is(Connective::Or) || f.is(Connective::Imp) ||
      f.is(Connective::Iff)) {
    best = std::max(degree_oracle(f.lhs()), degree_oracle(f.rhs()));
  }
  return best + here;
}

TEST(ModalDegree, TranslationPreservesDegreeOn200Formulas) {
  testing::Rng rng(303);
  testing::FormulaShape shape;
  for (int i = 0; i < 200; ++i) {
    const Formula f = testing::random_formula(rng, shape);
    ASSERT_EQ(degree_oracle(boxdot_translate(f)), degree_oracle(f)) << S(f);
    ASSERT_EQ(modal_degree(f), degree_oracle(f));
  }
}

// --- box_n, box_le_n -------------------------------------------------------

TEST(BoxN, Examples) {
  EXPECT_EQ(box_n(0, var("p")), var("p"));
  EXPECT_EQ(S(box_n(3, var("p"))), "[][][]p");
  EXPECT_EQ(S(box_le_n(1, var("p"))), "p & []p");
  EXPECT_EQ(box_le_n(1, var("p")), dotted_box(var("p")));
  EXPECT_EQ(box_le_n(2, var("p")), P("p & ([]p & [][]p)"));
  EXPECT_EQ(box_le_n(0, var("p")), var("p"));
}

TEST(BoxN, DottedIterationMatchesBoxLeNInK) {
  testing::Rng rng(404);
  testing::FormulaShape shape;
  shape.max_degree = 2;
  shape.max_connectives = 5;
  shape.variables = {"p", "q"};
  for (int i = 0; i < 40; ++i) {
    const Formula f = testing::random_formula(rng, shape);
    Formula iterated = f;
    for (std::size_t n = 0; n <= 3; ++n) {
      const ProofResult r = prove(LogicId::K, iff(iterated, box_le_n(n, f)));
      ASSERT_EQ(r.verdict, Verdict::proved) << "n=" << n << " f=" << S(f);
      iterated = dotted_box(iterated);
    }
  }
}

// --- X, chi, fresh variable ------------------------------------------------

TEST(BuildX, Examples) {
  EXPECT_EQ(strings(build_X(P("[]p"), "q")),
            (std::vector<std::string>{"[](q -> p) -> p", "[](~q -> p) -> p"}));
  EXPECT_TRUE(build_X(P("p"), "q").empty());
  EXPECT_EQ(strings(build_X(P("[]p -> [][]p"), "q")),
            (std::vector<std::string>{"[](q -> p) -> p", "[](~q -> p) -> p",
                                      "[](q -> []p) -> []p", "[](~q -> []p) -> []p"}));
}

TEST(BuildX, RejectsOccurringVariable) {
  EXPECT_THROW((void)build_X(P("[]q"), "q"), std::invalid_argument);
}

TEST(BuildX, DiamondContributesNegatedOperand) {
  EXPECT_EQ(strings(build_X(P("<>p"), "q")),
            (std::vector<std::string>{"[](q -> ~p) -> ~p", "[](~q -> ~p) -> ~p"}));
}

TEST(BuildX, SizeIsTwiceBoxedSubformulasAndQIsFresh) {
  testing::Rng rng(505);
  testing::FormulaShape shape;
  shape.variables = {"p", "r"};
  for (int i = 0; i < 300; ++i) {
    const Formula phi = testing::random_formula(rng, shape);
    std::set<Formula> boxed;
    for (const Formula& g : subformulas(phi)) {
      if (g.is(Connective::Box)) boxed.insert(g.arg());
      if (g.is(Connective::Dia)) boxed.insert(neg(g.arg()));
    }
    const std::string q = fresh_variable(std::span<const Formula>(&phi, 1));
    const auto X = build_X(phi, q);
    ASSERT_EQ(X.size(), 2 * boxed.size()) << S(phi);
    ASSERT_FALSE(occurs(q, phi));
    for (const Formula& x : X) ASSERT_TRUE(occurs(q, x));
  }
}

TEST(BuildChi, Examples) {
  EXPECT_EQ(S(build_chi(P("p"), {}, 0)), "true -> p");
  const auto X1 = build_X(P("[]p"), "q");
  EXPECT_EQ(build_chi(P("[]p"), X1, 1),
            P("[](([](q -> p) -> p) & ([](~q -> p) -> p)) -> []p"));
  const auto X2 = build_X(P("[]p -> [][]p"), "q");
  EXPECT_EQ(build_chi(P("[]p -> [][]p"), X2, 2),
            implies(box(box(conjunction(X2))), P("[]p -> [][]p")));
}

TEST(FreshVariable, Examples) {
  auto fresh = [](std::initializer_list<const char*> texts) {
    std::vector<Formula> fs;
    for (const char* t : texts) fs.push_back(P(t));
    return fresh_variable(fs);
  };
  EXPECT_EQ(fresh({"[]p"}), "q");
  EXPECT_EQ(fresh({"q -> p"}), "q1");
  EXPECT_EQ(fresh({"q & q1"}), "q2");
  EXPECT_EQ(fresh({}), "q");
}

TEST(Conjunction, EmptyIsTrueAndRightNested) {
  EXPECT_EQ(conjunction({}), top());
  const std::vector<Formula> xs{var("a"), var("b"), var("c")};
  EXPECT_EQ(conjunction(xs), P("a & (b & c)"));
}

TEST(Formula, StructuralEqualityAndVariables) {
  EXPECT_EQ(P("[]p & q"), P("([]p) & (q)"));
  EXPECT_NE(P("[]p"), P("<>p"));
  EXPECT_EQ(variables(P("p & [](q1 -> p)")), (std::set<std::string, std::less<>>{"p", "q1"}));
  EXPECT_THROW((void)var("Bad"), std::invalid_argument);
  EXPECT_THROW((void)var("true"), std::invalid_argument);
}

}  // namespace
}  // namespace boxdot
