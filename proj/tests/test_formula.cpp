#include <gtest/gtest.h>

#include "seqarg/error.hpp"
#include "seqarg/formula.hpp"
#include "seqarg/formula_set.hpp"

using namespace seqarg;

TEST(Parse, Implication) {
  const Formula f = parse("p -> q");
  EXPECT_EQ(f.connective(), Connective::Implies);
  EXPECT_EQ(f.left(), Formula::atom("p"));
  EXPECT_EQ(f.right(), Formula::atom("q"));
}

TEST(Parse, DisjunctionOfNegations) {
  const Formula f = parse("~p | ~q");
  EXPECT_EQ(f, Formula::disjunction(Formula::negation(Formula::atom("p")), Formula::negation(Formula::atom("q"))));
}

TEST(Parse, ImplicationIsRightAssociative) {
  const Formula p = Formula::atom("p"), q = Formula::atom("q"), r = Formula::atom("r");
  EXPECT_EQ(parse("p -> q -> r"), Formula::implication(p, Formula::implication(q, r)));
  EXPECT_EQ(parse("p <-> q <-> r"), Formula::biconditional(p, Formula::biconditional(q, r)));
}

TEST(Parse, Precedence) {
  const Formula p = Formula::atom("p"), q = Formula::atom("q"), r = Formula::atom("r");
  EXPECT_EQ(parse("~p & q | r"), Formula::disjunction(Formula::conjunction(Formula::negation(p), q), r));
  EXPECT_EQ(parse("p | q -> r"), Formula::implication(Formula::disjunction(p, q), r));
  EXPECT_EQ(parse("p -> q <-> r"), Formula::biconditional(Formula::implication(p, q), r));
  EXPECT_EQ(parse("~~p"), Formula::negation(Formula::negation(p)));
}

TEST(Parse, Errors) {
  for (const char* bad : {"", "p &", "(p", "p q", "-> p", "p ->", "~", "p)", "1p"}) {
    EXPECT_THROW(parse(bad), ParseError) << bad;
  }
}

TEST(Parse, ErrorOffset) {
  try {
    parse("p & & q");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4u);
  }
}

TEST(Serialize, MinimalParentheses) {
  EXPECT_EQ(parse("(p & q) | r").str(), "p & q | r");
  EXPECT_EQ(parse("p & (q | r)").str(), "p & (q | r)");
  EXPECT_EQ(parse("(p -> q) -> r").str(), "(p -> q) -> r");
  EXPECT_EQ(parse("p -> (q -> r)").str(), "p -> q -> r");
  EXPECT_EQ(parse("~(p & q)").str(), "~(p & q)");
  EXPECT_EQ(parse("  p->q ").str(), "p -> q");
}

TEST(Serialize, RoundTrip) {
  for (const char* text : {"p", "~p | ~q", "s & (~q | r)", "(p <-> q) & ~(r -> s)", "~(~p | ~q) -> p <-> q"}) {
    const Formula f = parse(text);
    EXPECT_EQ(parse(f.str()), f) << text;
    EXPECT_EQ(parse(f.str()).str(), f.str()) << text;
  }
}

TEST(Formula, Atoms) {
  EXPECT_EQ(parse("(p -> q) & ~p | r2").atoms(), (std::set<std::string>{"p", "q", "r2"}));
  EXPECT_TRUE(is_valid_atom_name("p_1"));
  EXPECT_FALSE(is_valid_atom_name("1p"));
  EXPECT_FALSE(is_valid_atom_name(""));
}

TEST(Formula, OrderIsBySerialization) {
  EXPECT_LT(parse("p"), parse("q"));
  EXPECT_LT(parse("p -> q"), parse("~q"));
}

TEST(FormulaSet, CanonicalOrderAndDeduplication) {
  FormulaSet s{parse("~q"), parse("p"), parse("p -> q"), parse("p")};
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.str(), "{p, p -> q, ~q}");
  EXPECT_FALSE(s.insert(parse("p")));
  EXPECT_TRUE(s.erase(parse("p")));
  EXPECT_EQ(join(s), "p -> q, ~q");
}

TEST(FormulaSet, Operations) {
  const FormulaSet a{parse("p"), parse("q")}, b{parse("q"), parse("r")};
  EXPECT_EQ(unite(a, b), (FormulaSet{parse("p"), parse("q"), parse("r")}));
  EXPECT_EQ(intersect(a, b), FormulaSet{parse("q")});
  EXPECT_EQ(subtract(a, b), FormulaSet{parse("p")});
  EXPECT_TRUE(FormulaSet{parse("q")}.is_subset_of(a));
  EXPECT_FALSE(b.is_subset_of(a));
  EXPECT_EQ(a.subset(0b10), FormulaSet{parse("q")});
  EXPECT_EQ(FormulaSet{}.str(), "{}");
}
