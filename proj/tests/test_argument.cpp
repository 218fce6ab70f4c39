#include <gtest/gtest.h>

#include <algorithm>

#include "oracle.hpp"
#include "seqarg/argument.hpp"
#include "seqarg/error.hpp"

using namespace seqarg;

namespace {

Formula f(const char* t) { return parse(t); }

FormulaSet set(std::initializer_list<const char*> texts) {
  FormulaSet s;
  for (const char* t : texts) s.insert(parse(t));
  return s;
}

ArgumentUniverse flat_universe() {
  const FormulaSet s = set({"p", "p -> q", "~q"});
  UniverseOptions options;
  options.require_consistent_strict = false;
  return build_universe(s, {}, unite(s, set({"q", "~p", "q | ~q"})), ClassicalLogic(), options);
}

bool contains(const ArgumentUniverse& u, const AssumptiveArgument& a) { return u.find(a) < u.size(); }

}  // namespace

TEST(Argument, Serialization) {
  EXPECT_EQ(AssumptiveArgument({}, set({"p", "p -> q"}), f("q")).str(), "p, p -> q => q");
  EXPECT_EQ(AssumptiveArgument(set({"p", "~p | ~q"}), {}, f("~q")).str(), "p, ~p | ~q |~ => ~q");
  EXPECT_EQ(AssumptiveArgument(set({"q"}), set({"s"}), f("q & s")).str(), "q |~ s => q & s");
  EXPECT_EQ(AssumptiveArgument({}, {}, f("q | ~q")).str(), "=> q | ~q");
}

TEST(Argument, CheckedRejectsUnderivable) {
  EXPECT_NO_THROW(AssumptiveArgument::checked({}, set({"p"}), f("p | q"), ClassicalLogic()));
  EXPECT_THROW(AssumptiveArgument::checked({}, set({"p"}), f("q"), ClassicalLogic()), PreconditionError);
}

TEST(Universe, FlatExampleArguments) {
  const auto u = flat_universe();
  EXPECT_TRUE(contains(u, AssumptiveArgument({}, set({"p", "p -> q"}), f("q"))));
  EXPECT_TRUE(contains(u, AssumptiveArgument({}, set({"~q"}), f("~q"))));
  EXPECT_TRUE(contains(u, AssumptiveArgument({}, set({"p"}), f("p"))));
  EXPECT_TRUE(contains(u, AssumptiveArgument({}, {}, f("q | ~q"))));
  EXPECT_TRUE(contains(u, AssumptiveArgument({}, set({"p -> q", "~q"}), f("~p"))));
}

TEST(Universe, AssumptiveExampleArguments) {
  const FormulaSet pool = set({"s", "~p", "~q", "r", "~(~p | ~q)", "~(~p | r)", "~(~q | r)"});
  const auto u = build_universe(set({"s"}), set({"p", "q", "~p | ~q", "~p | r", "~q | r"}), pool);
  EXPECT_TRUE(contains(u, AssumptiveArgument({}, set({"s"}), f("s"))));
  EXPECT_TRUE(contains(u, AssumptiveArgument(set({"p", "~p | ~q"}), {}, f("~q"))));
  EXPECT_TRUE(contains(u, AssumptiveArgument(set({"q", "~p | ~q"}), {}, f("~p"))));
  EXPECT_TRUE(contains(u, AssumptiveArgument(set({"p", "q", "~p | r", "~q | r"}), {}, f("r"))));
}

TEST(Universe, MinimalSupportDropsPaddedPremises) {
  UniverseOptions options;
  options.minimal_support = true;
  const auto u = build_universe(set({"s"}), set({"p", "q", "~p | ~q", "~p | r", "~q | r"}), set({"r"}),
                                ClassicalLogic(), options);
  EXPECT_TRUE(contains(u, AssumptiveArgument(set({"p", "~p | r"}), {}, f("r"))));
  EXPECT_FALSE(contains(u, AssumptiveArgument(set({"p", "q", "~p | r", "~q | r"}), {}, f("r"))));
  for (const auto& a : u) {
    for (const auto& b : u) {
      if (a == b || !(a.conclusion() == b.conclusion())) continue;
      EXPECT_FALSE(a.premises().is_subset_of(b.premises()) && a.premises() != b.premises())
          << b.str() << " is padded by " << a.str();
    }
  }
}

TEST(Universe, EmptyPremisesGiveValidConclusionsOnly) {
  const FormulaSet pool = set({"p", "p | ~p", "q -> q", "p & ~p"});
  const auto u = build_universe({}, {}, pool);
  std::vector<std::string> got;
  for (const auto& a : u) {
    EXPECT_TRUE(a.premises().empty());
    got.push_back(a.conclusion().str());
  }
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (std::vector<std::string>{"p | ~p", "q -> q"}));
}

TEST(Universe, FlatUniverseMatchesOracleEnumeration) {
  const FormulaSet s = set({"p", "p -> q", "~q"});
  const FormulaSet pool = unite(s, set({"q", "~p", "q | ~q", "p & q"}));
  const auto u = flat_universe();
  UniverseOptions options;
  options.require_consistent_strict = false;
  const auto full = build_universe(s, {}, pool, ClassicalLogic(), options);
  std::size_t expected = 0;
  for (std::uint64_t m = 0; m < 8; ++m) {
    const FormulaSet gamma = s.subset(m);
    for (const auto& phi : pool) {
      if (!oracle::entails(oracle::to_vector(gamma), phi)) continue;
      ++expected;
      EXPECT_TRUE(contains(full, AssumptiveArgument({}, gamma, phi))) << gamma.str() << " => " << phi.str();
    }
  }
  EXPECT_EQ(full.size(), expected);
  for (const auto& a : full) EXPECT_TRUE(a.assumptions().empty());
}

TEST(Universe, InconsistentStrictRejectedByDefault) {
  EXPECT_THROW(build_universe(set({"p", "~p"}), set({"q"}), set({"q"})), ValidationError);
}

TEST(Universe, PremiseCap) {
  FormulaSet s;
  for (int i = 0; i < 13; ++i) s.insert(Formula::atom("x" + std::to_string(i)));
  EXPECT_THROW(build_universe(s, {}, set({"x0"})), ResourceError);
}

TEST(Subargument, Cases) {
  const AssumptiveArgument c({}, set({"p"}), f("p"));
  const AssumptiveArgument a({}, set({"p", "p -> q"}), f("q"));
  const AssumptiveArgument b({}, set({"~q"}), f("~q"));
  EXPECT_TRUE(is_subargument(c, a));
  EXPECT_FALSE(is_subargument(b, c));
  EXPECT_TRUE(is_subargument(a, a));
}

TEST(Accessors, SetLifted) {
  const AssumptiveArgument a({}, set({"s"}), f("s"));
  const AssumptiveArgument b(set({"p", "~p | ~q"}), {}, f("~q"));
  EXPECT_EQ(ass(b), set({"p", "~p | ~q"}));
  EXPECT_EQ(supp(a), set({"s"}));
  EXPECT_EQ(conc(b), f("~q"));
  const std::vector<AssumptiveArgument> both = {a, b};
  EXPECT_EQ(Ass(both), set({"p", "~p | ~q"}));
  EXPECT_EQ(Supps(both), set({"s"}));
  EXPECT_EQ(Concs(both), set({"s", "~q"}));
}

TEST(Cut, WithAxiom) {
  const AssumptiveArgument a1({}, set({"p"}), f("p"));
  const AssumptiveArgument a2({}, set({"p", "p -> q"}), f("q"));
  EXPECT_EQ(cut(a1, a2, f("p")), a2);
}

TEST(Cut, OnAssumption) {
  const AssumptiveArgument a1(set({"p", "~p | ~q"}), {}, f("~q"));
  const AssumptiveArgument a2(set({"~q"}), set({"s"}), f("~q & s"));
  const auto out = cut(a1, a2, f("~q"));
  EXPECT_EQ(out, AssumptiveArgument(set({"p", "~p | ~q"}), set({"s"}), f("~q & s")));
  EXPECT_TRUE(oracle::entails(oracle::to_vector(out.premises()), out.conclusion()));
}

TEST(Cut, NonMatchingFormula) {
  const AssumptiveArgument a1({}, set({"p"}), f("p"));
  const AssumptiveArgument a2({}, set({"~q"}), f("~q"));
  EXPECT_THROW(cut(a1, a2, f("q")), PreconditionError);
  EXPECT_THROW(cut(a1, a2, f("p")), PreconditionError);
}

TEST(Cut, ResultsAreDerivable) {
  const auto u = build_universe(set({"s"}), set({"p", "q", "~p | ~q", "~p | r", "~q | r"}),
                                set({"s", "~p", "~q", "r", "p", "q", "s & r"}));
  std::size_t cuts = 0;
  for (const auto& a1 : u) {
    for (const auto& a2 : u) {
      if (!a2.premises().contains(a1.conclusion())) continue;
      const auto out = cut(a1, a2, a1.conclusion());
      EXPECT_TRUE(oracle::entails(oracle::to_vector(out.premises()), out.conclusion()));
      ++cuts;
    }
  }
  EXPECT_GT(cuts, 0u);
}

TEST(NegatedConjunctions, Shape) {
  const auto n = negated_conjunctions(set({"p", "q"}));
  EXPECT_EQ(n, set({"~p", "~q", "~(p & q)"}));
}
