#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "seqarg/error.hpp"
#include "seqarg/mcs.hpp"

using namespace seqarg;

namespace {

Formula f(const char* t) { return parse(t); }

FormulaSet set(std::initializer_list<const char*> texts) {
  FormulaSet s;
  for (const char* t : texts) s.insert(parse(t));
  return s;
}

const FormulaSet kFlat = set({"p", "p -> q", "~q"});
const FormulaSet kStrict = set({"s"});
const FormulaSet kAssumptions = set({"p", "q", "~p | ~q", "~p | r", "~q | r"});

}  // namespace

TEST(Mcs, FlatExample) {
  const auto family = mcs(kFlat);
  EXPECT_EQ(family.members, (std::vector<FormulaSet>{set({"p", "p -> q"}), set({"p", "~q"}), set({"p -> q", "~q"})}));
  EXPECT_TRUE(family.intersection().empty());
  EXPECT_FALSE(family.assumptions.has_value());
}

TEST(Mcs, TrivialCases) {
  EXPECT_EQ(mcs(set({"p", "q"})).members, std::vector<FormulaSet>{set({"p", "q"})});
  EXPECT_EQ(mcs({}).members, std::vector<FormulaSet>{FormulaSet{}});
}

TEST(Mcs, WithAssumptions) {
  const auto family = mcs_with_assumptions(kStrict, kAssumptions);
  EXPECT_EQ(family.members,
            (std::vector<FormulaSet>{set({"p", "q", "~p | r", "~q | r"}), set({"p", "~p | ~q", "~p | r", "~q | r"}),
                                     set({"q", "~p | ~q", "~p | r", "~q | r"})}));
  EXPECT_EQ(family.intersection(), set({"~p | r", "~q | r"}));
  EXPECT_EQ(mcs_with_assumptions(kStrict, set({"p", "q"})).members, std::vector<FormulaSet>{set({"p", "q"})});
}

TEST(Mcs, WithAssumptionsRejectsInconsistentStrict) {
  EXPECT_THROW(mcs_with_assumptions(set({"p", "~p"}), set({"q"})), ValidationError);
}

TEST(Mcs, AgreesWithOracle) {
  std::mt19937 rng(23);
  const std::vector<std::string> atoms = {"p", "q", "r"};
  for (int i = 0; i < 60; ++i) {
    FormulaSet s;
    while (s.size() < 1 + static_cast<std::size_t>(i % 5)) s.insert(oracle::random_formula(rng, atoms, 2));
    EXPECT_EQ(mcs(s).members, oracle::maximal_consistent(s)) << s.str();
  }
}

TEST(Conflicts, Cases) {
  EXPECT_EQ(minimal_conflicts(kFlat), std::vector<FormulaSet>{kFlat});
  EXPECT_TRUE(minimal_conflicts(set({"p", "q"})).empty());
  EXPECT_EQ(minimal_conflicts(set({"p", "~p", "q"})), std::vector<FormulaSet>{set({"p", "~p"})});
}

TEST(Conflicts, AllSubsetsChecked) {
  // Every proper subset of the flat set is consistent, the whole set is not.
  for (std::uint64_t m = 0; m < 7; ++m) EXPECT_TRUE(oracle::consistent(oracle::to_vector(kFlat.subset(m))));
  EXPECT_FALSE(oracle::consistent(oracle::to_vector(kFlat)));
}

TEST(Free, Cases) {
  EXPECT_EQ(free(set({"p", "~p", "q"})), set({"q"}));
  EXPECT_TRUE(free(kFlat).empty());
  EXPECT_EQ(free(set({"p", "q"})), set({"p", "q"}));
}

TEST(Cn, Cases) {
  const FormulaSet t = set({"s", "~p | r", "~q | r"});
  EXPECT_TRUE(cn_contains(t, f("s")));
  EXPECT_FALSE(cn_contains(t, f("r")));
  EXPECT_FALSE(oracle::eval(f("r"), {{"p", false}, {"q", false}, {"r", false}, {"s", true}}));
  EXPECT_TRUE(oracle::eval(conjoin(t), {{"p", false}, {"q", false}, {"r", false}, {"s", true}}));
  for (const auto& phi : t) EXPECT_TRUE(cn_contains(t, phi));
}

TEST(McsEntails, FlatCapIsTautology) {
  for (const char* q : {"p", "q | ~q", "p | ~p", "q", "p -> p"}) {
    EXPECT_EQ(mcs_entails(kFlat, f(q), EntailmentMode::Cap), oracle::valid(f(q))) << q;
  }
  for (const auto& phi : kFlat) EXPECT_TRUE(mcs_entails(kFlat, phi, EntailmentMode::Cup));
  EXPECT_TRUE(mcs_entails(kFlat, f("q"), EntailmentMode::Cup));
}

TEST(McsEntails, Assumptive) {
  for (const char* q : {"s", "~p | r", "s & (~q | r)"}) {
    EXPECT_TRUE(mcs_entails_assumptive(kStrict, kAssumptions, f(q), EntailmentMode::Cap)) << q;
    EXPECT_TRUE(mcs_entails_assumptive(kStrict, kAssumptions, f(q), EntailmentMode::WCap)) << q;
  }
  EXPECT_TRUE(mcs_entails_assumptive(kStrict, kAssumptions, f("r"), EntailmentMode::WCap));
  EXPECT_FALSE(mcs_entails_assumptive(kStrict, kAssumptions, f("r"), EntailmentMode::Cap));
  for (const auto& t : oracle::maximal_consistent(kAssumptions, kStrict)) {
    EXPECT_TRUE(oracle::entails(oracle::to_vector(unite(t, kStrict)), f("r")));
  }
  EXPECT_FALSE(oracle::entails(oracle::to_vector(set({"s", "~p | r", "~q | r"})), f("r")));
}

TEST(McsEntails, FamilyEntails) {
  const auto family = mcs_with_assumptions(kStrict, kAssumptions);
  EXPECT_TRUE(family_entails(family, f("s"), EntailmentMode::Cap));
  EXPECT_TRUE(family_entails(family, f("p"), EntailmentMode::Cup));
  EXPECT_FALSE(family_entails(family, f("p"), EntailmentMode::WCap));
}

TEST(McsEntails, ModeChainOnRandomSets) {
  std::mt19937 rng(29);
  const std::vector<std::string> atoms = {"p", "q", "r"};
  for (int i = 0; i < 80; ++i) {
    FormulaSet s;
    while (s.size() < 1 + static_cast<std::size_t>(i % 4)) s.insert(oracle::random_formula(rng, atoms, 2));
    const Formula q = oracle::random_formula(rng, atoms, 2);
    const bool cap = mcs_entails(s, q, EntailmentMode::Cap);
    const bool wcap = mcs_entails(s, q, EntailmentMode::WCap);
    const bool cup = mcs_entails(s, q, EntailmentMode::Cup);
    if (cap) EXPECT_TRUE(wcap);
    if (wcap) EXPECT_TRUE(cup);
  }
}
