#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "seqarg/aba.hpp"
#include "seqarg/entailment.hpp"
#include "seqarg/error.hpp"

using namespace seqarg;

namespace {

Formula f(const char* t) { return parse(t); }

FormulaSet set(std::initializer_list<const char*> texts) {
  FormulaSet s;
  for (const char* t : texts) s.insert(parse(t));
  return s;
}

Framework flat_framework() {
  const FormulaSet s = set({"p", "p -> q", "~q"});
  FormulaSet pool = unite(s, negated_conjunctions(s));
  pool.insert(f("q | ~q"));
  UniverseOptions options;
  options.require_consistent_strict = false;
  return build_framework(build_universe(s, {}, pool, ClassicalLogic(), options), {AttackRule::Ucut});
}

AbaFramework aba_example() {
  AbaFramework af;
  af.strict = set({"s"});
  af.assumptions = set({"p", "q", "~p | ~q", "~p | r", "~q | r"});
  af.contrary = ContraryMap::negation(af.assumptions);
  return af;
}

}  // namespace

TEST(EntailmentMode, Names) {
  for (EntailmentMode m : kAllModes) EXPECT_EQ(entailment_mode_from_string(to_string(m)), m);
  EXPECT_FALSE(entailment_mode_from_string("skeptical").has_value());
}

TEST(Evaluate, ModesDiffer) {
  const std::vector<Formula> conclusions = {f("r"), f("r"), f("s")};
  const std::vector<Extension> exts = {{{0, 2}, Semantics::Preferred}, {{1, 2}, Semantics::Preferred}};
  EXPECT_FALSE(evaluate_entailment(exts, conclusions, EntailmentMode::Cap, f("r")).holds);
  EXPECT_TRUE(evaluate_entailment(exts, conclusions, EntailmentMode::WCap, f("r")).holds);
  EXPECT_TRUE(evaluate_entailment(exts, conclusions, EntailmentMode::Cup, f("r")).holds);
  const auto cap = evaluate_entailment(exts, conclusions, EntailmentMode::Cap, f("s"));
  EXPECT_TRUE(cap.holds);
  EXPECT_EQ(cap.witnesses, (std::vector<std::optional<std::size_t>>{2, 2}));
  EXPECT_EQ(cap.extension_count, 2u);
}

TEST(Evaluate, NoExtensions) {
  const std::vector<Formula> conclusions = {f("r")};
  EXPECT_TRUE(evaluate_entailment({}, conclusions, EntailmentMode::Cap, f("r")).holds);
  EXPECT_TRUE(evaluate_entailment({}, conclusions, EntailmentMode::WCap, f("r")).holds);
  EXPECT_FALSE(evaluate_entailment({}, conclusions, EntailmentMode::Cup, f("r")).holds);
}

TEST(Entails, FlatExample) {
  const auto fw = flat_framework();
  Reasoner r(fw);
  for (EntailmentMode m : kAllModes) EXPECT_TRUE(r.query(Semantics::Grounded, m, f("q | ~q")).holds);
  for (Semantics s : {Semantics::Complete, Semantics::Preferred, Semantics::Stable}) {
    for (const char* phi : {"p", "p -> q", "~q"}) {
      EXPECT_FALSE(r.query(s, EntailmentMode::Cap, f(phi)).holds) << to_string(s) << " " << phi;
      EXPECT_TRUE(r.query(s, EntailmentMode::Cup, f(phi)).holds) << to_string(s) << " " << phi;
    }
  }
  EXPECT_TRUE(entails(fw, Semantics::Grounded, EntailmentMode::Cap, f("q | ~q")));
}

TEST(Entails, PoolMiss) {
  const auto fw = flat_framework();
  Reasoner r(fw);
  EXPECT_THROW(r.query(Semantics::Grounded, EntailmentMode::Cap, f("z")), PoolMissError);
}

TEST(Entails, GroundedModesCoincide) {
  const auto fw = flat_framework();
  Reasoner r(fw);
  for (const auto& phi : fw.universe.pool()) {
    const bool cap = r.query(Semantics::Grounded, EntailmentMode::Cap, phi).holds;
    EXPECT_EQ(cap, r.query(Semantics::Grounded, EntailmentMode::WCap, phi).holds) << phi.str();
    EXPECT_EQ(cap, r.query(Semantics::Grounded, EntailmentMode::Cup, phi).holds) << phi.str();
  }
}

TEST(Entails, TranslatedExample) {
  const auto af = aba_example();
  const auto fw = translate_to_sequent(af, default_aba_pool(af, std::vector<Formula>{f("s")}));
  Reasoner r(fw);
  for (Semantics s : kAllSemantics) {
    for (EntailmentMode m : kAllModes) EXPECT_TRUE(r.query(s, m, f("s")).holds);
  }
}

TEST(EntailsAba, Example) {
  const auto af = aba_example();
  for (Semantics s : {Semantics::Complete, Semantics::Preferred, Semantics::Stable}) {
    for (const char* phi : {"p", "q", "~p | ~q"}) {
      EXPECT_TRUE(entails_aba(af, s, EntailmentMode::Cup, f(phi))) << phi;
      EXPECT_FALSE(entails_aba(af, s, EntailmentMode::Cap, f(phi))) << phi;
      EXPECT_FALSE(entails_aba(af, s, EntailmentMode::WCap, f(phi))) << phi;
    }
  }
  for (Semantics s : kAllSemantics) {
    for (EntailmentMode m : kAllModes) EXPECT_TRUE(entails_aba(af, s, m, f("s")));
  }
  // r follows from every maximal assumption set joined with s, from no single
  // shared argument.
  EXPECT_TRUE(entails_aba(af, Semantics::Preferred, EntailmentMode::WCap, f("r")));
  EXPECT_FALSE(entails_aba(af, Semantics::Preferred, EntailmentMode::Cap, f("r")));
}

TEST(Reasoner, CachesExtensions) {
  const auto fw = flat_framework();
  Reasoner r(fw);
  const auto* first = &r.extensions(Semantics::Preferred);
  EXPECT_EQ(first, &r.extensions(Semantics::Preferred));
  EXPECT_EQ(oracle::members_of(r.extensions(Semantics::Stable)),
            oracle::members_of(stable_extensions(fw.graph)));
}

TEST(Entails, ModeChainOnRandomFrameworks) {
  std::mt19937 rng(17);
  for (int i = 0; i < 200; ++i) {
    const auto g = oracle::random_graph(rng, 1 + i % 8, 0.3);
    std::vector<Formula> conclusions;
    for (std::size_t k = 0; k < g.size(); ++k) conclusions.push_back(Formula::atom(rng() % 2 ? "x" : "y"));
    for (Semantics s : kAllSemantics) {
      const auto exts = extensions(g, s);
      for (const char* phi : {"x", "y"}) {
        const bool cap = evaluate_entailment(exts, conclusions, EntailmentMode::Cap, f(phi)).holds;
        const bool wcap = evaluate_entailment(exts, conclusions, EntailmentMode::WCap, f(phi)).holds;
        const bool cup = evaluate_entailment(exts, conclusions, EntailmentMode::Cup, f(phi)).holds;
        if (cap) EXPECT_TRUE(wcap);
        if (wcap && !exts.empty()) EXPECT_TRUE(cup);
      }
    }
  }
}
