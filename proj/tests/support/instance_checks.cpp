#include "instance_checks.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "seqarg/aba.hpp"
#include "seqarg/argument.hpp"
#include "seqarg/entailment.hpp"

namespace checks {

using seqarg::EntailmentMode;
using seqarg::Formula;
using seqarg::FormulaSet;
using seqarg::Semantics;

namespace {

FormulaSet pool_of(const oracle::AbaInstance& inst) {
  return seqarg::default_aba_pool(inst.framework, inst.queries);
}

std::string row(const std::string& tag, Semantics s, EntailmentMode m, const Formula& q) {
  return tag + " " + seqarg::to_string(s) + " " + seqarg::to_string(m) + " " + q.str();
}

// Oracle MCS entailment: closures checked by valuation enumeration.
bool oracle_mcs_entails(const std::vector<FormulaSet>& family, const FormulaSet& extra, const Formula& q,
                        EntailmentMode m) {
  auto closes = [&](const FormulaSet& t) { return oracle::entails(oracle::to_vector(seqarg::unite(t, extra)), q); };
  switch (m) {
    case EntailmentMode::Cap: {
      FormulaSet common = family.empty() ? FormulaSet{} : family.front();
      for (const auto& t : family) common = seqarg::intersect(common, t);
      return closes(common);
    }
    case EntailmentMode::Cup: return std::any_of(family.begin(), family.end(), closes);
    case EntailmentMode::WCap: return std::all_of(family.begin(), family.end(), closes);
  }
  return false;
}

std::vector<std::size_t> arguments_within(const seqarg::ArgumentUniverse& u, const FormulaSet& t) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].assumptions().is_subset_of(t)) out.push_back(i);
  }
  return out;
}

}  // namespace

std::string describe(const oracle::AbaInstance& inst) {
  return "S = " + inst.framework.strict.str() + ", A = " + inst.framework.assumptions.str();
}

Outcome translation_agreement(const oracle::AbaInstance& inst) {
  Outcome out;
  const FormulaSet pool = pool_of(inst);
  const auto translated = seqarg::translate_to_sequent(inst.framework, pool);
  const auto native = seqarg::build_aba_framework(inst.framework, pool);
  seqarg::Reasoner seq(translated);
  for (Semantics s : seqarg::kAllSemantics) {
    for (EntailmentMode m : seqarg::kAllModes) {
      for (const auto& q : inst.queries) {
        const bool a = seqarg::query_aba(native, s, m, q).holds;
        const bool b = seq.query(s, m, q).holds;
        out.expect(a == b, row("translation", s, m, q) + " aba=" + std::to_string(a) + " seq=" + std::to_string(b) +
                               " on " + describe(inst));
      }
    }
  }
  return out;
}

Outcome mcs_agreement(const oracle::AbaInstance& inst) {
  Outcome out;
  const auto& af = inst.framework;
  const auto translated = seqarg::translate_to_sequent(af, pool_of(inst));
  seqarg::Reasoner seq(translated);
  const auto family = oracle::maximal_consistent(af.assumptions, af.strict);
  for (EntailmentMode m : seqarg::kAllModes) {
    for (const auto& q : inst.queries) {
      const bool prf = seq.query(Semantics::Preferred, m, q).holds;
      const bool stb = seq.query(Semantics::Stable, m, q).holds;
      const bool mcs = oracle_mcs_entails(family, af.strict, q, m);
      out.expect(prf == stb && stb == mcs, "mcs " + seqarg::to_string(m) + " " + q.str() + " prf=" +
                                               std::to_string(prf) + " stb=" + std::to_string(stb) +
                                               " mcs=" + std::to_string(mcs) + " on " + describe(inst));
    }
  }
  return out;
}

Outcome characterisation(const oracle::AbaInstance& inst) {
  Outcome out;
  const auto& af = inst.framework;
  const auto f = seqarg::translate_to_sequent(af, pool_of(inst));
  const auto& u = f.universe;
  const auto family = oracle::maximal_consistent(af.assumptions, af.strict);

  // T is maximal iff every excluded assumption has its contrary argued from T; T ∪ S consistent.
  for (unsigned long mask = 0; mask < (1UL << af.assumptions.size()); ++mask) {
    const FormulaSet t = af.assumptions.subset(mask);
    if (!oracle::consistent(oracle::to_vector(seqarg::unite(t, af.strict)))) continue;
    const bool in_family = std::find(family.begin(), family.end(), t) != family.end();
    bool all_attacked = true;
    for (const auto& phi : seqarg::subtract(af.assumptions, t)) {
      const Formula target = af.contrary.at(phi);
      const bool found = std::any_of(u.begin(), u.end(), [&](const seqarg::AssumptiveArgument& a) {
        return a.conclusion() == target && a.assumptions().is_subset_of(t);
      });
      all_attacked = all_attacked && found;
    }
    out.expect(in_family == all_attacked, "mcs iff attacked T = " + t.str() + " on " + describe(inst));
  }

  // Assumptions of a complete extension are consistent with S.
  for (const auto& e : seqarg::complete_extensions(f.graph)) {
    FormulaSet ass;
    for (std::size_t i : e.members) ass = seqarg::unite(ass, u[i].assumptions());
    out.expect(oracle::consistent(oracle::to_vector(seqarg::unite(ass, af.strict))),
               "consistent Ass(E) = " + ass.str() + " on " + describe(inst));
    out.expect(seqarg::is_aba_consistent(af, ass), "contrary-consistent Ass(E) = " + ass.str() + " on " +
                                                        describe(inst));
  }

  // MCS images are stable; every preferred extension is an MCS image.
  const auto stable = oracle::members_of(seqarg::stable_extensions(f.graph));
  const auto preferred = oracle::members_of(seqarg::preferred_extensions(f.graph));
  std::vector<std::vector<std::size_t>> images;
  for (const auto& t : family) {
    images.push_back(arguments_within(u, t));
    out.expect(std::find(stable.begin(), stable.end(), images.back()) != stable.end(),
               "stable image T = " + t.str() + " on " + describe(inst));
  }
  for (const auto& e : preferred) {
    out.expect(std::find(images.begin(), images.end(), e) != images.end(),
               "preferred image: extension of size " + std::to_string(e.size()) + " on " + describe(inst));
  }
  return out;
}

Outcome bijection(const oracle::AbaInstance& inst) {
  Outcome out;
  const auto& af = inst.framework;
  const FormulaSet pool = pool_of(inst);
  const auto f = seqarg::translate_to_sequent(af, pool);
  const auto native = seqarg::build_aba_arguments(af, pool);

  using Key = std::tuple<FormulaSet, FormulaSet, Formula>;
  std::map<Key, std::size_t> seq_index, aba_index;
  for (std::size_t i = 0; i < f.universe.size(); ++i) {
    const auto& a = f.universe[i];
    seq_index.emplace(Key{a.assumptions(), a.support(), a.conclusion()}, i);
  }
  for (std::size_t i = 0; i < native.size(); ++i) {
    aba_index.emplace(Key{native[i].assumptions, native[i].strict, native[i].conclusion}, i);
  }
  out.expect(seq_index.size() == aba_index.size(), "argument counts differ on " + describe(inst));
  for (const auto& [key, i] : aba_index) {
    out.expect(seq_index.count(key) != 0, "missing translation of " + native[i].str() + " on " + describe(inst));
  }
  if (!out.failures.empty()) return out;

  for (const auto& [k1, i1] : aba_index) {
    for (const auto& [k2, i2] : aba_index) {
      const bool aba = seqarg::aba_attacks(native[i1], native[i2], af.contrary).has_value();
      const bool seq = f.graph.attacks(seq_index.at(k1), seq_index.at(k2));
      out.expect(aba == seq, "attack mismatch " + native[i1].str() + " vs " + native[i2].str() + " on " + describe(inst));
    }
  }
  return out;
}

Outcome flat_mcs_agreement(const FormulaSet& s, const std::vector<Formula>& queries) {
  Outcome out;
  FormulaSet pool = seqarg::unite(s, seqarg::negated_conjunctions(s));
  for (const auto& q : queries) pool.insert(q);
  seqarg::UniverseOptions options;
  options.require_consistent_strict = false;
  const auto f = seqarg::build_framework(seqarg::build_universe(s, {}, pool, seqarg::ClassicalLogic(), options),
                                         {seqarg::AttackRule::Ucut});
  seqarg::Reasoner seq(f);
  const auto family = oracle::maximal_consistent(s);
  for (EntailmentMode m : seqarg::kAllModes) {
    for (const auto& q : queries) {
      const bool prf = seq.query(Semantics::Preferred, m, q).holds;
      const bool stb = seq.query(Semantics::Stable, m, q).holds;
      const bool mcs = oracle_mcs_entails(family, {}, q, m);
      out.expect(prf == stb && stb == mcs, "flat mcs " + seqarg::to_string(m) + " " + q.str() + " prf=" +
                                               std::to_string(prf) + " stb=" + std::to_string(stb) +
                                               " mcs=" + std::to_string(mcs) + " on S = " + s.str());
    }
  }
  return out;
}

}  // namespace checks
