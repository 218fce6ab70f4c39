#include "seqarg/aba.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "seqarg/error.hpp"

namespace seqarg {

std::string InferenceRule::str() const {
  std::string out;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (i > 0) out += ", ";
    out += body[i].str();
  }
  return out + (body.empty() ? "-> " : " -> ") + head.str();
}

std::string to_string(DeductionMode m) { return m == DeductionMode::CoreLogic ? "core-logic" : "rule-system"; }

void validate(const AbaFramework& af, const Limits& limits) {
  if (af.assumptions.empty()) throw ValidationError("an ABA framework needs at least one assumption");
  if (auto both = intersect(af.strict, af.assumptions); !both.empty()) {
    throw ValidationError("strict premises and assumptions overlap: " + both.str());
  }
  for (const auto& a : af.assumptions) af.contrary.at(a);
  if (!check_non_triviality(af, limits)) throw ValidationError("strict premise set is trivial: " + af.strict.str());
}

std::optional<std::vector<Formula>> deduces(std::span<const InferenceRule> rules, std::span<const Formula> premises,
                                            const Formula& goal) {
  std::vector<Formula> order;
  // Producing rule per derived formula; -1 for premises.
  std::unordered_map<Formula, long> source;
  for (const auto& p : premises) {
    if (source.emplace(p, -1).second) order.push_back(p);
  }
  bool changed = true;
  while (!source.count(goal) && changed) {
    changed = false;
    for (std::size_t k = 0; k < rules.size(); ++k) {
      const auto& r = rules[k];
      if (source.count(r.head)) continue;
      const bool ready =
          std::all_of(r.body.begin(), r.body.end(), [&](const Formula& b) { return source.count(b) != 0; });
      if (!ready) continue;
      source.emplace(r.head, static_cast<long>(k));
      order.push_back(r.head);
      changed = true;
    }
  }
  if (!source.count(goal)) return std::nullopt;

  std::unordered_set<Formula> needed;
  std::vector<Formula> stack{goal};
  while (!stack.empty()) {
    Formula f = stack.back();
    stack.pop_back();
    if (!needed.insert(f).second) continue;
    const long k = source.at(f);
    if (k >= 0) {
      for (const auto& b : rules[static_cast<std::size_t>(k)].body) stack.push_back(b);
    }
  }
  std::vector<Formula> witness;
  for (const auto& f : order) {
    if (needed.count(f)) witness.push_back(f);
  }
  return witness;
}

std::optional<std::vector<Formula>> deduces(const AbaFramework& af, std::span<const Formula> premises,
                                            const Formula& goal, const Limits& limits) {
  if (af.mode == DeductionMode::RuleSystem) return deduces(af.rules, premises, goal);
  if (!entails_classical(premises, goal, limits.max_atoms)) return std::nullopt;
  if (std::find(premises.begin(), premises.end(), goal) != premises.end()) return std::vector<Formula>{goal};
  std::vector<Formula> witness(premises.begin(), premises.end());
  witness.push_back(goal);
  return witness;
}

bool derives(const AbaFramework& af, std::span<const Formula> premises, const Formula& goal, const Limits& limits) {
  if (af.mode == DeductionMode::RuleSystem) return deduces(af.rules, premises, goal).has_value();
  return entails_classical(premises, goal, limits.max_atoms);
}

FormulaSet saturate(std::span<const InferenceRule> rules, std::span<const Formula> premises) {
  FormulaSet out{std::vector<Formula>(premises.begin(), premises.end())};
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : rules) {
      if (out.contains(r.head)) continue;
      if (std::all_of(r.body.begin(), r.body.end(), [&](const Formula& b) { return out.contains(b); })) {
        out.insert(r.head);
        changed = true;
      }
    }
  }
  return out;
}

std::string AbaArgument::str() const {
  std::string out = join(assumptions);
  if (!assumptions.empty() && !strict.empty()) out += ", ";
  out += join(strict);
  return out + (out.empty() ? "|- " : " |- ") + conclusion.str();
}

FormulaSet default_aba_pool(const AbaFramework& af, std::span<const Formula> queries) {
  FormulaSet pool = unite(af.contrary.image(af.assumptions), unite(af.strict, af.assumptions));
  for (const auto& q : queries) pool.insert(q);
  return pool;
}

std::vector<AbaArgument> build_aba_arguments(const AbaFramework& af, const FormulaSet& pool, const Limits& limits,
                                             bool minimal) {
  const std::size_t ns = af.strict.size();
  const std::size_t n = ns + af.assumptions.size();
  if (n > limits.max_premises || n > 30) {
    throw ResourceError("|S| + |A| = " + std::to_string(n) + " exceeds the premise cap of " +
                        std::to_string(limits.max_premises));
  }
  std::vector<std::uint32_t> masks(std::size_t{1} << n);
  for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });

  std::vector<AbaArgument> out;
  std::vector<Formula> premises;
  for (const auto& phi : pool) {
    std::vector<std::uint32_t> found;
    for (std::uint32_t m : masks) {
      if (minimal && std::any_of(found.begin(), found.end(), [m](std::uint32_t f) { return (f & ~m) == 0; })) {
        continue;
      }
      premises.clear();
      for (std::size_t i = 0; i < n; ++i) {
        if (m >> i & 1U) premises.push_back(i < ns ? af.strict[i] : af.assumptions[i - ns]);
      }
      auto witness = deduces(af, premises, phi, limits);
      if (!witness) continue;
      found.push_back(m);
      out.push_back({af.assumptions.subset(m >> ns), af.strict.subset(m & ((std::uint32_t{1} << ns) - 1)), phi,
                     std::move(*witness)});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const AbaArgument& a, const AbaArgument& b) { return a.as_sequent() < b.as_sequent(); });
  return out;
}

std::optional<Formula> aba_attacks(const AbaArgument& a1, const AbaArgument& a2, const ContraryMap& contrary) {
  for (const auto& psi : a2.assumptions) {
    if (contrary.at(psi) == a1.conclusion) return psi;
  }
  return std::nullopt;
}

AbaArgumentFramework build_aba_framework(const AbaFramework& af, const FormulaSet& pool, const Limits& limits,
                                         bool minimal) {
  auto arguments = build_aba_arguments(af, pool, limits, minimal);
  AbaArgumentFramework f{pool, std::move(arguments), AttackGraph(0)};
  f.graph = AttackGraph(f.arguments.size());
  for (std::size_t i = 0; i < f.arguments.size(); ++i) {
    for (std::size_t j = 0; j < f.arguments.size(); ++j) {
      if (aba_attacks(f.arguments[i], f.arguments[j], af.contrary)) f.graph.add_attack(i, j);
    }
  }
  return f;
}

EntailmentResult query_aba(const AbaArgumentFramework& f, Semantics s, EntailmentMode mode, const Formula& goal,
                           const Limits& limits) {
  if (!f.pool.contains(goal)) throw PoolMissError("query " + goal.str() + " is not in the conclusion pool");
  std::vector<Formula> conclusions;
  for (const auto& a : f.arguments) conclusions.push_back(a.conclusion);
  return evaluate_entailment(extensions(f.graph, s, limits), conclusions, mode, goal);
}

bool entails_aba(const AbaFramework& af, Semantics s, EntailmentMode mode, const Formula& goal,
                 const Limits& limits) {
  const Formula queries[] = {goal};
  return query_aba(build_aba_framework(af, default_aba_pool(af, queries), limits), s, mode, goal, limits).holds;
}

namespace {

bool shares_atom(const std::set<std::string>& atoms, const Formula& f) {
  for (const auto& a : f.atoms()) {
    if (atoms.count(a)) return true;
  }
  return false;
}

bool non_trivial(std::span<const InferenceRule> rules, std::span<const Formula> s) {
  std::set<std::string> atoms;
  for (const auto& f : s) f.collect_atoms(atoms);
  for (const auto& f : saturate(rules, s)) {
    if (!shares_atom(atoms, f)) return false;
  }
  return true;
}

}  // namespace

bool check_non_triviality(const AbaFramework& af, const Limits& limits) {
  if (af.mode == DeductionMode::CoreLogic) return is_consistent(af.strict, limits.max_atoms);
  return non_trivial(af.rules, af.strict.items());
}

ContrapositionReport check_contraposition(const AbaFramework& af, std::size_t bound, const Limits& limits) {
  const FormulaSet& a = af.assumptions;
  const FormulaSet& s = af.strict;
  if (a.size() > 20 || s.size() > 20) throw ResourceError("contraposition check over too many premises");
  std::vector<Formula> left, right;
  for (std::uint32_t am = 0; am < (std::uint32_t{1} << a.size()); ++am) {
    if (static_cast<std::size_t>(std::popcount(am)) > bound) continue;
    const FormulaSet sub = a.subset(am);
    for (std::uint32_t gm = 0; gm < (std::uint32_t{1} << s.size()); ++gm) {
      if (static_cast<std::size_t>(std::popcount(gm)) > bound) continue;
      const FormulaSet gamma = s.subset(gm);
      left.assign(sub.begin(), sub.end());
      left.insert(left.end(), gamma.begin(), gamma.end());
      for (const auto& phi : sub) {
        for (const auto& psi : a) {
          FormulaSet r = sub;
          r.erase(phi);
          r.insert(psi);
          right.assign(r.begin(), r.end());
          right.insert(right.end(), gamma.begin(), gamma.end());
          const bool l = derives(af, left, af.contrary.at(psi), limits);
          const bool rr = derives(af, right, af.contrary.at(phi), limits);
          if (l != rr) {
            ContrapositionReport rep;
            rep.holds = false;
            rep.counterexample = "A' = " + sub.str() + ", G = " + gamma.str() + ", phi = " + phi.str() +
                                 ", psi = " + psi.str() + ": " + (l ? "" : "not ") + "A' u G |- " +
                                 af.contrary.at(psi).str() + " but " + (rr ? "" : "not ") +
                                 "(A' - {phi}) u {psi} u G |- " + af.contrary.at(phi).str();
            return rep;
          }
        }
      }
    }
  }
  return {};
}

bool is_aba_consistent(const AbaFramework& af, const FormulaSet& subset, const Limits& limits) {
  const FormulaSet premises = unite(subset, af.strict);
  for (const auto& phi : subset) {
    if (derives(af, premises.items(), af.contrary.at(phi), limits)) return false;
  }
  return true;
}

std::vector<FormulaSet> aba_mcs(const AbaFramework& af, const Limits& limits) {
  const FormulaSet& a = af.assumptions;
  if (a.size() > limits.max_premises || a.size() > 30) {
    throw ResourceError(std::to_string(a.size()) + " assumptions exceed the premise cap of " +
                        std::to_string(limits.max_premises));
  }
  std::vector<std::uint32_t> masks(std::size_t{1} << a.size());
  for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t x, std::uint32_t y) { return std::popcount(x) > std::popcount(y); });
  std::vector<std::uint32_t> found;
  for (std::uint32_t m : masks) {
    if (std::any_of(found.begin(), found.end(), [m](std::uint32_t f) { return (m & ~f) == 0; })) continue;
    if (is_aba_consistent(af, a.subset(m), limits)) found.push_back(m);
  }
  std::vector<FormulaSet> out;
  for (std::uint32_t m : found) out.push_back(a.subset(m));
  std::sort(out.begin(), out.end());
  return out;
}

bool aba_mcs_entails(const AbaFramework& af, const std::vector<FormulaSet>& family, const Formula& goal,
                     EntailmentMode mode, const Limits& limits) {
  auto holds = [&](const FormulaSet& t) { return derives(af, unite(t, af.strict).items(), goal, limits); };
  switch (mode) {
    case EntailmentMode::Cap: {
      if (family.empty()) return holds({});
      FormulaSet common = family.front();
      for (const auto& t : family) common = intersect(common, t);
      return holds(common);
    }
    case EntailmentMode::Cup: return std::any_of(family.begin(), family.end(), holds);
    case EntailmentMode::WCap: return std::all_of(family.begin(), family.end(), holds);
  }
  return false;
}

bool RuleSystemLogic::derives(std::span<const Formula> premises, const Formula& goal) const {
  return deduces(rules_, premises, goal).has_value();
}

bool RuleSystemLogic::is_consistent(std::span<const Formula> formulas) const { return non_trivial(rules_, formulas); }

Framework translate_to_sequent(const AbaFramework& af, const FormulaSet& pool, const Limits& limits, bool minimal) {
  UniverseOptions options;
  options.minimal_support = minimal;
  options.limits = limits;
  ArgumentUniverse universe;
  if (af.mode == DeductionMode::CoreLogic) {
    universe = build_universe(af.strict, af.assumptions, pool, ClassicalLogic(limits.max_atoms), options);
  } else {
    universe = build_universe(af.strict, af.assumptions, pool, RuleSystemLogic(af.rules), options);
  }
  return build_framework(std::move(universe), {AttackRule::AtAba}, af.contrary, limits.max_atoms);
}

}  // namespace seqarg
