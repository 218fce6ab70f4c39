#ifndef SEQARG_ATTACK_HPP
#define SEQARG_ATTACK_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seqarg/argument.hpp"
#include "seqarg/dung.hpp"
#include "seqarg/formula_set.hpp"
#include "seqarg/limits.hpp"

namespace seqarg {

enum class AttackRule { Ucut, DUcut, AtAba };

// "ucut", "ducut", "at-aba"
std::string to_string(AttackRule r);
std::optional<AttackRule> attack_rule_from_string(std::string_view name);

// Maps each assumption to its contrary.
class ContraryMap {
 public:
  ContraryMap() = default;
  // α ↦ ¬α for every α in `assumptions`.
  static ContraryMap negation(const FormulaSet& assumptions);

  void set(const Formula& assumption, const Formula& contrary);
  bool contains(const Formula& assumption) const { return map_.count(assumption) != 0; }
  // Throws ValidationError for an unmapped assumption.
  const Formula& at(const Formula& assumption) const;
  // {contrary(α) : α ∈ assumptions}
  FormulaSet image(const FormulaSet& assumptions) const;
  const std::map<Formula, Formula>& entries() const noexcept { return map_; }

 private:
  std::map<Formula, Formula> map_;
};

struct Attack {
  std::size_t attacker;
  std::size_t attacked;
  AttackRule rule;
  // Attacked part of ass(attacked) ∪ supp(attacked).
  FormulaSet witness;

  friend bool operator==(const Attack&, const Attack&) = default;
};

// Some nonempty Γ2 ⊆ supp(a2) with ⊢ conc(a1) ↔ ¬⋀Γ2; subsets are tried by
// size, then in canonical order. Fires only between arguments whose
// assumption components are empty.
std::optional<FormulaSet> ucut_attacks(const AssumptiveArgument& a1, const AssumptiveArgument& a2,
                                       std::size_t max_atoms = kDefaultMaxAtoms);
// Some γ ∈ supp(a2) with ⊢ conc(a1) ↔ ¬γ; same restriction as Ucut.
std::optional<Formula> ducut_attacks(const AssumptiveArgument& a1, const AssumptiveArgument& a2,
                                     std::size_t max_atoms = kDefaultMaxAtoms);
// Some φ ∈ ass(a2) whose contrary is structurally equal to conc(a1). Throws
// ValidationError if an assumption of a2 has no contrary.
std::optional<Formula> at_aba_attacks(const AssumptiveArgument& a1, const AssumptiveArgument& a2,
                                      const ContraryMap& contrary);

struct Framework {
  ArgumentUniverse universe;
  // Sorted by (attacker, attacked, rule); one entry per firing rule.
  std::vector<Attack> attacks;
  std::vector<AttackRule> rules;
  std::optional<ContraryMap> contrary;
  AttackGraph graph;
};

// Every (i, j) over the universe for which an active rule fires. Throws
// PreconditionError when AtAba is active without a contrariness mapping.
Framework build_framework(ArgumentUniverse universe, std::vector<AttackRule> rules,
                          std::optional<ContraryMap> contrary = std::nullopt,
                          std::size_t max_atoms = kDefaultMaxAtoms);

// `<attacker> --[rule:witness]--> <attacked>`
std::string str(const Framework& f, const Attack& a);

}  // namespace seqarg

#endif  // SEQARG_ATTACK_HPP
