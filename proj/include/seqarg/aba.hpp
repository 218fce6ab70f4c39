#ifndef SEQARG_ABA_HPP
#define SEQARG_ABA_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqarg/argument.hpp"
#include "seqarg/attack.hpp"
#include "seqarg/classical.hpp"
#include "seqarg/dung.hpp"
#include "seqarg/entailment.hpp"
#include "seqarg/formula_set.hpp"
#include "seqarg/limits.hpp"

namespace seqarg {

// body_1, ..., body_n -> head (n >= 0)
struct InferenceRule {
  std::vector<Formula> body;
  Formula head;

  std::string str() const;
  friend bool operator==(const InferenceRule&, const InferenceRule&) = default;
};

// CoreLogic: deductions are classical consequence. RuleSystem: forward
// chaining over explicit rules, formulas matched structurally.
enum class DeductionMode { CoreLogic, RuleSystem };

// "core-logic", "rule-system"
std::string to_string(DeductionMode m);

struct AbaFramework {
  DeductionMode mode = DeductionMode::CoreLogic;
  std::vector<InferenceRule> rules;
  FormulaSet strict;
  FormulaSet assumptions;
  ContraryMap contrary;
};

// Throws ValidationError unless A is nonempty, S ∩ A = ∅, every assumption
// has a contrary and S is non-trivial.
void validate(const AbaFramework& af, const Limits& limits = {});

// Forward-chaining deduction. Returns a deduction sequence ending in `goal`
// in which every element is a premise or the head of a rule whose body
// occurs earlier; only the steps the goal depends on are kept.
std::optional<std::vector<Formula>> deduces(std::span<const InferenceRule> rules, std::span<const Formula> premises,
                                            const Formula& goal);
// Dispatches on the framework's mode. In CoreLogic mode the witness is the
// premises followed by the goal.
std::optional<std::vector<Formula>> deduces(const AbaFramework& af, std::span<const Formula> premises,
                                            const Formula& goal, const Limits& limits = {});
bool derives(const AbaFramework& af, std::span<const Formula> premises, const Formula& goal,
             const Limits& limits = {});

// Everything the rules derive from `premises`.
FormulaSet saturate(std::span<const InferenceRule> rules, std::span<const Formula> premises);

// A ∪ Γ ⊢ φ with A′ ⊆ A, Γ ⊆ S and A′ ∪ Γ ⊆-minimal for φ.
struct AbaArgument {
  FormulaSet assumptions;
  FormulaSet strict;
  Formula conclusion;
  std::vector<Formula> deduction;

  // `A1, A2, G1 |- C`
  std::string str() const;
  AssumptiveArgument as_sequent() const { return {assumptions, strict, conclusion}; }
};

// {contrary(α) : α ∈ A} ∪ queries ∪ S ∪ A
FormulaSet default_aba_pool(const AbaFramework& af, std::span<const Formula> queries = {});

// One argument per (A′, Γ, φ ∈ pool) with a deduction, ordered like the
// sequent universe. With `minimal` only ⊆-minimal A′ ∪ Γ are kept.
std::vector<AbaArgument> build_aba_arguments(const AbaFramework& af, const FormulaSet& pool,
                                             const Limits& limits = {}, bool minimal = true);

// Some ψ ∈ ass(a2) whose contrary is conc(a1).
std::optional<Formula> aba_attacks(const AbaArgument& a1, const AbaArgument& a2, const ContraryMap& contrary);

struct AbaArgumentFramework {
  FormulaSet pool;
  std::vector<AbaArgument> arguments;
  AttackGraph graph;
};

AbaArgumentFramework build_aba_framework(const AbaFramework& af, const FormulaSet& pool, const Limits& limits = {},
                                         bool minimal = true);

// Throws PoolMissError if φ is outside the framework's pool.
EntailmentResult query_aba(const AbaArgumentFramework& f, Semantics s, EntailmentMode mode, const Formula& goal,
                           const Limits& limits = {});
// Builds over default_aba_pool(af, {φ}) and answers the query.
bool entails_aba(const AbaFramework& af, Semantics s, EntailmentMode mode, const Formula& goal,
                 const Limits& limits = {});

// CoreLogic: S is consistent. RuleSystem: every formula derivable from S
// shares an atom with S.
bool check_non_triviality(const AbaFramework& af, const Limits& limits = {});

struct ContrapositionReport {
  bool holds = true;
  std::string counterexample;
};

// For every A′ ⊆ A and Γ ⊆ S of size at most `bound`, φ ∈ A′ and ψ ∈ A:
//   A′ ∪ Γ ⊢ contrary(ψ)  iff  (A′ ∖ {φ}) ∪ {ψ} ∪ Γ ⊢ contrary(φ).
ContrapositionReport check_contraposition(const AbaFramework& af, std::size_t bound, const Limits& limits = {});

// No φ ∈ subset such that subset ∪ S deduces contrary(φ).
bool is_aba_consistent(const AbaFramework& af, const FormulaSet& subset, const Limits& limits = {});
// ⊆-maximal consistent subsets of A in the sense above.
std::vector<FormulaSet> aba_mcs(const AbaFramework& af, const Limits& limits = {});
// Modes as mcs_entails_assumptive, with deduction in place of classical
// consequence.
bool aba_mcs_entails(const AbaFramework& af, const std::vector<FormulaSet>& family, const Formula& goal,
                     EntailmentMode mode, const Limits& limits = {});

// Core logic backed by a rule system; "consistent" means non-trivial.
class RuleSystemLogic final : public CoreLogic {
 public:
  explicit RuleSystemLogic(std::vector<InferenceRule> rules) : rules_(std::move(rules)) {}

  bool derives(std::span<const Formula> premises, const Formula& goal) const override;
  bool is_consistent(std::span<const Formula> formulas) const override;
  std::string name() const override { return "rule-system"; }

 private:
  std::vector<InferenceRule> rules_;
};

// The assumptive sequent framework over the same S, A and pool with at-aba
// attacks; `minimal` as for build_aba_arguments.
Framework translate_to_sequent(const AbaFramework& af, const FormulaSet& pool, const Limits& limits = {},
                               bool minimal = true);

}  // namespace seqarg

#endif  // SEQARG_ABA_HPP
