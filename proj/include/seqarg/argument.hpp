#ifndef SEQARG_ARGUMENT_HPP
#define SEQARG_ARGUMENT_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "seqarg/classical.hpp"
#include "seqarg/formula_set.hpp"
#include "seqarg/limits.hpp"

namespace seqarg {

// An assumptive sequent  A ⊣ Γ ⇒ φ : defeasible assumptions A, strict
// support Γ and a single conclusion φ. Plain sequent-based arguments are the
// A = ∅ case.
class AssumptiveArgument {
 public:
  AssumptiveArgument(FormulaSet assumptions, FormulaSet support, Formula conclusion)
      : assumptions_(std::move(assumptions)), support_(std::move(support)), conclusion_(std::move(conclusion)) {}

  // Builds the argument and checks that A ∪ Γ derives φ in `logic`; throws
  // PreconditionError otherwise.
  static AssumptiveArgument checked(FormulaSet assumptions, FormulaSet support, Formula conclusion,
                                    const CoreLogic& logic);

  const FormulaSet& assumptions() const noexcept { return assumptions_; }
  const FormulaSet& support() const noexcept { return support_; }
  const Formula& conclusion() const noexcept { return conclusion_; }
  // A ∪ Γ
  FormulaSet premises() const { return unite(assumptions_, support_); }

  // `A1, A2 |~ G1, G2 => C`; empty segments are omitted.
  std::string str() const;

  friend bool operator==(const AssumptiveArgument&, const AssumptiveArgument&) = default;
  friend std::strong_ordering operator<=>(const AssumptiveArgument& a, const AssumptiveArgument& b);

 private:
  FormulaSet assumptions_;
  FormulaSet support_;
  Formula conclusion_;
};

inline const FormulaSet& ass(const AssumptiveArgument& a) { return a.assumptions(); }
inline const FormulaSet& supp(const AssumptiveArgument& a) { return a.support(); }
inline const Formula& conc(const AssumptiveArgument& a) { return a.conclusion(); }

// Set-lifted accessors over a collection of arguments.
FormulaSet Ass(std::span<const AssumptiveArgument> args);
FormulaSet Supps(std::span<const AssumptiveArgument> args);
FormulaSet Concs(std::span<const AssumptiveArgument> args);

// a is a sub-argument of b: ass(a) ⊆ ass(b) and supp(a) ⊆ supp(b).
bool is_subargument(const AssumptiveArgument& a, const AssumptiveArgument& b);

// Cut on φ = conc(a1). If φ ∈ supp(a2) it is cut from the support,
// otherwise from the assumptions of a2. The result is checked for
// derivability in `logic`. Throws PreconditionError when conc(a1) != φ or φ
// occurs in neither premise zone of a2.
AssumptiveArgument cut(const AssumptiveArgument& a1, const AssumptiveArgument& a2, const Formula& phi,
                       const CoreLogic& logic = ClassicalLogic());

struct UniverseOptions {
  // Keep only arguments whose premise set A′ ∪ Γ is ⊆-minimal for their
  // conclusion.
  bool minimal_support = false;
  // Flat frameworks reason from possibly inconsistent premises; assumptive
  // ones require a consistent strict set.
  bool require_consistent_strict = true;
  Limits limits;
};

// Finite slice of Arg_L(S, A): every derivable A′ ⊣ Γ ⇒ φ with Γ ⊆ S, A′ ⊆ A
// and φ in the conclusion pool.
class ArgumentUniverse {
 public:
  const FormulaSet& strict() const noexcept { return strict_; }
  const FormulaSet& assumptions() const noexcept { return assumptions_; }
  const FormulaSet& pool() const noexcept { return pool_; }
  bool minimal_support() const noexcept { return minimal_support_; }

  std::size_t size() const noexcept { return arguments_.size(); }
  bool empty() const noexcept { return arguments_.empty(); }
  const AssumptiveArgument& operator[](std::size_t i) const { return arguments_[i]; }
  std::span<const AssumptiveArgument> arguments() const noexcept { return arguments_; }
  auto begin() const noexcept { return arguments_.begin(); }
  auto end() const noexcept { return arguments_.end(); }

  // Index of `a`, or size() if absent.
  std::size_t find(const AssumptiveArgument& a) const;

  // Wraps an explicit argument list (kept in the given order); used for
  // hand-built frameworks and permutation tests.
  static ArgumentUniverse from_arguments(FormulaSet strict, FormulaSet assumptions, FormulaSet pool,
                                         std::vector<AssumptiveArgument> arguments);

 private:
  friend ArgumentUniverse build_universe(const FormulaSet&, const FormulaSet&, const FormulaSet&, const CoreLogic&,
                                         const UniverseOptions&);

  FormulaSet strict_;
  FormulaSet assumptions_;
  FormulaSet pool_;
  bool minimal_support_ = false;
  std::vector<AssumptiveArgument> arguments_;
};

// Enumerates every (A′ ⊆ A, Γ ⊆ S, φ ∈ pool) with A′ ∪ Γ ⊢ φ. Arguments are
// ordered by premise count, then by serialization.
//
// Throws ValidationError if S ∩ A ≠ ∅ or, when the options require it, S is
// inconsistent in `logic`; and
// ResourceError if |S| + |A| exceeds limits.max_premises.
ArgumentUniverse build_universe(const FormulaSet& strict, const FormulaSet& assumptions, const FormulaSet& pool,
                                const CoreLogic& logic = ClassicalLogic(), const UniverseOptions& options = {});

// {¬⋀Γ′ : ∅ ≠ Γ′ ⊆ premises}, the conclusions undercut attacks need.
FormulaSet negated_conjunctions(const FormulaSet& premises, std::size_t max_premises = kDefaultMaxPremises);

}  // namespace seqarg

#endif  // SEQARG_ARGUMENT_HPP
