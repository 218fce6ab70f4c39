#ifndef SEQARG_CLASSICAL_HPP
#define SEQARG_CLASSICAL_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "seqarg/formula.hpp"
#include "seqarg/formula_set.hpp"
#include "seqarg/limits.hpp"

namespace seqarg {

using Valuation = std::map<std::string, bool>;

// Truth value of `f` under `v`; throws PreconditionError if an atom of `f` is
// not in the domain of `v`.
bool evaluate(const Formula& f, const Valuation& v);

// Truth tables over a fixed list of atoms, evaluated 64 valuations per word.
// Row r assigns true to atom k iff bit k of r is set.
class TruthTable {
 public:
  // Throws ResourceError when there are more than `max_atoms` atoms.
  explicit TruthTable(std::vector<std::string> atoms, std::size_t max_atoms = kDefaultMaxAtoms);

  // Builds a table over the joint atoms of the given formulas.
  static TruthTable over(std::span<const Formula> formulas, std::size_t max_atoms = kDefaultMaxAtoms);

  using Column = std::vector<std::uint64_t>;

  // Rows on which `f` is true. Every atom of `f` must be in the table.
  Column models(const Formula& f) const;
  Column all_rows() const;

  static bool is_empty(const Column& c);
  // a ⊆ b, row-wise
  static bool is_subset(const Column& a, const Column& b);
  static void intersect_into(Column& acc, const Column& c);

  std::size_t atom_count() const noexcept { return atoms_.size(); }

 private:
  Column atom_column(std::size_t index) const;

  std::vector<std::string> atoms_;
  std::size_t words_;
  std::uint64_t last_mask_;
};

// premises ⊢ goal: every valuation satisfying all premises satisfies goal.
bool entails_classical(std::span<const Formula> premises, const Formula& goal,
                       std::size_t max_atoms = kDefaultMaxAtoms);
bool entails_classical(const FormulaSet& premises, const Formula& goal, std::size_t max_atoms = kDefaultMaxAtoms);

bool is_valid(const Formula& f, std::size_t max_atoms = kDefaultMaxAtoms);

// Some valuation satisfies every member.
bool is_consistent(std::span<const Formula> formulas, std::size_t max_atoms = kDefaultMaxAtoms);
bool is_consistent(const FormulaSet& formulas, std::size_t max_atoms = kDefaultMaxAtoms);

// Right-nested conjunction of the members in canonical order; a singleton
// yields its member. Throws PreconditionError on the empty set.
Formula conjoin(const FormulaSet& formulas);

// The deductive base from which arguments are built. Implementations must be
// Tarskian (reflexive, transitive, monotone); the universe builder relies on
// monotonicity to skip supersets of deriving premise sets.
class CoreLogic {
 public:
  virtual ~CoreLogic() = default;
  virtual bool derives(std::span<const Formula> premises, const Formula& goal) const = 0;
  // Consistency of a strict premise set (a precondition of universe
  // construction).
  virtual bool is_consistent(std::span<const Formula> formulas) const = 0;
  virtual std::string name() const = 0;
};

class ClassicalLogic final : public CoreLogic {
 public:
  explicit ClassicalLogic(std::size_t max_atoms = kDefaultMaxAtoms) : max_atoms_(max_atoms) {}

  bool derives(std::span<const Formula> premises, const Formula& goal) const override {
    return entails_classical(premises, goal, max_atoms_);
  }
  bool is_consistent(std::span<const Formula> formulas) const override {
    return seqarg::is_consistent(formulas, max_atoms_);
  }
  std::string name() const override { return "classical"; }

 private:
  std::size_t max_atoms_;
};

}  // namespace seqarg

#endif  // SEQARG_CLASSICAL_HPP
