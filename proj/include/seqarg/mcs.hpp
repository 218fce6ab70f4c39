#ifndef SEQARG_MCS_HPP
#define SEQARG_MCS_HPP

#include <optional>
#include <vector>

#include "seqarg/entailment.hpp"
#include "seqarg/formula_set.hpp"
#include "seqarg/limits.hpp"

namespace seqarg {

struct McsFamily {
  FormulaSet strict;
  // Set for MCS(S, A); members are then subsets of A consistent with S.
  std::optional<FormulaSet> assumptions;
  // Sorted lexicographically by their canonical member lists.
  std::vector<FormulaSet> members;

  // ⋂members; empty for an empty family.
  FormulaSet intersection() const;
};

// ⊆-maximal consistent subsets of S.
McsFamily mcs(const FormulaSet& s, const Limits& limits = {});
// ⊆-maximal T ⊆ A with T ∪ S consistent. Throws ValidationError for
// inconsistent S.
McsFamily mcs_with_assumptions(const FormulaSet& s, const FormulaSet& a, const Limits& limits = {});

// ⊆-minimal inconsistent subsets, in the order of McsFamily::members.
std::vector<FormulaSet> minimal_conflicts(const FormulaSet& t, const Limits& limits = {});
// Members of T outside every minimal conflict.
FormulaSet free(const FormulaSet& t, const Limits& limits = {});

// φ ∈ CN(T)
bool cn_contains(const FormulaSet& t, const Formula& phi, const Limits& limits = {});

// Cap: φ ∈ CN(⋂MCS(S)); Cup: φ ∈ CN(T) for some T; WCap: for every T.
bool mcs_entails(const FormulaSet& s, const Formula& phi, EntailmentMode mode, const Limits& limits = {});
// As mcs_entails over MCS(S, A), with S added to every closure.
bool mcs_entails_assumptive(const FormulaSet& s, const FormulaSet& a, const Formula& phi, EntailmentMode mode,
                            const Limits& limits = {});
// Evaluates a mode over a precomputed family.
bool family_entails(const McsFamily& family, const Formula& phi, EntailmentMode mode, const Limits& limits = {});

}  // namespace seqarg

#endif  // SEQARG_MCS_HPP
