#ifndef SEQARG_PROBLEM_HPP
#define SEQARG_PROBLEM_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seqarg/aba.hpp"
#include "seqarg/attack.hpp"
#include "seqarg/dung.hpp"
#include "seqarg/entailment.hpp"
#include "seqarg/formula_set.hpp"
#include "seqarg/limits.hpp"

namespace seqarg {

enum class ProblemMode { Flat, Assumptive, Aba };

// "flat", "assumptive", "aba"
std::string to_string(ProblemMode m);

// Line-oriented problem description:
//   mode: flat|assumptive|aba|core-logic|rule-system
//   strict: f1; f2        assumptions: a1; a2
//   contrary: a := f      rules: b1, b2 -> h
//   attack: ucut|ducut|at-aba
//   query: f    semantics: grd|cmp|prf|stb    entailment: cap|cup|wcap
// `#` starts a comment. Repeatable keys accumulate.
struct Problem {
  ProblemMode mode = ProblemMode::Flat;
  DeductionMode deduction = DeductionMode::CoreLogic;
  FormulaSet strict;
  FormulaSet assumptions;
  std::vector<std::pair<Formula, Formula>> contraries;
  std::vector<InferenceRule> rules;
  std::vector<AttackRule> attacks;
  std::vector<Formula> queries;
  std::optional<Semantics> semantics;
  std::optional<EntailmentMode> entailment;

  // Explicit attack rules, or ucut for flat and at-aba otherwise.
  std::vector<AttackRule> effective_attacks() const;
  // Negation for every assumption, then the explicit overrides.
  ContraryMap contrary_map() const;
  // Assumptive and aba problems as an ABA framework (assumptive problems use
  // the classical core logic).
  AbaFramework aba_framework() const;
};

// Throws InputError (with a line number) for malformed input.
Problem parse_problem(std::string_view text);
// Throws InputError when the file cannot be read.
Problem load_problem(const std::string& path);

// Default conclusion pool of the problem's framework, with `queries` added.
FormulaSet problem_pool(const Problem& p, std::span<const Formula> queries, const Limits& limits = {});

// Flat: all subsets of S, inconsistent S allowed. Assumptive: all A′ ⊆ A,
// Γ ⊆ S. Aba: the translation, with minimal supports unless `minimal` is
// false. Throws ValidationError for structurally invalid problems.
Framework build_problem_framework(const Problem& p, const FormulaSet& pool, const Limits& limits = {},
                                  bool minimal = true);

}  // namespace seqarg

#endif  // SEQARG_PROBLEM_HPP
