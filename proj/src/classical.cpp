#include "seqarg/classical.hpp"

#include <algorithm>
#include <set>

#include "seqarg/error.hpp"

namespace seqarg {

bool evaluate(const Formula& f, const Valuation& v) {
  switch (f.connective()) {
    case Connective::Atom: {
      auto it = v.find(f.name());
      if (it == v.end()) throw PreconditionError("valuation does not cover atom " + f.name());
      return it->second;
    }
    case Connective::Not: return !evaluate(f.operand(), v);
    case Connective::And: return evaluate(f.left(), v) && evaluate(f.right(), v);
    case Connective::Or: return evaluate(f.left(), v) || evaluate(f.right(), v);
    case Connective::Implies: return !evaluate(f.left(), v) || evaluate(f.right(), v);
    case Connective::Iff: return evaluate(f.left(), v) == evaluate(f.right(), v);
  }
  return false;
}

TruthTable::TruthTable(std::vector<std::string> atoms, std::size_t max_atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
  if (atoms_.size() > max_atoms) {
    throw ResourceError("truth table over " + std::to_string(atoms_.size()) + " atoms exceeds the cap of " +
                        std::to_string(max_atoms));
  }
  const std::size_t n = atoms_.size();
  words_ = n <= 6 ? 1 : std::size_t{1} << (n - 6);
  last_mask_ = n >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
}

TruthTable TruthTable::over(std::span<const Formula> formulas, std::size_t max_atoms) {
  std::set<std::string> atoms;
  for (const auto& f : formulas) f.collect_atoms(atoms);
  return TruthTable(std::vector<std::string>(atoms.begin(), atoms.end()), max_atoms);
}

TruthTable::Column TruthTable::all_rows() const {
  Column c(words_, ~std::uint64_t{0});
  c.back() &= last_mask_;
  return c;
}

TruthTable::Column TruthTable::atom_column(std::size_t k) const {
  static constexpr std::uint64_t kPatterns[6] = {
      0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
      0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
  };
  Column c(words_);
  for (std::size_t w = 0; w < words_; ++w) {
    if (k < 6) {
      c[w] = kPatterns[k];
    } else {
      c[w] = (w >> (k - 6) & 1U) ? ~std::uint64_t{0} : 0;
    }
  }
  c.back() &= last_mask_;
  return c;
}

TruthTable::Column TruthTable::models(const Formula& f) const {
  switch (f.connective()) {
    case Connective::Atom: {
      auto it = std::lower_bound(atoms_.begin(), atoms_.end(), f.name());
      if (it == atoms_.end() || *it != f.name()) {
        throw PreconditionError("truth table does not cover atom " + f.name());
      }
      return atom_column(static_cast<std::size_t>(it - atoms_.begin()));
    }
    case Connective::Not: {
      Column c = models(f.operand());
      for (auto& w : c) w = ~w;
      c.back() &= last_mask_;
      return c;
    }
    default: break;
  }
  Column l = models(f.left());
  const Column r = models(f.right());
  for (std::size_t w = 0; w < words_; ++w) {
    switch (f.connective()) {
      case Connective::And: l[w] &= r[w]; break;
      case Connective::Or: l[w] |= r[w]; break;
      case Connective::Implies: l[w] = ~l[w] | r[w]; break;
      case Connective::Iff: l[w] = ~(l[w] ^ r[w]); break;
      default: break;
    }
  }
  l.back() &= last_mask_;
  return l;
}

bool TruthTable::is_empty(const Column& c) {
  return std::all_of(c.begin(), c.end(), [](std::uint64_t w) { return w == 0; });
}

bool TruthTable::is_subset(const Column& a, const Column& b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w] & ~b[w]) return false;
  }
  return true;
}

void TruthTable::intersect_into(Column& acc, const Column& c) {
  for (std::size_t w = 0; w < acc.size(); ++w) acc[w] &= c[w];
}

bool entails_classical(std::span<const Formula> premises, const Formula& goal, std::size_t max_atoms) {
  std::vector<Formula> all(premises.begin(), premises.end());
  all.push_back(goal);
  const TruthTable table = TruthTable::over(all, max_atoms);
  TruthTable::Column rows = table.all_rows();
  for (const auto& p : premises) {
    TruthTable::intersect_into(rows, table.models(p));
    if (TruthTable::is_empty(rows)) return true;
  }
  return TruthTable::is_subset(rows, table.models(goal));
}

bool entails_classical(const FormulaSet& premises, const Formula& goal, std::size_t max_atoms) {
  return entails_classical(premises.items(), goal, max_atoms);
}

bool is_valid(const Formula& f, std::size_t max_atoms) {
  return entails_classical(std::span<const Formula>{}, f, max_atoms);
}

bool is_consistent(std::span<const Formula> formulas, std::size_t max_atoms) {
  const TruthTable table = TruthTable::over(formulas, max_atoms);
  TruthTable::Column rows = table.all_rows();
  for (const auto& f : formulas) {
    TruthTable::intersect_into(rows, table.models(f));
    if (TruthTable::is_empty(rows)) return false;
  }
  return true;
}

bool is_consistent(const FormulaSet& formulas, std::size_t max_atoms) {
  return is_consistent(formulas.items(), max_atoms);
}

Formula conjoin(const FormulaSet& formulas) {
  if (formulas.empty()) throw PreconditionError("conjoin of an empty set");
  Formula acc = formulas[formulas.size() - 1];
  for (std::size_t i = formulas.size() - 1; i-- > 0;) acc = Formula::conjunction(formulas[i], acc);
  return acc;
}

}  // namespace seqarg
