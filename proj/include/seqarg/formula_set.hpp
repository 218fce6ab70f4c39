#ifndef SEQARG_FORMULA_SET_HPP
#define SEQARG_FORMULA_SET_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "seqarg/formula.hpp"

namespace seqarg {

// Finite set of formulas, deduplicated by structural equality and kept in
// canonical order.
class FormulaSet {
 public:
  using const_iterator = std::vector<Formula>::const_iterator;

  FormulaSet() = default;
  FormulaSet(std::initializer_list<Formula> items);
  explicit FormulaSet(std::vector<Formula> items);

  // Returns false if `f` was already present.
  bool insert(Formula f);
  bool erase(const Formula& f);
  bool contains(const Formula& f) const;
  // this ⊆ other
  bool is_subset_of(const FormulaSet& other) const;

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const Formula& operator[](std::size_t i) const { return items_[i]; }
  const_iterator begin() const noexcept { return items_.begin(); }
  const_iterator end() const noexcept { return items_.end(); }
  std::span<const Formula> items() const noexcept { return items_; }

  // Members whose positions are set in `mask`; requires size() <= 64.
  FormulaSet subset(std::uint64_t mask) const;

  // "{a, b}"
  std::string str() const;

  friend bool operator==(const FormulaSet&, const FormulaSet&) = default;
  friend std::strong_ordering operator<=>(const FormulaSet& a, const FormulaSet& b) {
    return std::lexicographical_compare_three_way(a.items_.begin(), a.items_.end(), b.items_.begin(),
                                                  b.items_.end());
  }

 private:
  std::vector<Formula> items_;
};

FormulaSet unite(const FormulaSet& a, const FormulaSet& b);
FormulaSet intersect(const FormulaSet& a, const FormulaSet& b);
FormulaSet subtract(const FormulaSet& a, const FormulaSet& b);

// Members joined with `sep`, no braces.
std::string join(const FormulaSet& s, const std::string& sep = ", ");

}  // namespace seqarg

#endif  // SEQARG_FORMULA_SET_HPP
