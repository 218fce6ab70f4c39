#include "seqarg/formula_set.hpp"

#include <algorithm>
#include <iterator>

#include "seqarg/error.hpp"

namespace seqarg {

FormulaSet::FormulaSet(std::initializer_list<Formula> items) : FormulaSet(std::vector<Formula>(items)) {}

FormulaSet::FormulaSet(std::vector<Formula> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool FormulaSet::insert(Formula f) {
  auto it = std::lower_bound(items_.begin(), items_.end(), f);
  if (it != items_.end() && *it == f) return false;
  items_.insert(it, std::move(f));
  return true;
}

bool FormulaSet::erase(const Formula& f) {
  auto it = std::lower_bound(items_.begin(), items_.end(), f);
  if (it == items_.end() || !(*it == f)) return false;
  items_.erase(it);
  return true;
}

bool FormulaSet::contains(const Formula& f) const {
  return std::binary_search(items_.begin(), items_.end(), f);
}

bool FormulaSet::is_subset_of(const FormulaSet& other) const {
  return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

FormulaSet FormulaSet::subset(std::uint64_t mask) const {
  if (items_.size() > 64) throw ResourceError("subset masks support at most 64 formulas");
  FormulaSet out;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (mask >> i & 1U) out.items_.push_back(items_[i]);
  }
  return out;
}

std::string FormulaSet::str() const { return "{" + join(*this) + "}"; }

FormulaSet unite(const FormulaSet& a, const FormulaSet& b) {
  std::vector<Formula> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return FormulaSet(std::move(out));
}

FormulaSet intersect(const FormulaSet& a, const FormulaSet& b) {
  std::vector<Formula> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return FormulaSet(std::move(out));
}

FormulaSet subtract(const FormulaSet& a, const FormulaSet& b) {
  std::vector<Formula> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return FormulaSet(std::move(out));
}

std::string join(const FormulaSet& s, const std::string& sep) {
  std::string out;
  for (const auto& f : s) {
    if (!out.empty()) out += sep;
    out += f.str();
  }
  return out;
}

}  // namespace seqarg
