#include "seqarg/mcs.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "seqarg/classical.hpp"
#include "seqarg/error.hpp"

namespace seqarg {

namespace {

void check_cap(std::size_t n, const Limits& limits) {
  if (n > limits.max_premises) {
    throw ResourceError(std::to_string(n) + " formulas exceed the premise cap of " +
                        std::to_string(limits.max_premises));
  }
}

// Masks over n bits, largest first.
std::vector<std::uint32_t> descending(std::size_t n) {
  std::vector<std::uint32_t> masks(std::size_t{1} << n);
  for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) > std::popcount(b); });
  return masks;
}

// Maximal subsets of `base` such that subset ∪ extra is consistent.
std::vector<FormulaSet> maximal_consistent(const FormulaSet& base, const FormulaSet& extra, const Limits& limits) {
  std::vector<std::uint32_t> found;
  std::vector<Formula> chosen;
  for (std::uint32_t m : descending(base.size())) {
    const bool covered =
        std::any_of(found.begin(), found.end(), [m](std::uint32_t f) { return (m & ~f) == 0; });
    if (covered) continue;
    chosen.assign(extra.begin(), extra.end());
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (m >> i & 1U) chosen.push_back(base[i]);
    }
    if (is_consistent(chosen, limits.max_atoms)) found.push_back(m);
  }
  std::vector<FormulaSet> out;
  for (std::uint32_t m : found) out.push_back(base.subset(m));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

FormulaSet McsFamily::intersection() const {
  if (members.empty()) return {};
  FormulaSet acc = members.front();
  for (const auto& m : members) acc = intersect(acc, m);
  return acc;
}

McsFamily mcs(const FormulaSet& s, const Limits& limits) {
  check_cap(s.size(), limits);
  return McsFamily{s, std::nullopt, maximal_consistent(s, {}, limits)};
}

McsFamily mcs_with_assumptions(const FormulaSet& s, const FormulaSet& a, const Limits& limits) {
  check_cap(s.size() + a.size(), limits);
  if (!is_consistent(s, limits.max_atoms)) throw ValidationError("strict premise set is inconsistent: " + s.str());
  return McsFamily{s, a, maximal_consistent(a, s, limits)};
}

std::vector<FormulaSet> minimal_conflicts(const FormulaSet& t, const Limits& limits) {
  check_cap(t.size(), limits);
  std::vector<std::uint32_t> masks(std::size_t{1} << t.size());
  for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::uint32_t> found;
  for (std::uint32_t m : masks) {
    const bool covers =
        std::any_of(found.begin(), found.end(), [m](std::uint32_t f) { return (f & ~m) == 0; });
    if (covers) continue;
    if (!is_consistent(t.subset(m), limits.max_atoms)) found.push_back(m);
  }
  std::vector<FormulaSet> out;
  for (std::uint32_t m : found) out.push_back(t.subset(m));
  std::sort(out.begin(), out.end());
  return out;
}

FormulaSet free(const FormulaSet& t, const Limits& limits) {
  FormulaSet out = t;
  for (const auto& c : minimal_conflicts(t, limits)) out = subtract(out, c);
  return out;
}

bool cn_contains(const FormulaSet& t, const Formula& phi, const Limits& limits) {
  return entails_classical(t, phi, limits.max_atoms);
}

bool family_entails(const McsFamily& family, const Formula& phi, EntailmentMode mode, const Limits& limits) {
  const FormulaSet extra = family.assumptions ? family.strict : FormulaSet{};
  switch (mode) {
    case EntailmentMode::Cap: return cn_contains(unite(family.intersection(), extra), phi, limits);
    case EntailmentMode::Cup:
      return std::any_of(family.members.begin(), family.members.end(),
                         [&](const FormulaSet& m) { return cn_contains(unite(m, extra), phi, limits); });
    case EntailmentMode::WCap:
      return std::all_of(family.members.begin(), family.members.end(),
                         [&](const FormulaSet& m) { return cn_contains(unite(m, extra), phi, limits); });
  }
  return false;
}

bool mcs_entails(const FormulaSet& s, const Formula& phi, EntailmentMode mode, const Limits& limits) {
  return family_entails(mcs(s, limits), phi, mode, limits);
}

bool mcs_entails_assumptive(const FormulaSet& s, const FormulaSet& a, const Formula& phi, EntailmentMode mode,
                            const Limits& limits) {
  return family_entails(mcs_with_assumptions(s, a, limits), phi, mode, limits);
}

}  // namespace seqarg
