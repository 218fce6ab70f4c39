#include "seqarg/argument.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "seqarg/error.hpp"

namespace seqarg {

AssumptiveArgument AssumptiveArgument::checked(FormulaSet assumptions, FormulaSet support, Formula conclusion,
                                               const CoreLogic& logic) {
  AssumptiveArgument a(std::move(assumptions), std::move(support), std::move(conclusion));
  if (!logic.derives(a.premises().items(), a.conclusion())) {
    throw PreconditionError("not derivable: " + a.str());
  }
  return a;
}

std::string AssumptiveArgument::str() const {
  std::string out;
  if (!assumptions_.empty()) out += join(assumptions_) + " |~ ";
  if (!support_.empty()) out += join(support_) + " ";
  out += "=> " + conclusion_.str();
  return out;
}

std::strong_ordering operator<=>(const AssumptiveArgument& a, const AssumptiveArgument& b) {
  const auto na = a.assumptions().size() + a.support().size();
  const auto nb = b.assumptions().size() + b.support().size();
  if (auto c = na <=> nb; c != 0) return c;
  return a.str() <=> b.str();
}

FormulaSet Ass(std::span<const AssumptiveArgument> args) {
  FormulaSet out;
  for (const auto& a : args) out = unite(out, a.assumptions());
  return out;
}

FormulaSet Supps(std::span<const AssumptiveArgument> args) {
  FormulaSet out;
  for (const auto& a : args) out = unite(out, a.support());
  return out;
}

FormulaSet Concs(std::span<const AssumptiveArgument> args) {
  FormulaSet out;
  for (const auto& a : args) out.insert(a.conclusion());
  return out;
}

bool is_subargument(const AssumptiveArgument& a, const AssumptiveArgument& b) {
  return a.assumptions().is_subset_of(b.assumptions()) && a.support().is_subset_of(b.support());
}

AssumptiveArgument cut(const AssumptiveArgument& a1, const AssumptiveArgument& a2, const Formula& phi,
                       const CoreLogic& logic) {
  if (!(a1.conclusion() == phi)) {
    throw PreconditionError("cut formula " + phi.str() + " is not the conclusion of " + a1.str());
  }
  FormulaSet assumptions = a2.assumptions();
  FormulaSet support = a2.support();
  if (support.contains(phi)) {
    support.erase(phi);
  } else if (assumptions.contains(phi)) {
    assumptions.erase(phi);
  } else {
    throw PreconditionError("cut formula " + phi.str() + " does not occur in the premises of " + a2.str());
  }
  return AssumptiveArgument::checked(unite(a1.assumptions(), assumptions), unite(a1.support(), support),
                                     a2.conclusion(), logic);
}

std::size_t ArgumentUniverse::find(const AssumptiveArgument& a) const {
  auto it = std::find(arguments_.begin(), arguments_.end(), a);
  return static_cast<std::size_t>(it - arguments_.begin());
}

ArgumentUniverse ArgumentUniverse::from_arguments(FormulaSet strict, FormulaSet assumptions, FormulaSet pool,
                                                  std::vector<AssumptiveArgument> arguments) {
  ArgumentUniverse u;
  u.strict_ = std::move(strict);
  u.assumptions_ = std::move(assumptions);
  u.pool_ = std::move(pool);
  u.arguments_ = std::move(arguments);
  return u;
}

namespace {

// All masks over n bits ordered by popcount, then value.
std::vector<std::uint32_t> masks_by_size(std::size_t n) {
  std::vector<std::uint32_t> masks(std::size_t{1} << n);
  std::iota(masks.begin(), masks.end(), 0U);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  return masks;
}

}  // namespace

ArgumentUniverse build_universe(const FormulaSet& strict, const FormulaSet& assumptions, const FormulaSet& pool,
                                const CoreLogic& logic, const UniverseOptions& options) {
  const std::size_t n = strict.size() + assumptions.size();
  if (n > options.limits.max_premises || n > 30) {
    throw ResourceError("|S| + |A| = " + std::to_string(n) + " exceeds the premise cap of " +
                        std::to_string(options.limits.max_premises));
  }
  if (!intersect(strict, assumptions).empty()) {
    throw ValidationError("strict premises and assumptions overlap: " + intersect(strict, assumptions).str());
  }
  if (options.require_consistent_strict && !logic.is_consistent(strict.items())) {
    throw ValidationError("strict premise set is inconsistent: " + strict.str());
  }

  // Bits [0, |S|) index S, bits [|S|, n) index A.
  std::vector<Formula> premises(strict.begin(), strict.end());
  premises.insert(premises.end(), assumptions.begin(), assumptions.end());
  const auto order = masks_by_size(n);
  const std::uint32_t strict_bits = (std::uint32_t{1} << strict.size()) - 1;

  ArgumentUniverse u;
  u.strict_ = strict;
  u.assumptions_ = assumptions;
  u.pool_ = pool;
  u.minimal_support_ = options.minimal_support;

  std::vector<Formula> chosen;
  std::vector<char> derivable(order.size());
  for (const auto& phi : pool) {
    std::fill(derivable.begin(), derivable.end(), 0);
    for (std::uint32_t mask : order) {
      bool inherited = false;
      for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
        if (derivable[mask & ~(rest & (0U - rest))]) {
          inherited = true;
          break;
        }
      }
      if (!inherited) {
        chosen.clear();
        for (std::size_t i = 0; i < n; ++i) {
          if (mask >> i & 1U) chosen.push_back(premises[i]);
        }
        if (!logic.derives(chosen, phi)) continue;
      }
      derivable[mask] = 1;
      if (options.minimal_support && inherited) continue;
      u.arguments_.emplace_back(assumptions.subset(mask >> strict.size()), strict.subset(mask & strict_bits), phi);
    }
  }
  std::sort(u.arguments_.begin(), u.arguments_.end());
  return u;
}

FormulaSet negated_conjunctions(const FormulaSet& premises, std::size_t max_premises) {
  if (premises.size() > max_premises) {
    throw ResourceError("negated-conjunction pool over " + std::to_string(premises.size()) +
                        " premises exceeds the premise cap of " + std::to_string(max_premises));
  }
  FormulaSet out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << premises.size()); ++mask) {
    out.insert(Formula::negation(conjoin(premises.subset(mask))));
  }
  return out;
}

}  // namespace seqarg
