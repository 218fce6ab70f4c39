#include "seqarg/attack.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "seqarg/classical.hpp"
#include "seqarg/error.hpp"

namespace seqarg {

std::string to_string(AttackRule r) {
  switch (r) {
    case AttackRule::Ucut: return "ucut";
    case AttackRule::DUcut: return "ducut";
    case AttackRule::AtAba: return "at-aba";
  }
  return "?";
}

std::optional<AttackRule> attack_rule_from_string(std::string_view name) {
  for (AttackRule r : {AttackRule::Ucut, AttackRule::DUcut, AttackRule::AtAba}) {
    if (to_string(r) == name) return r;
  }
  return std::nullopt;
}

ContraryMap ContraryMap::negation(const FormulaSet& assumptions) {
  ContraryMap m;
  for (const auto& a : assumptions) m.set(a, Formula::negation(a));
  return m;
}

void ContraryMap::set(const Formula& assumption, const Formula& contrary) { map_.insert_or_assign(assumption, contrary); }

const Formula& ContraryMap::at(const Formula& assumption) const {
  auto it = map_.find(assumption);
  if (it == map_.end()) throw ValidationError("no contrary for assumption " + assumption.str());
  return it->second;
}

FormulaSet ContraryMap::image(const FormulaSet& assumptions) const {
  FormulaSet out;
  for (const auto& a : assumptions) out.insert(at(a));
  return out;
}

namespace {

bool undercuts(const Formula& conclusion, const FormulaSet& part, std::size_t max_atoms) {
  return is_valid(Formula::biconditional(conclusion, Formula::negation(conjoin(part))), max_atoms);
}

// Nonempty subsets of an n-element set by size, then lexicographically by
// member positions.
std::vector<std::uint32_t> ordered_subsets(std::size_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 1; m < (std::uint32_t{1} << n); ++m) out.push_back(m);
  std::sort(out.begin(), out.end(), [](std::uint32_t a, std::uint32_t b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    // Lowest differing position decides: the set holding it comes first.
    const std::uint32_t diff = a ^ b;
    return (a & diff & (0U - diff)) != 0;
  });
  return out;
}

}  // namespace

std::optional<FormulaSet> ucut_attacks(const AssumptiveArgument& a1, const AssumptiveArgument& a2,
                                       std::size_t max_atoms) {
  if (!a1.assumptions().empty() || !a2.assumptions().empty()) return std::nullopt;
  const FormulaSet& supp = a2.support();
  if (supp.size() > 20) throw ResourceError("support too large for undercut search");
  for (std::uint32_t m : ordered_subsets(supp.size())) {
    FormulaSet part = supp.subset(m);
    if (undercuts(a1.conclusion(), part, max_atoms)) return part;
  }
  return std::nullopt;
}

std::optional<Formula> ducut_attacks(const AssumptiveArgument& a1, const AssumptiveArgument& a2,
                                     std::size_t max_atoms) {
  if (!a1.assumptions().empty() || !a2.assumptions().empty()) return std::nullopt;
  for (const auto& g : a2.support()) {
    if (undercuts(a1.conclusion(), FormulaSet{g}, max_atoms)) return g;
  }
  return std::nullopt;
}

std::optional<Formula> at_aba_attacks(const AssumptiveArgument& a1, const AssumptiveArgument& a2,
                                      const ContraryMap& contrary) {
  std::optional<Formula> found;
  for (const auto& phi : a2.assumptions()) {
    if (!found && contrary.at(phi) == a1.conclusion()) found = phi;
  }
  return found;
}

namespace {

// Undercut checks keyed by (conclusion, support mask), with supports encoded
// over the union of all supports in the universe.
class UndercutTable {
 public:
  UndercutTable(const ArgumentUniverse& u, std::size_t max_atoms) : max_atoms_(max_atoms) {
    for (const auto& a : u) {
      for (const auto& g : a.support()) base_.insert(g);
    }
    if (base_.size() > 20) throw ResourceError("too many distinct support formulas for undercut search");
    order_ = ordered_subsets(base_.size());
  }

  std::uint32_t mask_of(const FormulaSet& s) const {
    std::uint32_t m = 0;
    for (const auto& g : s) {
      auto it = std::lower_bound(base_.begin(), base_.end(), g);
      m |= std::uint32_t{1} << static_cast<std::uint32_t>(it - base_.begin());
    }
    return m;
  }

  // First undercut witness mask inside `supp`, or 0.
  std::uint32_t ucut(const Formula& conclusion, std::uint32_t supp) {
    const std::uint64_t key = conclusion_id(conclusion) << 32 | supp;
    if (auto it = ucut_memo_.find(key); it != ucut_memo_.end()) return it->second;
    std::uint32_t found = 0;
    for (std::uint32_t m : order_) {
      if ((m & ~supp) == 0 && valid(conclusion, m)) {
        found = m;
        break;
      }
    }
    ucut_memo_.emplace(key, found);
    return found;
  }

  std::uint32_t ducut(const Formula& conclusion, std::uint32_t supp) {
    for (std::uint32_t rest = supp; rest != 0; rest &= rest - 1) {
      const std::uint32_t bit = rest & (0U - rest);
      if (valid(conclusion, bit)) return bit;
    }
    return 0;
  }

  FormulaSet set_of(std::uint32_t m) const { return base_.subset(m); }

 private:
  std::uint64_t conclusion_id(const Formula& f) {
    auto [it, inserted] = ids_.emplace(f, ids_.size());
    return it->second;
  }

  bool valid(const Formula& conclusion, std::uint32_t part) {
    const std::uint64_t key = conclusion_id(conclusion) << 32 | part;
    if (auto it = valid_memo_.find(key); it != valid_memo_.end()) return it->second;
    const bool v = undercuts(conclusion, base_.subset(part), max_atoms_);
    valid_memo_.emplace(key, v);
    return v;
  }

  std::size_t max_atoms_;
  FormulaSet base_;
  std::vector<std::uint32_t> order_;
  std::unordered_map<Formula, std::uint64_t> ids_;
  std::unordered_map<std::uint64_t, bool> valid_memo_;
  std::unordered_map<std::uint64_t, std::uint32_t> ucut_memo_;
};

}  // namespace

Framework build_framework(ArgumentUniverse universe, std::vector<AttackRule> rules,
                          std::optional<ContraryMap> contrary, std::size_t max_atoms) {
  std::sort(rules.begin(), rules.end());
  rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
  const bool use_ucut = std::count(rules.begin(), rules.end(), AttackRule::Ucut) != 0;
  const bool use_ducut = std::count(rules.begin(), rules.end(), AttackRule::DUcut) != 0;
  const bool use_aba = std::count(rules.begin(), rules.end(), AttackRule::AtAba) != 0;
  if (use_aba && !contrary) throw PreconditionError("at-aba attacks need a contrariness mapping");

  const std::size_t n = universe.size();
  std::vector<Attack> attacks;

  if (use_ucut || use_ducut) {
    UndercutTable table(universe, max_atoms);
    std::vector<std::uint32_t> masks(n);
    for (std::size_t j = 0; j < n; ++j) masks[j] = table.mask_of(universe[j].support());
    for (std::size_t i = 0; i < n; ++i) {
      if (!universe[i].assumptions().empty()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!universe[j].assumptions().empty() || masks[j] == 0) continue;
        if (use_ucut) {
          if (std::uint32_t w = table.ucut(universe[i].conclusion(), masks[j])) {
            attacks.push_back({i, j, AttackRule::Ucut, table.set_of(w)});
          }
        }
        if (use_ducut) {
          if (std::uint32_t w = table.ducut(universe[i].conclusion(), masks[j])) {
            attacks.push_back({i, j, AttackRule::DUcut, table.set_of(w)});
          }
        }
      }
    }
  }

  if (use_aba) {
    std::unordered_map<Formula, std::vector<std::size_t>> by_conclusion;
    for (std::size_t i = 0; i < n; ++i) by_conclusion[universe[i].conclusion()].push_back(i);
    for (std::size_t j = 0; j < n; ++j) {
      // First assumption (canonical order) whose contrary each attacker
      // concludes.
      std::vector<std::pair<std::size_t, Formula>> hits;
      for (const auto& phi : universe[j].assumptions()) {
        auto it = by_conclusion.find(contrary->at(phi));
        if (it == by_conclusion.end()) continue;
        for (std::size_t i : it->second) hits.emplace_back(i, phi);
      }
      std::stable_sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (std::size_t k = 0; k < hits.size(); ++k) {
        if (k > 0 && hits[k].first == hits[k - 1].first) continue;
        attacks.push_back({hits[k].first, j, AttackRule::AtAba, FormulaSet{hits[k].second}});
      }
    }
  }

  std::sort(attacks.begin(), attacks.end(), [](const Attack& a, const Attack& b) {
    if (a.attacker != b.attacker) return a.attacker < b.attacker;
    if (a.attacked != b.attacked) return a.attacked < b.attacked;
    return a.rule < b.rule;
  });
  AttackGraph graph(n);
  for (const auto& a : attacks) graph.add_attack(a.attacker, a.attacked);
  return Framework{std::move(universe), std::move(attacks), std::move(rules), std::move(contrary), std::move(graph)};
}

std::string str(const Framework& f, const Attack& a) {
  return f.universe[a.attacker].str() + " --[" + to_string(a.rule) + ":" + a.witness.str() + "]--> " +
         f.universe[a.attacked].str();
}

}  // namespace seqarg
