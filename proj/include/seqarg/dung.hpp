#ifndef SEQARG_DUNG_HPP
#define SEQARG_DUNG_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqarg/limits.hpp"

namespace seqarg {

enum class Semantics { Grounded, Complete, Preferred, Stable };

// "grd", "cmp", "prf", "stb"
std::string to_string(Semantics s);
std::optional<Semantics> semantics_from_string(std::string_view name);
inline constexpr Semantics kAllSemantics[] = {Semantics::Grounded, Semantics::Complete, Semantics::Preferred,
                                              Semantics::Stable};

// Abstract attack relation over arguments 0..size()-1. Duplicate attacks are
// collapsed.
class AttackGraph {
 public:
  explicit AttackGraph(std::size_t size = 0);

  void add_attack(std::size_t attacker, std::size_t attacked);

  std::size_t size() const noexcept { return attackers_.size(); }
  bool attacks(std::size_t attacker, std::size_t attacked) const;
  // Sorted attacker / target indices.
  const std::vector<std::size_t>& attackers_of(std::size_t i) const { return attackers_[i]; }
  const std::vector<std::size_t>& targets_of(std::size_t i) const { return targets_[i]; }
  std::size_t attack_count() const noexcept;

 private:
  std::vector<std::vector<std::size_t>> attackers_;
  std::vector<std::vector<std::size_t>> targets_;
};

// Sorted argument indices.
using ArgumentSet = std::vector<std::size_t>;

struct Extension {
  ArgumentSet members;
  Semantics semantics;

  bool contains(std::size_t i) const;
  friend bool operator==(const Extension&, const Extension&) = default;
};

bool is_conflict_free(const AttackGraph& g, const ArgumentSet& s);
// s attacks every attacker of i.
bool defends(const AttackGraph& g, const ArgumentSet& s, std::size_t i);
bool is_admissible(const AttackGraph& g, const ArgumentSet& s);
bool is_complete(const AttackGraph& g, const ArgumentSet& s);
// s attacks every argument outside it (conflict-freeness not included).
bool attacks_all_outside(const AttackGraph& g, const ArgumentSet& s);
bool is_stable(const AttackGraph& g, const ArgumentSet& s);

// Least fixed point of the defense operator.
Extension grounded_extension(const AttackGraph& g);

// Every complete extension, found by a 3-valued labelling search with
// constraint propagation. Output is sorted by size, then by members.
// Throws ResourceError above limits.max_search_arguments.
std::vector<Extension> complete_extensions(const AttackGraph& g, const Limits& limits = {});
std::vector<Extension> preferred_extensions(const AttackGraph& g, const Limits& limits = {});
std::vector<Extension> stable_extensions(const AttackGraph& g, const Limits& limits = {});
std::vector<Extension> extensions(const AttackGraph& g, Semantics s, const Limits& limits = {});

// Filters an already computed list of complete extensions.
std::vector<Extension> preferred_among(const std::vector<Extension>& complete);
std::vector<Extension> stable_among(const AttackGraph& g, const std::vector<Extension>& complete);

// Reference enumeration straight from the definition: every conflict-free
// subset is tested for completeness. Throws ResourceError above
// limits.max_bruteforce_arguments.
std::vector<Extension> complete_extensions_bruteforce(const AttackGraph& g, const Limits& limits = {});

// Sorts by size, then lexicographically by members.
void sort_extensions(std::vector<Extension>& exts);

}  // namespace seqarg

#endif  // SEQARG_DUNG_HPP
