#ifndef SEQARG_LIMITS_HPP
#define SEQARG_LIMITS_HPP

#include <cstddef>

namespace seqarg {

inline constexpr std::size_t kDefaultMaxAtoms = 16;
inline constexpr std::size_t kDefaultMaxPremises = 12;
inline constexpr std::size_t kDefaultMaxBruteForceArguments = 20;
inline constexpr std::size_t kDefaultMaxSearchArguments = 4096;

// Enumeration caps. Every exponential procedure checks the relevant field and
// throws ResourceError when an input is too large.
struct Limits {
  // Distinct atoms in a single truth-table evaluation.
  std::size_t max_atoms = kDefaultMaxAtoms;
  // |S| + |A| for argument universes, |S| for MCS enumeration.
  std::size_t max_premises = kDefaultMaxPremises;
  // Universe size for the subset brute-force extension oracle.
  std::size_t max_bruteforce_arguments = kDefaultMaxBruteForceArguments;
  // Universe size for the labelling-search extension enumerator.
  std::size_t max_search_arguments = kDefaultMaxSearchArguments;
};

}  // namespace seqarg

#endif  // SEQARG_LIMITS_HPP
