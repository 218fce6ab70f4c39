#ifndef SEQARG_ENTAILMENT_HPP
#define SEQARG_ENTAILMENT_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqarg/attack.hpp"
#include "seqarg/dung.hpp"
#include "seqarg/formula.hpp"
#include "seqarg/limits.hpp"

namespace seqarg {

enum class EntailmentMode { Cap, Cup, WCap };

// "cap", "cup", "wcap"
std::string to_string(EntailmentMode m);
std::optional<EntailmentMode> entailment_mode_from_string(std::string_view name);
inline constexpr EntailmentMode kAllModes[] = {EntailmentMode::Cap, EntailmentMode::Cup, EntailmentMode::WCap};

struct EntailmentResult {
  bool holds = false;
  // One entry per extension: an argument in it concluding the goal, if any.
  // Under Cap, an argument shared by every extension is preferred.
  std::vector<std::optional<std::size_t>> witnesses;
  std::size_t extension_count = 0;
};

// Answers a query against a list of extensions of arguments whose
// conclusions are given by `conclusions`:
//   Cap  - one argument concluding φ belongs to every extension
//   WCap - every extension holds some argument concluding φ
//   Cup  - some extension holds an argument concluding φ
// With no extensions Cap and WCap hold vacuously and Cup fails.
EntailmentResult evaluate_entailment(std::span<const Extension> exts, std::span<const Formula> conclusions,
                                     EntailmentMode mode, const Formula& goal);

// Evaluates queries over one framework, enumerating each semantics at most
// once.
class Reasoner {
 public:
  explicit Reasoner(const Framework& framework, Limits limits = {}) : framework_(framework), limits_(limits) {}

  const std::vector<Extension>& extensions(Semantics s);
  // Throws PoolMissError if φ is not in the universe's conclusion pool.
  EntailmentResult query(Semantics s, EntailmentMode mode, const Formula& goal);

 private:
  const Framework& framework_;
  Limits limits_;
  std::vector<Formula> conclusions_;
  std::map<Semantics, std::vector<Extension>> cache_;
};

bool entails(const Framework& framework, Semantics s, EntailmentMode mode, const Formula& goal,
             const Limits& limits = {});

}  // namespace seqarg

#endif  // SEQARG_ENTAILMENT_HPP
