#ifndef SEQARG_COMMANDS_HPP
#define SEQARG_COMMANDS_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "seqarg/dung.hpp"
#include "seqarg/entailment.hpp"
#include "seqarg/limits.hpp"
#include "seqarg/problem.hpp"

namespace seqarg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitCheckFailed = 3;

struct CommandOptions {
  bool json = false;
  Limits limits;
  // Override the problem file's selections when set / nonempty.
  std::optional<Semantics> semantics;
  std::optional<EntailmentMode> mode;
  std::vector<std::string> queries;
  // Largest A′ and Γ enumerated by the contraposition check; unbounded when
  // unset.
  std::optional<std::size_t> contraposition_bound;
  // Aba problems: keep non-minimal supports as well.
  bool all_supports = false;
};

int cmd_args(const Problem& p, const CommandOptions& opts, std::ostream& out);
int cmd_attacks(const Problem& p, const CommandOptions& opts, std::ostream& out);
int cmd_extensions(const Problem& p, const CommandOptions& opts, std::ostream& out);
int cmd_entails(const Problem& p, const CommandOptions& opts, std::ostream& out);
int cmd_mcs(const Problem& p, const CommandOptions& opts, std::ostream& out);
int cmd_check(const Problem& p, const CommandOptions& opts, std::ostream& out);

// Loads `path`, runs the named command and maps errors to exit codes:
// input and parse errors give kExitUsage, validation and resource errors
// kExitValidation. Error messages go to `err`.
int run_command(const std::string& command, const std::string& path, const CommandOptions& opts, std::ostream& out,
                std::ostream& err);

}  // namespace seqarg

#endif  // SEQARG_COMMANDS_HPP
