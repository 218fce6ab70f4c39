// seqarg: argumentation queries over a problem file.
//
//   seqarg args FILE            list the argument universe
//   seqarg attacks FILE         list attacks with rule and witness
//   seqarg extensions FILE      extensions per semantics
//   seqarg entails FILE         answer queries, with witnesses
//   seqarg mcs FILE             maximal consistent subsets and conflicts
//   seqarg check FILE           cross-check ABA, sequent and MCS answers

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seqarg/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Assumptive sequent-based argumentation"};
  app.require_subcommand(1);

  seqarg::CommandOptions opts;
  std::string path;
  std::string semantics;
  std::string mode;

  const std::map<std::string, std::string> commands = {
      {"args", "List the argument universe"},
      {"attacks", "List the attack relation"},
      {"extensions", "List extensions"},
      {"entails", "Answer entailment queries"},
      {"mcs", "List maximal consistent subsets"},
      {"check", "Cross-check ABA, sequent and MCS entailment"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", path, "Problem file")->required();
    sub->add_flag("--json", opts.json, "Machine-readable output");
    sub->add_option("--max-atoms", opts.limits.max_atoms, "Truth-table atom cap")->capture_default_str();
    sub->add_option("--max-premises", opts.limits.max_premises, "Cap on |S| + |A|")->capture_default_str();
    sub->add_option("--max-arguments", opts.limits.max_search_arguments, "Cap on framework size")
        ->capture_default_str();
    if (name == "extensions" || name == "entails") {
      sub->add_option("-s,--semantics", semantics, "grd, cmp, prf or stb")
          ->check(CLI::IsMember({"grd", "cmp", "prf", "stb"}));
    }
    if (name == "entails" || name == "mcs") {
      sub->add_option("-m,--mode", mode, "cap, cup or wcap")->check(CLI::IsMember({"cap", "cup", "wcap"}));
    }
    if (name != "attacks" && name != "extensions") {
      sub->add_option("-q,--query", opts.queries, "Query formula (repeatable)");
    }
    if (name != "mcs") {
      sub->add_flag("--all-supports", opts.all_supports, "Aba problems: keep non-minimal supports");
    }
    if (name == "check") {
      sub->add_option("--bound", opts.contraposition_bound, "Largest subsets tried by the contraposition check");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? seqarg::kExitOk : seqarg::kExitUsage;
  }

  if (!semantics.empty()) opts.semantics = seqarg::semantics_from_string(semantics);
  if (!mode.empty()) opts.mode = seqarg::entailment_mode_from_string(mode);

  const std::string command = app.get_subcommands().front()->get_name();
  return seqarg::run_command(command, path, opts, std::cout, std::cerr);
}
