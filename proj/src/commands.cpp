#include "seqarg/commands.hpp"

#include <json.hpp>

#include "seqarg/aba.hpp"
#include "seqarg/error.hpp"
#include "seqarg/mcs.hpp"

namespace seqarg {

namespace {

using Json = nlohmann::ordered_json;

std::vector<Formula> parse_queries(const std::vector<std::string>& texts) {
  std::vector<Formula> out;
  for (const auto& t : texts) {
    try {
      out.push_back(parse(t));
    } catch (const ParseError& e) {
      throw InputError(0, "query '" + t + "': " + e.what());
    }
  }
  return out;
}

// Command-line queries, else the file's.
std::vector<Formula> selected_queries(const Problem& p, const CommandOptions& opts) {
  if (!opts.queries.empty()) return parse_queries(opts.queries);
  return p.queries;
}

std::vector<Semantics> selected_semantics(const Problem& p, const CommandOptions& opts) {
  if (opts.semantics) return {*opts.semantics};
  if (p.semantics) return {*p.semantics};
  return {std::begin(kAllSemantics), std::end(kAllSemantics)};
}

std::vector<EntailmentMode> selected_modes(const Problem& p, const CommandOptions& opts) {
  if (opts.mode) return {*opts.mode};
  if (p.entailment) return {*p.entailment};
  return {std::begin(kAllModes), std::end(kAllModes)};
}

Json formula_list(const FormulaSet& s) {
  Json out = Json::array();
  for (const auto& f : s) out.push_back(f.str());
  return out;
}

Json argument_json(std::size_t index, const AssumptiveArgument& a) {
  return Json{{"index", index},
              {"assumptions", formula_list(a.assumptions())},
              {"support", formula_list(a.support())},
              {"conclusion", a.conclusion().str()},
              {"text", a.str()}};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Framework framework_for(const Problem& p, const std::vector<Formula>& queries, const CommandOptions& opts) {
  return build_problem_framework(p, problem_pool(p, queries, opts.limits), opts.limits, !opts.all_supports);
}

}  // namespace

int cmd_args(const Problem& p, const CommandOptions& opts, std::ostream& out) {
  const Framework f = framework_for(p, selected_queries(p, opts), opts);
  if (opts.json) {
    Json args = Json::array();
    for (std::size_t i = 0; i < f.universe.size(); ++i) args.push_back(argument_json(i, f.universe[i]));
    out << Json{{"mode", to_string(p.mode)}, {"arguments", args}}.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& a : f.universe) out << a.str() << "\n";
  return kExitOk;
}

int cmd_attacks(const Problem& p, const CommandOptions& opts, std::ostream& out) {
  const Framework f = framework_for(p, selected_queries(p, opts), opts);
  if (opts.json) {
    Json attacks = Json::array();
    for (const auto& a : f.attacks) {
      attacks.push_back(Json{{"attacker", a.attacker},
                             {"attacked", a.attacked},
                             {"rule", to_string(a.rule)},
                             {"witness", formula_list(a.witness)},
                             {"text", str(f, a)}});
    }
    out << Json{{"mode", to_string(p.mode)}, {"attacks", attacks}}.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& a : f.attacks) out << str(f, a) << "\n";
  return kExitOk;
}

int cmd_extensions(const Problem& p, const CommandOptions& opts, std::ostream& out) {
  const Framework f = framework_for(p, selected_queries(p, opts), opts);
  Reasoner r(f, opts.limits);
  Json result = Json::array();
  for (Semantics s : selected_semantics(p, opts)) {
    const auto& exts = r.extensions(s);
    if (opts.json) {
      Json list = Json::array();
      for (const auto& e : exts) {
        Json members = Json::array();
        for (std::size_t i : e.members) members.push_back(f.universe[i].str());
        list.push_back(Json{{"indices", e.members}, {"arguments", members}});
      }
      result.push_back(Json{{"semantics", to_string(s)}, {"extensions", list}});
      continue;
    }
    out << to_string(s) << ": " << exts.size() << (exts.size() == 1 ? " extension" : " extensions") << "\n";
    for (std::size_t k = 0; k < exts.size(); ++k) {
      out << "extension " << k + 1 << ": " << exts[k].members.size() << " arguments\n";
      for (std::size_t i : exts[k].members) out << "  " << f.universe[i].str() << "\n";
    }
  }
  if (opts.json) out << Json{{"mode", to_string(p.mode)}, {"semantics", result}}.dump(2) << "\n";
  return kExitOk;
}

int cmd_entails(const Problem& p, const CommandOptions& opts, std::ostream& out) {
  const auto queries = selected_queries(p, opts);
  if (queries.empty()) throw InputError(0, "no query given");
  const Framework f = framework_for(p, queries, opts);
  Reasoner r(f, opts.limits);
  Json rows = Json::array();
  for (Semantics s : selected_semantics(p, opts)) {
    for (EntailmentMode m : selected_modes(p, opts)) {
      for (const auto& q : queries) {
        const EntailmentResult res = r.query(s, m, q);
        if (opts.json) {
          Json witnesses = Json::array();
          for (const auto& w : res.witnesses) witnesses.push_back(w ? Json(f.universe[*w].str()) : Json(nullptr));
          rows.push_back(Json{{"semantics", to_string(s)},
                              {"mode", to_string(m)},
                              {"query", q.str()},
                              {"holds", res.holds},
                              {"extensions", res.extension_count},
                              {"witnesses", witnesses}});
          continue;
        }
        out << to_string(s) << " " << to_string(m) << " " << q.str() << ": " << yes_no(res.holds) << "\n";
        if (res.extension_count == 0) {
          out << "  no " << to_string(s) << " extensions: cap and wcap hold vacuously, cup fails\n";
        }
        for (std::size_t k = 0; k < res.witnesses.size(); ++k) {
          out << "  extension " << k + 1 << ": " << (res.witnesses[k] ? f.universe[*res.witnesses[k]].str() : "-")
              << "\n";
        }
      }
    }
  }
  if (opts.json) out << Json{{"mode", to_string(p.mode)}, {"queries", rows}}.dump(2) << "\n";
  return kExitOk;
}

int cmd_mcs(const Problem& p, const CommandOptions& opts, std::ostream& out) {
  const auto queries = selected_queries(p, opts);
  const bool flat = p.mode == ProblemMode::Flat;
  const bool rule_system = p.mode == ProblemMode::Aba && p.deduction == DeductionMode::RuleSystem;
  const AbaFramework af = p.aba_framework();

  McsFamily family;
  if (flat) {
    family = mcs(p.strict, opts.limits);
  } else if (rule_system) {
    validate(af, opts.limits);
    family = McsFamily{p.strict, p.assumptions, aba_mcs(af, opts.limits)};
  } else {
    family = mcs_with_assumptions(p.strict, p.assumptions, opts.limits);
  }
  const FormulaSet base = flat ? p.strict : unite(p.strict, p.assumptions);
  std::vector<FormulaSet> conflicts;
  FormulaSet free_part;
  if (!rule_system) {
    conflicts = minimal_conflicts(base, opts.limits);
    free_part = free(base, opts.limits);
  }

  auto answer = [&](const Formula& q, EntailmentMode m) {
    if (rule_system) return aba_mcs_entails(af, family.members, q, m, opts.limits);
    return family_entails(family, q, m, opts.limits);
  };

  const std::string label = flat ? "mcs(S)" : "mcs(S, A)";
  if (opts.json) {
    Json members = Json::array();
    for (const auto& m : family.members) members.push_back(formula_list(m));
    Json j{{"mode", to_string(p.mode)}, {"family", members}, {"intersection", formula_list(family.intersection())}};
    if (!rule_system) {
      Json cs = Json::array();
      for (const auto& c : conflicts) cs.push_back(formula_list(c));
      j["minimal_conflicts"] = cs;
      j["free"] = formula_list(free_part);
    }
    Json rows = Json::array();
    for (const auto& q : queries) {
      for (EntailmentMode m : selected_modes(p, opts)) {
        rows.push_back(Json{{"mode", to_string(m)}, {"query", q.str()}, {"holds", answer(q, m)}});
      }
    }
    j["queries"] = rows;
    out << j.dump(2) << "\n";
    return kExitOk;
  }

  out << label << ": " << family.members.size() << "\n";
  for (const auto& m : family.members) out << "  " << m.str() << "\n";
  out << "intersection: " << family.intersection().str() << "\n";
  if (!rule_system) {
    const std::string over = flat ? "" : " of S u A";
    out << "minimal conflicts" << over << ": " << conflicts.size() << "\n";
    for (const auto& c : conflicts) out << "  " << c.str() << "\n";
    out << "free" << over << ": " << free_part.str() << "\n";
  }
  for (const auto& q : queries) {
    for (EntailmentMode m : selected_modes(p, opts)) {
      out << to_string(m) << " " << q.str() << ": " << yes_no(answer(q, m)) << "\n";
    }
  }
  return kExitOk;
}

namespace {

struct CheckTally {
  std::size_t pass = 0, fail = 0, skip = 0;

  std::string record(bool ok) {
    ++(ok ? pass : fail);
    return ok ? "PASS" : "FAIL";
  }
};

bool is_negation_map(const AbaFramework& af) {
  for (const auto& a : af.assumptions) {
    if (!(af.contrary.at(a) == Formula::negation(a))) return false;
  }
  return true;
}

}  // namespace

int cmd_check(const Problem& p, const CommandOptions& opts, std::ostream& out) {
  std::vector<Formula> queries = selected_queries(p, opts);
  if (queries.empty()) {
    const FormulaSet all = unite(p.strict, p.assumptions);
    queries.assign(all.begin(), all.end());
  }
  const Framework f = framework_for(p, queries, opts);
  Reasoner seq(f, opts.limits);
  CheckTally tally;
  Json rows = Json::array();
  Json contraposition = nullptr;

  auto mcs_rows = [&](auto&& mcs_answer) {
    for (EntailmentMode m : kAllModes) {
      for (const auto& q : queries) {
        const bool prf = seq.query(Semantics::Preferred, m, q).holds;
        const bool stb = seq.query(Semantics::Stable, m, q).holds;
        const bool oracle = mcs_answer(q, m);
        const std::string status = tally.record(prf == stb && stb == oracle);
        if (opts.json) {
          rows.push_back(Json{{"property", "mcs"},
                              {"mode", to_string(m)},
                              {"query", q.str()},
                              {"prf", prf},
                              {"stb", stb},
                              {"mcs", oracle},
                              {"status", status}});
        } else {
          out << "mcs " << to_string(m) << " " << q.str() << ": prf=" << yes_no(prf) << " stb=" << yes_no(stb)
              << " mcs=" << yes_no(oracle) << " " << status << "\n";
        }
      }
    }
  };

  if (p.mode == ProblemMode::Flat) {
    const McsFamily family = mcs(p.strict, opts.limits);
    mcs_rows([&](const Formula& q, EntailmentMode m) { return family_entails(family, q, m, opts.limits); });
  } else {
    const AbaFramework af = p.aba_framework();
    validate(af, opts.limits);
    const FormulaSet aba_pool = default_aba_pool(af, queries);
    const AbaArgumentFramework native = build_aba_framework(af, aba_pool, opts.limits, !opts.all_supports);

    for (Semantics s : kAllSemantics) {
      const auto native_exts = extensions(native.graph, s, opts.limits);
      std::vector<Formula> conclusions;
      for (const auto& a : native.arguments) conclusions.push_back(a.conclusion);
      for (EntailmentMode m : kAllModes) {
        for (const auto& q : queries) {
          const bool aba = evaluate_entailment(native_exts, conclusions, m, q).holds;
          const bool sequent = seq.query(s, m, q).holds;
          const std::string status = tally.record(aba == sequent);
          if (opts.json) {
            rows.push_back(Json{{"property", "translation"},
                                {"semantics", to_string(s)},
                                {"mode", to_string(m)},
                                {"query", q.str()},
                                {"aba", aba},
                                {"sequent", sequent},
                                {"status", status}});
          } else {
            out << "translation " << to_string(s) << " " << to_string(m) << " " << q.str() << ": aba=" << yes_no(aba)
                << " sequent=" << yes_no(sequent) << " " << status << "\n";
          }
        }
      }
    }

    const std::size_t bound = opts.contraposition_bound.value_or(p.strict.size() + p.assumptions.size());
    const ContrapositionReport report = check_contraposition(af, bound, opts.limits);
    contraposition = Json{{"holds", report.holds}, {"counterexample", report.counterexample}};
    if (!report.holds) {
      if (!opts.json) out << "contraposition fails: " << report.counterexample << "\n";
      for (EntailmentMode m : kAllModes) {
        for (const auto& q : queries) {
          ++tally.skip;
          if (opts.json) {
            rows.push_back(Json{{"property", "mcs"}, {"mode", to_string(m)}, {"query", q.str()}, {"status", "SKIP"}});
          } else {
            out << "mcs " << to_string(m) << " " << q.str() << ": SKIP\n";
          }
        }
      }
    } else if (af.mode == DeductionMode::CoreLogic && is_negation_map(af)) {
      const McsFamily family = mcs_with_assumptions(p.strict, p.assumptions, opts.limits);
      mcs_rows([&](const Formula& q, EntailmentMode m) { return family_entails(family, q, m, opts.limits); });
    } else {
      const auto family = aba_mcs(af, opts.limits);
      mcs_rows([&](const Formula& q, EntailmentMode m) { return aba_mcs_entails(af, family, q, m, opts.limits); });
    }
  }

  if (opts.json) {
    out << Json{{"mode", to_string(p.mode)},
                {"contraposition", contraposition},
                {"rows", rows},
                {"summary", {{"pass", tally.pass}, {"fail", tally.fail}, {"skip", tally.skip}}}}
               .dump(2)
        << "\n";
  } else {
    out << "summary: " << tally.pass << " pass, " << tally.fail << " fail, " << tally.skip << " skip\n";
  }
  return tally.fail > 0 ? kExitCheckFailed : kExitOk;
}

int run_command(const std::string& command, const std::string& path, const CommandOptions& opts, std::ostream& out,
                std::ostream& err) {
  try {
    const Problem p = load_problem(path);
    if (command == "args") return cmd_args(p, opts, out);
    if (command == "attacks") return cmd_attacks(p, opts, out);
    if (command == "extensions") return cmd_extensions(p, opts, out);
    if (command == "entails") return cmd_entails(p, opts, out);
    if (command == "mcs") return cmd_mcs(p, opts, out);
    if (command == "check") return cmd_check(p, opts, out);
    err << "error: unknown command '" << command << "'\n";
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << path << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << path << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << path << ": " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace seqarg
