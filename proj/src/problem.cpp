#include "seqarg/problem.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "seqarg/classical.hpp"
#include "seqarg/error.hpp"

namespace seqarg {

std::string to_string(ProblemMode m) {
  switch (m) {
    case ProblemMode::Flat: return "flat";
    case ProblemMode::Assumptive: return "assumptive";
    case ProblemMode::Aba: return "aba";
  }
  return "?";
}

std::vector<AttackRule> Problem::effective_attacks() const {
  if (!attacks.empty()) return attacks;
  return {mode == ProblemMode::Flat ? AttackRule::Ucut : AttackRule::AtAba};
}

ContraryMap Problem::contrary_map() const {
  ContraryMap m = ContraryMap::negation(assumptions);
  for (const auto& [a, c] : contraries) m.set(a, c);
  return m;
}

AbaFramework Problem::aba_framework() const {
  AbaFramework af;
  af.mode = mode == ProblemMode::Aba ? deduction : DeductionMode::CoreLogic;
  af.rules = rules;
  af.strict = strict;
  af.assumptions = assumptions;
  af.contrary = contrary_map();
  return af;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

class LineParser {
 public:
  LineParser(std::size_t line, std::string_view text) : line_(line), text_(text) {}

  [[noreturn]] void fail(const std::string& message) const { throw InputError(line_, message); }

  Formula formula(std::string_view part) const {
    const std::string_view t = trim(part);
    if (t.empty()) fail("empty formula");
    try {
      return parse(t);
    } catch (const ParseError& e) {
      const auto column = static_cast<std::size_t>(t.data() - text_.data()) + e.offset() + 1;
      fail("column " + std::to_string(column) + ": expected " + e.expected() + ", found " + e.found());
    }
  }

  // Splits at depth-0 occurrences of `sep`.
  std::vector<std::string_view> split(std::string_view s, char sep) const {
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (s[i] == sep && depth == 0) {
        out.push_back(s.substr(start, i - start));
        start = i + 1;
      }
    }
    out.push_back(s.substr(start));
    return out;
  }

  std::vector<Formula> formula_list(std::string_view value) const {
    std::vector<Formula> out;
    if (trim(value).empty()) return out;
    for (auto part : split(value, ';')) out.push_back(formula(part));
    return out;
  }

  InferenceRule rule(std::string_view value) const {
    int depth = 0;
    std::size_t arrow = std::string_view::npos;
    for (std::size_t i = 0; i + 1 < value.size(); ++i) {
      if (value[i] == '(') ++depth;
      if (value[i] == ')') --depth;
      if (depth == 0 && value[i] == '-' && value[i + 1] == '>' && (i == 0 || value[i - 1] != '<')) {
        arrow = i;
        break;
      }
    }
    if (arrow == std::string_view::npos) fail("rule needs '->'");
    InferenceRule r{{}, formula(value.substr(arrow + 2))};
    const std::string_view body = value.substr(0, arrow);
    if (!trim(body).empty()) {
      for (auto part : split(body, ',')) r.body.push_back(formula(part));
    }
    return r;
  }

 private:
  std::size_t line_;
  std::string_view text_;
};

}  // namespace

Problem parse_problem(std::string_view text) {
  Problem p;
  std::optional<ProblemMode> framework_mode;
  std::optional<DeductionMode> deduction_mode;
  std::size_t first_rule_line = 0, first_contrary_line = 0, first_assumption_line = 0;
  std::vector<std::size_t> contrary_lines;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    LineParser lp(line_no, raw);

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) lp.fail("expected 'key: value'");
    const std::string key(trim(line.substr(0, colon)));
    const std::string_view value = line.substr(colon + 1);
    const std::string word(trim(value));

    if (key == "mode") {
      if (word == "flat" || word == "assumptive" || word == "aba") {
        if (framework_mode) lp.fail("framework mode given twice");
        framework_mode = word == "flat" ? ProblemMode::Flat
                         : word == "assumptive" ? ProblemMode::Assumptive
                                                : ProblemMode::Aba;
      } else if (word == "core-logic" || word == "rule-system") {
        if (deduction_mode) lp.fail("deduction mode given twice");
        deduction_mode = word == "core-logic" ? DeductionMode::CoreLogic : DeductionMode::RuleSystem;
      } else {
        lp.fail("unknown mode '" + word + "'");
      }
    } else if (key == "strict") {
      for (auto& f : lp.formula_list(value)) p.strict.insert(std::move(f));
    } else if (key == "assumptions") {
      if (first_assumption_line == 0) first_assumption_line = line_no;
      for (auto& f : lp.formula_list(value)) p.assumptions.insert(std::move(f));
    } else if (key == "contrary") {
      const auto def = value.find(":=");
      if (def == std::string_view::npos) lp.fail("contrary needs 'assumption := formula'");
      Formula a = lp.formula(value.substr(0, def));
      Formula c = lp.formula(value.substr(def + 2));
      for (const auto& [prev, unused] : p.contraries) {
        if (prev == a) lp.fail("contrary of " + a.str() + " given twice");
      }
      if (first_contrary_line == 0) first_contrary_line = line_no;
      p.contraries.emplace_back(std::move(a), std::move(c));
      contrary_lines.push_back(line_no);
    } else if (key == "rules") {
      if (first_rule_line == 0) first_rule_line = line_no;
      p.rules.push_back(lp.rule(value));
    } else if (key == "attack") {
      auto r = attack_rule_from_string(word);
      if (!r) lp.fail("unknown attack rule '" + word + "'");
      if (std::find(p.attacks.begin(), p.attacks.end(), *r) == p.attacks.end()) p.attacks.push_back(*r);
    } else if (key == "query") {
      p.queries.push_back(lp.formula(value));
    } else if (key == "semantics") {
      auto s = semantics_from_string(word);
      if (!s) lp.fail("unknown semantics '" + word + "'");
      p.semantics = s;
    } else if (key == "entailment") {
      auto m = entailment_mode_from_string(word);
      if (!m) lp.fail("unknown entailment mode '" + word + "'");
      p.entailment = m;
    } else {
      lp.fail("unknown key '" + key + "'");
    }
  }

  if (deduction_mode) {
    if (framework_mode && *framework_mode != ProblemMode::Aba) {
      throw InputError(0, "core-logic / rule-system modes need an aba problem");
    }
    framework_mode = ProblemMode::Aba;
    p.deduction = *deduction_mode;
  }
  p.mode = framework_mode.value_or(ProblemMode::Flat);

  if (p.strict.empty() && p.assumptions.empty()) throw InputError(0, "no strict premises or assumptions given");
  if (p.mode == ProblemMode::Flat && first_assumption_line != 0) {
    throw InputError(first_assumption_line, "assumptions need an assumptive or aba problem");
  }
  if (p.mode == ProblemMode::Flat && first_contrary_line != 0) {
    throw InputError(first_contrary_line, "contraries need an assumptive or aba problem");
  }
  if (first_rule_line != 0 && !(p.mode == ProblemMode::Aba && p.deduction == DeductionMode::RuleSystem)) {
    throw InputError(first_rule_line, "rules need 'mode: rule-system'");
  }
  for (std::size_t k = 0; k < p.contraries.size(); ++k) {
    if (!p.assumptions.contains(p.contraries[k].first)) {
      throw InputError(contrary_lines[k], p.contraries[k].first.str() + " is not an assumption");
    }
  }
  return p;
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(0, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

namespace {

bool uses_undercut(const Problem& p) {
  const auto rules = p.effective_attacks();
  return std::any_of(rules.begin(), rules.end(),
                     [](AttackRule r) { return r == AttackRule::Ucut || r == AttackRule::DUcut; });
}

}  // namespace

FormulaSet problem_pool(const Problem& p, std::span<const Formula> queries, const Limits& limits) {
  FormulaSet pool;
  std::vector<Formula> all(p.queries.begin(), p.queries.end());
  all.insert(all.end(), queries.begin(), queries.end());
  switch (p.mode) {
    case ProblemMode::Flat:
      pool = p.strict;
      for (const auto& q : all) pool.insert(q);
      if (uses_undercut(p)) pool = unite(pool, negated_conjunctions(p.strict, limits.max_premises));
      break;
    case ProblemMode::Assumptive:
      pool = unite(unite(p.strict, p.assumptions), p.contrary_map().image(p.assumptions));
      for (const auto& q : all) pool.insert(q);
      if (uses_undercut(p)) {
        pool = unite(pool, negated_conjunctions(unite(p.strict, p.assumptions), limits.max_premises));
      }
      break;
    case ProblemMode::Aba: pool = default_aba_pool(p.aba_framework(), all); break;
  }
  return pool;
}

Framework build_problem_framework(const Problem& p, const FormulaSet& pool, const Limits& limits, bool minimal) {
  UniverseOptions options;
  options.limits = limits;
  const auto rules = p.effective_attacks();
  switch (p.mode) {
    case ProblemMode::Flat: {
      if (std::count(rules.begin(), rules.end(), AttackRule::AtAba)) {
        throw ValidationError("at-aba attacks need an assumptive or aba problem");
      }
      options.require_consistent_strict = false;
      return build_framework(build_universe(p.strict, {}, pool, ClassicalLogic(limits.max_atoms), options), rules,
                             std::nullopt, limits.max_atoms);
    }
    case ProblemMode::Assumptive: {
      return build_framework(build_universe(p.strict, p.assumptions, pool, ClassicalLogic(limits.max_atoms), options),
                             rules, p.contrary_map(), limits.max_atoms);
    }
    case ProblemMode::Aba: {
      if (!p.attacks.empty() && rules != std::vector<AttackRule>{AttackRule::AtAba}) {
        throw ValidationError("aba problems use at-aba attacks only");
      }
      const AbaFramework af = p.aba_framework();
      validate(af, limits);
      return translate_to_sequent(af, pool, limits, minimal);
    }
  }
  throw ValidationError("unknown problem mode");
}

}  // namespace seqarg
