#include "seqarg/entailment.hpp"

#include "seqarg/error.hpp"

namespace seqarg {

std::string to_string(EntailmentMode m) {
  switch (m) {
    case EntailmentMode::Cap: return "cap";
    case EntailmentMode::Cup: return "cup";
    case EntailmentMode::WCap: return "wcap";
  }
  return "?";
}

std::optional<EntailmentMode> entailment_mode_from_string(std::string_view name) {
  for (EntailmentMode m : kAllModes) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

EntailmentResult evaluate_entailment(std::span<const Extension> exts, std::span<const Formula> conclusions,
                                     EntailmentMode mode, const Formula& goal) {
  EntailmentResult r;
  r.extension_count = exts.size();

  std::optional<std::size_t> shared;
  if (!exts.empty()) {
    for (std::size_t i : exts.front().members) {
      if (!(conclusions[i] == goal)) continue;
      bool everywhere = true;
      for (const auto& e : exts) everywhere = everywhere && e.contains(i);
      if (everywhere) {
        shared = i;
        break;
      }
    }
  }

  std::size_t hit = 0;
  for (const auto& e : exts) {
    std::optional<std::size_t> w;
    if (mode == EntailmentMode::Cap && shared) {
      w = shared;
    } else {
      for (std::size_t i : e.members) {
        if (conclusions[i] == goal) {
          w = i;
          break;
        }
      }
    }
    if (w) ++hit;
    r.witnesses.push_back(w);
  }

  switch (mode) {
    case EntailmentMode::Cap: r.holds = exts.empty() || shared.has_value(); break;
    case EntailmentMode::WCap: r.holds = hit == exts.size(); break;
    case EntailmentMode::Cup: r.holds = hit > 0; break;
  }
  return r;
}

const std::vector<Extension>& Reasoner::extensions(Semantics s) {
  auto it = cache_.find(s);
  if (it != cache_.end()) return it->second;
  std::vector<Extension> exts;
  switch (s) {
    case Semantics::Grounded: exts = {grounded_extension(framework_.graph)}; break;
    case Semantics::Complete: exts = complete_extensions(framework_.graph, limits_); break;
    case Semantics::Preferred: exts = preferred_among(extensions(Semantics::Complete)); break;
    case Semantics::Stable: exts = stable_among(framework_.graph, extensions(Semantics::Complete)); break;
  }
  return cache_.emplace(s, std::move(exts)).first->second;
}

EntailmentResult Reasoner::query(Semantics s, EntailmentMode mode, const Formula& goal) {
  if (!framework_.universe.pool().contains(goal)) {
    throw PoolMissError("query " + goal.str() + " is not in the conclusion pool");
  }
  if (conclusions_.empty()) {
    for (const auto& a : framework_.universe) conclusions_.push_back(a.conclusion());
  }
  return evaluate_entailment(extensions(s), conclusions_, mode, goal);
}

bool entails(const Framework& framework, Semantics s, EntailmentMode mode, const Formula& goal,
             const Limits& limits) {
  return Reasoner(framework, limits).query(s, mode, goal).holds;
}

}  // namespace seqarg
