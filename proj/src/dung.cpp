#include "seqarg/dung.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "seqarg/error.hpp"

namespace seqarg {

std::string to_string(Semantics s) {
  switch (s) {
    case Semantics::Grounded: return "grd";
    case Semantics::Complete: return "cmp";
    case Semantics::Preferred: return "prf";
    case Semantics::Stable: return "stb";
  }
  return "?";
}

std::optional<Semantics> semantics_from_string(std::string_view name) {
  for (Semantics s : kAllSemantics) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

AttackGraph::AttackGraph(std::size_t size) : attackers_(size), targets_(size) {}

void AttackGraph::add_attack(std::size_t attacker, std::size_t attacked) {
  if (attacker >= size() || attacked >= size()) throw PreconditionError("attack index out of range");
  auto& in = attackers_[attacked];
  auto it = std::lower_bound(in.begin(), in.end(), attacker);
  if (it != in.end() && *it == attacker) return;
  in.insert(it, attacker);
  auto& out = targets_[attacker];
  out.insert(std::lower_bound(out.begin(), out.end(), attacked), attacked);
}

bool AttackGraph::attacks(std::size_t attacker, std::size_t attacked) const {
  const auto& in = attackers_[attacked];
  return std::binary_search(in.begin(), in.end(), attacker);
}

std::size_t AttackGraph::attack_count() const noexcept {
  std::size_t n = 0;
  for (const auto& in : attackers_) n += in.size();
  return n;
}

bool Extension::contains(std::size_t i) const { return std::binary_search(members.begin(), members.end(), i); }

namespace {

std::vector<char> membership(const AttackGraph& g, const ArgumentSet& s) {
  std::vector<char> in(g.size(), 0);
  for (std::size_t i : s) {
    if (i >= g.size()) throw PreconditionError("argument index out of range");
    in[i] = 1;
  }
  return in;
}

bool set_attacks(const AttackGraph& g, const std::vector<char>& in, std::size_t target) {
  for (std::size_t a : g.attackers_of(target)) {
    if (in[a]) return true;
  }
  return false;
}

bool set_defends(const AttackGraph& g, const std::vector<char>& in, std::size_t i) {
  for (std::size_t attacker : g.attackers_of(i)) {
    if (!set_attacks(g, in, attacker)) return false;
  }
  return true;
}

bool conflict_free(const AttackGraph& g, const std::vector<char>& in) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (in[i] && set_attacks(g, in, i)) return false;
  }
  return true;
}

}  // namespace

bool is_conflict_free(const AttackGraph& g, const ArgumentSet& s) { return conflict_free(g, membership(g, s)); }

bool defends(const AttackGraph& g, const ArgumentSet& s, std::size_t i) {
  return set_defends(g, membership(g, s), i);
}

bool is_admissible(const AttackGraph& g, const ArgumentSet& s) {
  const auto in = membership(g, s);
  if (!conflict_free(g, in)) return false;
  return std::all_of(s.begin(), s.end(), [&](std::size_t i) { return set_defends(g, in, i); });
}

bool is_complete(const AttackGraph& g, const ArgumentSet& s) {
  const auto in = membership(g, s);
  if (!conflict_free(g, in)) return false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (static_cast<bool>(in[i]) != set_defends(g, in, i)) return false;
  }
  return true;
}

bool attacks_all_outside(const AttackGraph& g, const ArgumentSet& s) {
  const auto in = membership(g, s);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!in[i] && !set_attacks(g, in, i)) return false;
  }
  return true;
}

bool is_stable(const AttackGraph& g, const ArgumentSet& s) { return is_complete(g, s) && attacks_all_outside(g, s); }

void sort_extensions(std::vector<Extension>& exts) {
  std::sort(exts.begin(), exts.end(), [](const Extension& a, const Extension& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
}

Extension grounded_extension(const AttackGraph& g) {
  const std::size_t n = g.size();
  // Unlabelled attackers remaining per argument; an argument goes IN when the
  // count reaches zero and OUT as soon as one attacker is IN.
  std::vector<std::size_t> pending(n);
  std::vector<char> label(n, 0);  // 0 undecided, 1 in, 2 out
  std::vector<std::size_t> work;
  for (std::size_t i = 0; i < n; ++i) {
    pending[i] = g.attackers_of(i).size();
    if (pending[i] == 0) {
      label[i] = 1;
      work.push_back(i);
    }
  }
  while (!work.empty()) {
    const std::size_t x = work.back();
    work.pop_back();
    for (std::size_t t : g.targets_of(x)) {
      if (label[x] == 1) {
        if (label[t] == 0) {
          label[t] = 2;
          work.push_back(t);
        }
      } else if (label[t] == 0 && --pending[t] == 0) {
        label[t] = 1;
        work.push_back(t);
      }
    }
  }
  Extension e{{}, Semantics::Grounded};
  for (std::size_t i = 0; i < n; ++i) {
    if (label[i] == 1) e.members.push_back(i);
  }
  return e;
}

namespace {

// Domains of a complete labelling: IN iff every attacker is OUT, OUT iff some
// attacker is IN, UNDEC otherwise.
constexpr std::uint8_t kIn = 1;
constexpr std::uint8_t kOut = 2;
constexpr std::uint8_t kUndec = 4;

class LabellingSearch {
 public:
  explicit LabellingSearch(const AttackGraph& g) : g_(g), queued_(g.size(), 0) {}

  std::vector<ArgumentSet> run() {
    std::vector<std::uint8_t> dom(g_.size(), kIn | kOut | kUndec);
    std::vector<std::size_t> seeds(g_.size());
    for (std::size_t i = 0; i < g_.size(); ++i) seeds[i] = i;
    if (propagate(dom, seeds)) search(std::move(dom));
    return std::move(found_);
  }

 private:
  bool restrict(std::vector<std::uint8_t>& dom, std::size_t i, std::uint8_t allowed) {
    const std::uint8_t next = dom[i] & allowed;
    if (next == dom[i]) return true;
    dom[i] = next;
    if (next == 0) return false;
    touch(i);
    return true;
  }

  void touch(std::size_t i) {
    enqueue(i);
    for (std::size_t t : g_.targets_of(i)) enqueue(t);
  }

  void enqueue(std::size_t i) {
    if (queued_[i]) return;
    queued_[i] = 1;
    queue_.push_back(i);
  }

  // Prunes the domain of x and of its attackers against the labelling
  // condition of x.
  bool revise(std::vector<std::uint8_t>& dom, std::size_t x) {
    const auto& ys = g_.attackers_of(x);
    bool all_can_out = true, some_can_in = false, all_can_not_in = true, some_can_undec = false;
    for (std::size_t y : ys) {
      all_can_out = all_can_out && (dom[y] & kOut);
      some_can_in = some_can_in || (dom[y] & kIn);
      all_can_not_in = all_can_not_in && (dom[y] & (kOut | kUndec));
      some_can_undec = some_can_undec || (dom[y] & kUndec);
    }
    std::uint8_t allowed = 0;
    if (all_can_out) allowed |= kIn;
    if (some_can_in) allowed |= kOut;
    if (all_can_not_in && some_can_undec) allowed |= kUndec;
    if (!restrict(dom, x, allowed)) return false;

    const std::uint8_t dx = dom[x];
    if (dx == kIn) {
      for (std::size_t y : ys) {
        if (!restrict(dom, y, kOut)) return false;
      }
      return true;
    }
    if (!(dx & kOut)) {
      for (std::size_t y : ys) {
        if (!restrict(dom, y, kOut | kUndec)) return false;
      }
    }
    if (!(dx & kIn)) {
      // Some attacker is not OUT.
      if (!single_support(dom, ys, kIn | kUndec, kIn | kUndec)) return false;
    }
    if (dx == kOut) {
      if (!single_support(dom, ys, kIn, kIn)) return false;
    }
    if (dx == kUndec) {
      if (!single_support(dom, ys, kUndec, kUndec)) return false;
    }
    return true;
  }

  // At least one attacker must take a value in `need`; when only one
  // candidate remains it is restricted to `keep`.
  bool single_support(std::vector<std::uint8_t>& dom, const std::vector<std::size_t>& ys, std::uint8_t need,
                      std::uint8_t keep) {
    std::size_t count = 0, last = 0;
    for (std::size_t y : ys) {
      if (dom[y] & need) {
        ++count;
        last = y;
      }
    }
    if (count == 0) return false;
    if (count == 1) return restrict(dom, last, keep);
    return true;
  }

  bool propagate(std::vector<std::uint8_t>& dom, const std::vector<std::size_t>& seeds) {
    for (std::size_t s : seeds) enqueue(s);
    bool ok = true;
    while (!queue_.empty()) {
      const std::size_t x = queue_.back();
      queue_.pop_back();
      queued_[x] = 0;
      if (ok && !revise(dom, x)) ok = false;
    }
    return ok;
  }

  void search(std::vector<std::uint8_t> dom) {
    // Fewest remaining labels first, then most attacks in or out.
    std::size_t pick = g_.size();
    std::size_t best_width = 4, best_degree = 0;
    for (std::size_t i = 0; i < g_.size(); ++i) {
      const std::size_t width = std::popcount(dom[i]);
      if (width < 2) continue;
      const std::size_t degree = g_.attackers_of(i).size() + g_.targets_of(i).size();
      if (width < best_width || (width == best_width && degree > best_degree)) {
        pick = i;
        best_width = width;
        best_degree = degree;
      }
    }
    if (pick == g_.size()) {
      record(dom);
      return;
    }
    for (std::uint8_t v : {kIn, kOut, kUndec}) {
      if (!(dom[pick] & v)) continue;
      std::vector<std::uint8_t> next = dom;
      next[pick] = v;
      std::vector<std::size_t> seeds{pick};
      seeds.insert(seeds.end(), g_.targets_of(pick).begin(), g_.targets_of(pick).end());
      if (propagate(next, seeds)) search(std::move(next));
    }
  }

  void record(const std::vector<std::uint8_t>& dom) {
    ArgumentSet in;
    for (std::size_t i = 0; i < dom.size(); ++i) {
      if (dom[i] == kIn) in.push_back(i);
    }
    if (!is_complete(g_, in)) throw std::logic_error("labelling search produced a non-complete set");
    found_.push_back(std::move(in));
  }

  const AttackGraph& g_;
  std::vector<char> queued_;
  std::vector<std::size_t> queue_;
  std::vector<ArgumentSet> found_;
};

std::vector<Extension> tag(std::vector<ArgumentSet> sets, Semantics s) {
  std::vector<Extension> out;
  out.reserve(sets.size());
  for (auto& m : sets) out.push_back({std::move(m), s});
  sort_extensions(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Extension> complete_extensions(const AttackGraph& g, const Limits& limits) {
  if (g.size() > limits.max_search_arguments) {
    throw ResourceError("framework with " + std::to_string(g.size()) + " arguments exceeds the search cap of " +
                        std::to_string(limits.max_search_arguments));
  }
  return tag(LabellingSearch(g).run(), Semantics::Complete);
}

std::vector<Extension> preferred_among(const std::vector<Extension>& complete) {
  std::vector<Extension> out;
  for (const auto& e : complete) {
    bool maximal = true;
    for (const auto& f : complete) {
      if (f.members.size() > e.members.size() &&
          std::includes(f.members.begin(), f.members.end(), e.members.begin(), e.members.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back({e.members, Semantics::Preferred});
  }
  return out;
}

std::vector<Extension> stable_among(const AttackGraph& g, const std::vector<Extension>& complete) {
  std::vector<Extension> out;
  for (const auto& e : complete) {
    if (attacks_all_outside(g, e.members)) out.push_back({e.members, Semantics::Stable});
  }
  return out;
}

std::vector<Extension> preferred_extensions(const AttackGraph& g, const Limits& limits) {
  return preferred_among(complete_extensions(g, limits));
}

std::vector<Extension> stable_extensions(const AttackGraph& g, const Limits& limits) {
  return stable_among(g, complete_extensions(g, limits));
}

std::vector<Extension> extensions(const AttackGraph& g, Semantics s, const Limits& limits) {
  switch (s) {
    case Semantics::Grounded: return {grounded_extension(g)};
    case Semantics::Complete: return complete_extensions(g, limits);
    case Semantics::Preferred: return preferred_extensions(g, limits);
    case Semantics::Stable: return stable_extensions(g, limits);
  }
  return {};
}

std::vector<Extension> complete_extensions_bruteforce(const AttackGraph& g, const Limits& limits) {
  const std::size_t n = g.size();
  if (n > limits.max_bruteforce_arguments || n > 31) {
    throw ResourceError("framework with " + std::to_string(n) + " arguments exceeds the brute-force cap of " +
                        std::to_string(limits.max_bruteforce_arguments));
  }
  std::vector<std::uint32_t> attackers(n, 0), targets(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a : g.attackers_of(i)) {
      attackers[i] |= std::uint32_t{1} << a;
      targets[a] |= std::uint32_t{1} << i;
    }
  }
  auto defended = [&](std::uint32_t s, std::size_t x) {
    for (std::size_t y : g.attackers_of(x)) {
      if ((attackers[y] & s) == 0) return false;
    }
    return true;
  };

  std::vector<ArgumentSet> found;
  // Depth-first over conflict-free sets only.
  auto visit = [&](auto&& self, std::size_t i, std::uint32_t s) -> void {
    if (i == n) {
      for (std::size_t x = 0; x < n; ++x) {
        if (static_cast<bool>(s >> x & 1U) != defended(s, x)) return;
      }
      ArgumentSet members;
      for (std::size_t x = 0; x < n; ++x) {
        if (s >> x & 1U) members.push_back(x);
      }
      found.push_back(std::move(members));
      return;
    }
    self(self, i + 1, s);
    const std::uint32_t bit = std::uint32_t{1} << i;
    if (((attackers[i] | targets[i]) & (s | bit)) == 0) self(self, i + 1, s | bit);
  };
  visit(visit, 0, 0);
  return tag(std::move(found), Semantics::Complete);
}

}  // namespace seqarg
