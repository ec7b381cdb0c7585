#include "gfg/strategy.hpp"

#include <algorithm>
#include <set>

#include "gfg/emptiness.hpp"
#include "gfg/errors.hpp"
#include "gfg/language.hpp"

namespace gfg {

StrategyTransducer::StrategyTransducer(std::string name, std::string automaton, std::vector<std::string> memories,
                                       std::vector<StateId> output, MemoryId initial, std::size_t num_letters,
                                       std::vector<std::tuple<MemoryId, LetterId, MemoryId>> steps)
    : name_(std::move(name)),
      automaton_(std::move(automaton)),
      memories_(std::move(memories)),
      output_(std::move(output)),
      initial_(initial),
      num_letters_(num_letters) {
  if (memories_.empty()) throw StructuralError("strategy '" + name_ + "' has no memories");
  if (output_.size() != memories_.size()) throw StructuralError("strategy output must be total on memories");
  std::set<std::string_view> seen;
  for (const auto& m : memories_) {
    if (m.empty()) throw StructuralError("empty memory name");
    if (!seen.insert(m).second) throw StructuralError("duplicate memory '" + m + "'");
  }
  if (initial_ >= memories_.size()) throw StructuralError("initial memory is not declared");
  step_.assign(memories_.size() * num_letters_, kUndefined);
  for (const auto& [m, l, t] : steps) {
    if (m >= memories_.size() || t >= memories_.size() || l >= num_letters_)
      throw StructuralError("strategy step references an undeclared memory or letter");
    auto& slot = step_[m * num_letters_ + l];
    if (slot != kUndefined && slot != t)
      throw StructuralError("strategy step for (" + memories_[m] + ", letter " + std::to_string(l) +
                            ") defined twice");
    slot = t;
  }
}

std::vector<std::tuple<MemoryId, LetterId, MemoryId>> StrategyTransducer::steps() const {
  std::vector<std::tuple<MemoryId, LetterId, MemoryId>> out;
  for (MemoryId m = 0; m < memories_.size(); ++m)
    for (LetterId l = 0; l < num_letters_; ++l)
      if (auto t = step(m, l)) out.emplace_back(m, l, *t);
  return out;
}

std::optional<MemoryId> StrategyTransducer::find_memory(std::string_view name) const {
  for (MemoryId m = 0; m < memories_.size(); ++m)
    if (memories_[m] == name) return m;
  return std::nullopt;
}

StrategyTransducer StrategyTransducer::with_name(std::string name) const {
  StrategyTransducer copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

StrategyTransducer StrategyTransducer::merged(MemoryId m, MemoryId into) const {
  if (m == into) throw PreconditionError("cannot merge a memory into itself");
  std::vector<MemoryId> renumber(memories_.size());
  std::vector<std::string> names;
  std::vector<StateId> out;
  for (MemoryId i = 0; i < memories_.size(); ++i) {
    if (i == m) continue;
    renumber[i] = static_cast<MemoryId>(names.size());
    names.push_back(memories_[i]);
    out.push_back(output_[i]);
  }
  auto target = [&](MemoryId t) { return renumber[t == m ? into : t]; };
  std::vector<std::tuple<MemoryId, LetterId, MemoryId>> new_steps;
  for (const auto& [src, l, t] : steps())
    if (src != m) new_steps.emplace_back(renumber[src], l, target(t));
  return StrategyTransducer(name_, automaton_, std::move(names), std::move(out), target(initial_), num_letters_,
                            std::move(new_steps));
}

StrategyTransducer StrategyTransducer::restricted_to(const StateSet& keep) const {
  if (!keep.contains(initial_)) throw PreconditionError("restriction drops the initial memory");
  std::vector<MemoryId> renumber(memories_.size(), kUndefined);
  std::vector<std::string> names;
  std::vector<StateId> out;
  for (MemoryId i = 0; i < memories_.size(); ++i) {
    if (!keep.contains(i)) continue;
    renumber[i] = static_cast<MemoryId>(names.size());
    names.push_back(memories_[i]);
    out.push_back(output_[i]);
  }
  std::vector<std::tuple<MemoryId, LetterId, MemoryId>> new_steps;
  for (const auto& [src, l, t] : steps())
    if (keep.contains(src) && keep.contains(t)) new_steps.emplace_back(renumber[src], l, renumber[t]);
  return StrategyTransducer(name_, automaton_, std::move(names), std::move(out), renumber[initial_], num_letters_,
                            std::move(new_steps));
}

StrategyTransducer make_strategy(const Automaton& a, std::string name,
                                 const std::vector<std::pair<std::string, std::string>>& memories,
                                 const std::string& initial,
                                 const std::vector<std::tuple<std::string, std::string, std::string>>& steps) {
  std::vector<std::string> names;
  std::vector<StateId> out;
  for (const auto& [m, q] : memories) {
    auto s = a.find_state(q);
    if (!s) throw StructuralError("memory '" + m + "' outputs undeclared state '" + q + "'");
    names.push_back(m);
    out.push_back(*s);
  }
  auto mem = [&](const std::string& m) {
    for (MemoryId i = 0; i < names.size(); ++i)
      if (names[i] == m) return i;
    throw StructuralError("undeclared memory '" + m + "'");
  };
  std::vector<std::tuple<MemoryId, LetterId, MemoryId>> st;
  for (const auto& [m, l, t] : steps) {
    auto letter = a.find_letter(l);
    if (!letter) throw StructuralError("undeclared letter '" + l + "'");
    st.emplace_back(mem(m), *letter, mem(t));
  }
  StrategyTransducer g(std::move(name), a.name(), names, std::move(out), mem(initial), a.num_letters(),
                       std::move(st));
  validate_strategy(a, g);
  return g;
}

StrategyTransducer identity_strategy(const Automaton& d) {
  if (!is_deterministic(d)) throw PreconditionError("identity strategy needs a deterministic automaton");
  std::vector<StateId> out;
  std::vector<std::tuple<MemoryId, LetterId, MemoryId>> st;
  for (StateId q = 0; q < d.num_states(); ++q) out.push_back(q);
  for (const auto& t : d.transitions()) st.emplace_back(t.src, t.letter, t.dst);
  return StrategyTransducer("id_" + d.name(), d.name(), d.states(), std::move(out), d.initial().front(),
                            d.num_letters(), std::move(st));
}

void validate_strategy(const Automaton& a, const StrategyTransducer& g) {
  if (g.num_letters() != a.num_letters()) throw StructuralError("strategy alphabet differs from the automaton's");
  for (MemoryId m = 0; m < g.size(); ++m)
    if (g.output(m) >= a.num_states())
      throw StructuralError("memory '" + g.memory_name(m) + "' outputs an undeclared state");
  if (!a.is_initial(g.output(g.initial())))
    throw StructuralError("initial memory '" + g.memory_name(g.initial()) + "' does not output an initial state");
  for (const auto& [m, l, t] : g.steps()) {
    const Transition tr{g.output(m), l, g.output(t)};
    if (!a.has_transition(tr))
      throw StructuralError("step (" + g.memory_name(m) + ", " + a.letter_name(l) + ") leaves δ: " +
                            a.describe(tr) + " is not a transition");
  }
}

Digraph ComposedAutomaton::reachable_graph() const {
  Digraph g = automaton.graph();
  for (StateId v = 0; v < g.size(); ++v) {
    if (!reachable.contains(v)) g[v].clear();
  }
  return g;
}

StateSet ComposedAutomaton::memories_of(StateId q) const {
  StateSet s(tau.size());
  reachable.for_each([&](StateId m) {
    if (tau[m] == q) s.insert(m);
  });
  return s;
}

ComposedAutomaton compose(const Automaton& a, const StrategyTransducer& g) {
  validate_strategy(a, g);
  std::vector<Transition> trans;
  for (const auto& [m, l, t] : g.steps()) trans.push_back({m, l, t});
  Automaton ag(a.name() + "_" + g.name(), a.alphabet(), g.memories(), {g.initial()}, std::move(trans),
               lift(a.acceptance(), g.outputs()));
  StateSet reach = reachable(ag, ag.initial_set());
  return {std::move(ag), g.outputs(), std::move(reach)};
}

std::vector<std::size_t> used_transitions(const Automaton& a, const StrategyTransducer& g) {
  const auto ag = compose(a, g);
  std::vector<std::size_t> out;
  for (const auto& [m, l, t] : g.steps()) {
    if (!ag.reachable.contains(m)) continue;
    out.push_back(*a.transition_index({g.output(m), l, g.output(t)}));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void path_combination_sets(const ComposedAutomaton& ag, MemoryId from, MemoryId to,
                           const std::function<bool(const StateSet&)>& emit, std::size_t cap) {
  const Digraph g = ag.reachable_graph();
  const std::size_t n = g.size();
  if (!ag.reachable.contains(from) || !ag.reachable.contains(to)) return;
  const StateSet region = reachable(g, StateSet(n, {from})) & coreachable(g, StateSet(n, {to}));
  if (!region.contains(from) || !region.contains(to)) return;
  std::vector<StateId> free;
  region.for_each([&](StateId v) {
    if (v != from && v != to) free.push_back(v);
  });
  if (free.size() + 2 > cap)
    throw CapExceeded("enumeration cap: path region of " + std::to_string(free.size() + 2) +
                      " memories exceeds cap " + std::to_string(cap));
  const std::uint64_t limit = std::uint64_t{1} << free.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    StateSet x(n, {from, to});
    for (std::size_t i = 0; i < free.size(); ++i)
      if ((mask >> i) & 1u) x.insert(free[i]);
    const StateSet fwd = reachable(g, StateSet(n, {from}), x);
    if (!x.is_subset_of(fwd)) continue;
    const StateSet bwd = coreachable(g, StateSet(n, {to}), x);
    if (!x.is_subset_of(bwd)) continue;
    if (!emit(x)) return;
  }
}

std::vector<StateSet> path_combination_sets(const ComposedAutomaton& ag, MemoryId from, MemoryId to,
                                            std::size_t cap) {
  std::vector<StateSet> out;
  path_combination_sets(
      ag, from, to,
      [&](const StateSet& x) {
        out.push_back(x);
        return true;
      },
      cap);
  return out;
}

namespace {

void check_replaceable_args(const ComposedAutomaton& ag, MemoryId m, MemoryId m2) {
  if (m == m2) throw PreconditionError("replaceability needs two distinct memories");
  if (ag.tau.at(m) != ag.tau.at(m2))
    throw PreconditionError("memories '" + ag.automaton.state_name(m) + "' and '" + ag.automaton.state_name(m2) +
                            "' output different states");
}

// Memories on some from→to walk within `nodes`.
StateSet between(const Digraph& g, MemoryId from, MemoryId to, const StateSet& nodes) {
  const std::size_t n = g.size();
  if (!nodes.contains(from) || !nodes.contains(to)) return StateSet(n);
  const StateSet fwd = reachable(g, StateSet(n, {from}), nodes);
  if (!fwd.contains(to)) return StateSet(n);
  return fwd & coreachable(g, StateSet(n, {to}), nodes);
}

}  // namespace

bool replaceable(const ComposedAutomaton& ag, MemoryId m, MemoryId m2) {
  check_replaceable_args(ag, m, m2);
  const Digraph g = ag.reachable_graph();
  const StateSet& live = ag.reachable;
  const auto& acc = ag.automaton.acceptance();

  if (kind_of(acc) != AcceptanceKind::rabin) {
    // Streett-accepting sets are closed under union: check single walks, pair by pair.
    for (const auto& p : streett_pairs(acc)) {
      const StateSet on_walk = between(g, m2, m, live - p.good);
      if (on_walk.intersects(p.bad)) return false;
    }
    return true;
  }

  const auto& pairs = std::get<Rabin>(acc).pairs;
  const std::size_t k = pairs.size();
  if (k > 20) throw CapExceeded("enumeration cap: Rabin index " + std::to_string(k) + " too large");
  for (std::uint64_t avoid = 0; avoid < (std::uint64_t{1} << k); ++avoid) {
    StateSet nodes = live;
    for (std::size_t i = 0; i < k; ++i)
      if ((avoid >> i) & 1u) nodes -= pairs[i].good;
    const StateSet on_walk = between(g, m2, m, nodes);
    if (on_walk.empty()) continue;
    bool rejecting = true;
    for (std::size_t i = 0; i < k && rejecting; ++i)
      if (((avoid >> i) & 1u) == 0 && !on_walk.intersects(pairs[i].bad)) rejecting = false;
    if (rejecting) return false;
  }
  return true;
}

bool replaceable_by_enumeration(const ComposedAutomaton& ag, MemoryId m, MemoryId m2, std::size_t cap) {
  check_replaceable_args(ag, m, m2);
  bool ok = true;
  path_combination_sets(
      ag, m2, m,
      [&](const StateSet& x) {
        if (!satisfies(ag.automaton.acceptance(), x)) ok = false;
        return ok;
      },
      cap);
  return ok;
}

TightnessReport check_tightness(const Automaton& a, const StrategyTransducer& g) {
  TightnessReport r;
  const auto used = used_transitions(a, g);
  for (std::size_t i = 0; i < a.transitions().size(); ++i) {
    if (!std::binary_search(used.begin(), used.end(), i)) {
      r.weakly_tight = r.tight = false;
      r.unused_transition = i;
      r.diagnostic = "unused transition " + a.describe(a.transitions()[i]);
      return r;
    }
  }
  const auto ag = compose(a, g);
  for (MemoryId m : ag.reachable.elements()) {
    for (MemoryId m2 : ag.reachable.elements()) {
      if (m == m2 || ag.tau[m] != ag.tau[m2]) continue;
      if (replaceable(ag, m, m2)) {
        r.tight = false;
        r.replaceable_pair = {m, m2};
        r.diagnostic = g.memory_name(m) + " replaceable by " + g.memory_name(m2);
        return r;
      }
    }
  }
  return r;
}

bool is_tight(const Automaton& a, const StrategyTransducer& g) { return check_tightness(a, g).tight; }

bool is_weakly_tight(const Automaton& a, const StrategyTransducer& g) {
  return used_transitions(a, g).size() == a.transitions().size();
}

std::optional<StateSet> q_exclusive_accepting_cycle(const ComposedAutomaton& ag, StateId q, std::size_t cap) {
  const StateSet mine = ag.memories_of(q);
  if (mine.empty()) return std::nullopt;
  const Acceptance acc = as_rabin(ag.automaton.acceptance());
  Rabin without = std::get<Rabin>(acc);
  for (auto& p : without.pairs) p.good -= mine;
  std::optional<StateSet> found;
  cycle_sets(
      ag.reachable_graph(), ag.reachable, std::nullopt,
      [&](const StateSet& c) {
        if (!c.intersects(mine) || !satisfies(acc, c) || satisfies(without, c)) return true;
        found = c;
        return false;
      },
      cap);
  return found;
}

StrongTightnessReport check_strong_tightness(const Automaton& a, const StrategyTransducer& g) {
  if (kind_of(a.acceptance()) == AcceptanceKind::streett)
    throw PreconditionError("strong tightness is defined for Rabin conditions; got Streett");
  const Automaton ra = a.with_acceptance(as_rabin(a.acceptance()));
  StrongTightnessReport r;
  r.tightness = check_tightness(ra, g);
  r.strongly_tight = r.tightness.tight;
  StateSet good(a.num_states());
  for (const auto& p : std::get<Rabin>(ra.acceptance()).pairs) good |= p.good;
  const auto ag = compose(ra, g);
  for (StateId q : good.elements())
    if (!q_exclusive_accepting_cycle(ag, q)) r.lacking_exclusive_cycle.push_back(q);
  if (!r.lacking_exclusive_cycle.empty()) r.strongly_tight = false;
  return r;
}

bool is_strongly_tight(const Automaton& a, const StrategyTransducer& g) {
  return check_strong_tightness(a, g).strongly_tight;
}

std::optional<std::pair<MemoryId, Lasso>> residual_check(const Automaton& a, const StrategyTransducer& g,
                                                         std::size_t bound) {
  const auto ag = compose(a, g);
  for (MemoryId m : ag.reachable.elements()) {
    const auto v = bounded_equiv(ag.automaton.with_initial({m}), a.with_initial({ag.tau[m]}), bound);
    if (v.kind == VerdictKind::fails) return std::make_pair(m, *v.counterexample);
  }
  return std::nullopt;
}

std::vector<std::string> lint(const Automaton& a, const StrategyTransducer& g) {
  std::vector<std::string> out;
  const auto ag = compose(a, g);
  for (MemoryId m = 0; m < g.size(); ++m) {
    if (!ag.reachable.contains(m)) {
      out.push_back("memory " + g.memory_name(m) + " is unreachable");
      continue;
    }
    for (LetterId l = 0; l < a.num_letters(); ++l) {
      if (g.step(m, l)) continue;
      for (StateId t : a.successors(g.output(m), l)) {
        if (is_empty(a.with_initial({t}))) {
          out.push_back("step (" + g.memory_name(m) + ", " + a.letter_name(l) + ") is undefined but " +
                        a.state_name(g.output(m)) + " is not stuck");
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace gfg
