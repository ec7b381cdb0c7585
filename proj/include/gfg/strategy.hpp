#pragma once

#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gfg/automaton.hpp"
#include "gfg/graph.hpp"
#include "gfg/lasso.hpp"

namespace gfg {

using MemoryId = StateId;

/// Finite-memory strategy (M, m0, ρ, τ). ρ may be partial.
class StrategyTransducer {
 public:
  StrategyTransducer(std::string name, std::string automaton, std::vector<std::string> memories,
                     std::vector<StateId> output, MemoryId initial, std::size_t num_letters,
                     std::vector<std::tuple<MemoryId, LetterId, MemoryId>> steps);

  const std::string& name() const noexcept { return name_; }
  const std::string& automaton_name() const noexcept { return automaton_; }
  const std::vector<std::string>& memories() const noexcept { return memories_; }
  std::size_t size() const noexcept { return memories_.size(); }
  std::size_t num_letters() const noexcept { return num_letters_; }
  const std::string& memory_name(MemoryId m) const { return memories_.at(m); }
  MemoryId initial() const noexcept { return initial_; }
  /// τ
  StateId output(MemoryId m) const { return output_.at(m); }
  const std::vector<StateId>& outputs() const noexcept { return output_; }
  /// ρ(m, a) when defined.
  std::optional<MemoryId> step(MemoryId m, LetterId a) const {
    const auto v = step_[m * num_letters_ + a];
    if (v == kUndefined) return std::nullopt;
    return v;
  }
  /// Defined steps in (memory, letter) order.
  std::vector<std::tuple<MemoryId, LetterId, MemoryId>> steps() const;
  std::optional<MemoryId> find_memory(std::string_view name) const;

  StrategyTransducer with_name(std::string name) const;
  /// Removes `m`, redirecting every step into `m` (and the initial memory) to `into`.
  StrategyTransducer merged(MemoryId m, MemoryId into) const;
  /// Keeps only the given memories; steps into dropped memories become undefined.
  StrategyTransducer restricted_to(const StateSet& keep) const;

 private:
  static constexpr MemoryId kUndefined = static_cast<MemoryId>(-1);
  std::string name_;
  std::string automaton_;
  std::vector<std::string> memories_;
  std::vector<StateId> output_;
  MemoryId initial_;
  std::size_t num_letters_;
  std::vector<MemoryId> step_;
};

/// Name-based construction against an automaton; validates like `validate_strategy`.
StrategyTransducer make_strategy(const Automaton& a, std::string name,
                                 const std::vector<std::pair<std::string, std::string>>& memories,
                                 const std::string& initial,
                                 const std::vector<std::tuple<std::string, std::string, std::string>>& steps);

/// One memory per state (named after it), following δ. Requires a deterministic automaton.
StrategyTransducer identity_strategy(const Automaton& d);

/// Throws StructuralError naming the violating memory/step.
void validate_strategy(const Automaton& a, const StrategyTransducer& g);

/// A_g with the back-map τ and the memories reachable from m0.
struct ComposedAutomaton {
  Automaton automaton;
  std::vector<StateId> tau;
  StateSet reachable;

  /// Successor graph restricted to reachable memories.
  Digraph reachable_graph() const;
  StateSet memories_of(StateId q) const;  // reachable only
};

ComposedAutomaton compose(const Automaton& a, const StrategyTransducer& g);

/// Indices (into a.transitions()) of transitions used from reachable memories, ascending.
std::vector<std::size_t> used_transitions(const Automaton& a, const StrategyTransducer& g);

/// Sets X of reachable memories such that every member lies on a from→to walk inside X
/// and to is reachable from from inside X. Order: ascending bitmask over the region.
void path_combination_sets(const ComposedAutomaton& ag, MemoryId from, MemoryId to,
                           const std::function<bool(const StateSet&)>& emit, std::size_t cap = kDefaultCycleCap);
std::vector<StateSet> path_combination_sets(const ComposedAutomaton& ag, MemoryId from, MemoryId to,
                                            std::size_t cap = kDefaultCycleCap);

/// m is replaceable by m2: every combination of walks m2→m is accepting (or there is none).
bool replaceable(const ComposedAutomaton& ag, MemoryId m, MemoryId m2);
/// Same predicate by exhaustive path-combination enumeration.
bool replaceable_by_enumeration(const ComposedAutomaton& ag, MemoryId m, MemoryId m2,
                                std::size_t cap = kDefaultCycleCap);

struct TightnessReport {
  bool weakly_tight = true;
  bool tight = true;
  std::optional<std::size_t> unused_transition;                  // first, by declaration order
  std::optional<std::pair<MemoryId, MemoryId>> replaceable_pair;  // (m, by m')
  std::string diagnostic;                                         // empty when tight
};

TightnessReport check_tightness(const Automaton& a, const StrategyTransducer& g);
bool is_tight(const Automaton& a, const StrategyTransducer& g);
bool is_weakly_tight(const Automaton& a, const StrategyTransducer& g);

/// An accepting cycle set of A_g through a memory of q that stops being accepting
/// once q's memories are removed from every good set (Rabin encoding; Streett
/// conditions throw UnsupportedError).
std::optional<StateSet> q_exclusive_accepting_cycle(const ComposedAutomaton& ag, StateId q,
                                                    std::size_t cap = kDefaultCycleCap);

struct StrongTightnessReport {
  bool strongly_tight = true;
  TightnessReport tightness;
  std::vector<StateId> lacking_exclusive_cycle;  // good-set states, ascending
};

/// Parity, Büchi, co-Büchi and weak conditions are read through their Rabin encoding;
/// Streett conditions throw PreconditionError.
StrongTightnessReport check_strong_tightness(const Automaton& a, const StrategyTransducer& g);
bool is_strongly_tight(const Automaton& a, const StrategyTransducer& g);

inline constexpr std::size_t kDefaultResidualBound = 5;

/// First reachable memory m whose residual L(A_g^m) differs from L(A^τ(m)) within the bound.
std::optional<std::pair<MemoryId, Lasso>> residual_check(const Automaton& a, const StrategyTransducer& g,
                                                         std::size_t bound = kDefaultResidualBound);

/// Unreachable memories and undefined steps where the automaton is not stuck.
std::vector<std::string> lint(const Automaton& a, const StrategyTransducer& g);

}  // namespace gfg
