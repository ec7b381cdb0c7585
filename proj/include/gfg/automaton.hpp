#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gfg/acceptance.hpp"
#include "gfg/state_set.hpp"

namespace gfg {

struct Transition {
  StateId src;
  LetterId letter;
  StateId dst;
  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Adjacency lists of a directed graph over 0..n-1; no duplicate edges.
using Digraph = std::vector<std::vector<StateId>>;

/// A state-based ω-automaton ⟨Σ, Q, Q0, δ, α⟩. Immutable after construction;
/// the "with_*" members return modified copies.
class Automaton {
 public:
  /// Validates every structural invariant and throws StructuralError on violation.
  Automaton(std::string name, std::vector<std::string> alphabet, std::vector<std::string> states,
            std::vector<StateId> initial, std::vector<Transition> transitions, Acceptance acceptance);

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  const std::vector<std::string>& states() const noexcept { return states_; }
  std::size_t num_states() const noexcept { return states_.size(); }
  std::size_t num_letters() const noexcept { return alphabet_.size(); }
  const std::string& state_name(StateId q) const { return states_.at(q); }
  const std::string& letter_name(LetterId a) const { return alphabet_.at(a); }

  /// Initial states, ascending.
  const std::vector<StateId>& initial() const noexcept { return initial_; }
  StateSet initial_set() const { return StateSet(num_states(), initial_); }
  bool is_initial(StateId q) const;

  /// Transitions in declaration order.
  const std::vector<Transition>& transitions() const noexcept { return transitions_; }
  const Acceptance& acceptance() const noexcept { return acceptance_; }

  /// δ(q, a) in declaration order.
  std::span<const StateId> successors(StateId q, LetterId a) const {
    const auto& v = succ_[q * alphabet_.size() + a];
    return {v.data(), v.size()};
  }
  std::optional<std::size_t> transition_index(const Transition& t) const;
  bool has_transition(const Transition& t) const { return transition_index(t).has_value(); }

  std::optional<StateId> find_state(std::string_view name) const;
  std::optional<LetterId> find_letter(std::string_view name) const;

  /// Successor graph with letters forgotten.
  Digraph graph() const;
  StateSet all_states() const { return StateSet::full(num_states()); }

  /// "(q1,a,q2)"
  std::string describe(const Transition& t) const;
  std::string describe(const StateSet& s) const;

  Automaton with_name(std::string name) const;
  Automaton with_acceptance(Acceptance acc) const;
  Automaton with_initial(std::vector<StateId> initial) const;
  Automaton with_transitions(std::vector<Transition> transitions) const;
  /// Keeps only the given states (ascending), renumbering them in order.
  Automaton restricted_to(const StateSet& keep) const;

 private:
  std::string name_;
  std::vector<std::string> alphabet_;
  std::vector<std::string> states_;
  std::vector<StateId> initial_;
  std::vector<Transition> transitions_;
  Acceptance acceptance_;
  std::vector<std::vector<StateId>> succ_;  // indexed by q * |Σ| + a
};

/// Name-based construction, convenient for hand-written corpora and tests.
class AutomatonBuilder {
 public:
  explicit AutomatonBuilder(std::string name) : name_(std::move(name)) {}

  AutomatonBuilder& alphabet(std::vector<std::string> letters);
  AutomatonBuilder& states(std::vector<std::string> states);
  AutomatonBuilder& initial(const std::vector<std::string>& states);
  AutomatonBuilder& trans(std::string_view src, std::string_view letter, std::string_view dst);

  AutomatonBuilder& buchi(const std::vector<std::string>& accepting);
  AutomatonBuilder& cobuchi(const std::vector<std::string>& rejecting);
  AutomatonBuilder& weak(const std::vector<std::string>& accepting);
  AutomatonBuilder& parity(const std::vector<std::pair<std::string, unsigned>>& priorities);
  AutomatonBuilder& rabin_pair(const std::vector<std::string>& bad, const std::vector<std::string>& good);
  AutomatonBuilder& streett_pair(const std::vector<std::string>& bad, const std::vector<std::string>& good);
  /// Selects an empty Rabin/Streett condition (pairs may be added afterwards).
  AutomatonBuilder& rabin();
  AutomatonBuilder& streett();

  StateSet set(const std::vector<std::string>& names) const;
  StateId state(std::string_view name) const;
  LetterId letter(std::string_view name) const;

  Automaton build() const;

 private:
  std::string name_;
  std::vector<std::string> alphabet_;
  std::vector<std::string> states_;
  std::vector<StateId> initial_;
  std::vector<Transition> transitions_;
  std::optional<Acceptance> acceptance_;
};

}  // namespace gfg
