#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gfg/automaton.hpp"

namespace gfg {

inline constexpr std::size_t kDefaultCycleCap = 22;

struct Component {
  std::vector<StateId> states;  // ascending
  bool nontrivial = false;      // contains a cycle
};

/// Tarjan SCC decomposition restricted to `within` (all nodes when empty optional).
/// Components are ordered by their least member.
std::vector<Component> scc_decompose(const Digraph& g, const std::optional<StateSet>& within = std::nullopt);
std::vector<Component> scc_decompose(const Automaton& a);

StateSet reachable(const Digraph& g, const StateSet& from, const std::optional<StateSet>& within = std::nullopt);
StateSet reachable(const Automaton& a, const StateSet& from);
StateSet coreachable(const Digraph& g, const StateSet& to, const std::optional<StateSet>& within = std::nullopt);

/// Whether the subgraph induced by `c` is strongly connected and contains a cycle.
bool is_cycle_set(const Digraph& g, const StateSet& c);

/// Calls `emit` on every nonempty C ⊆ restrict_to (containing `anchor` when given) whose
/// induced subgraph is strongly connected with a cycle. Order: SCC by least member, then
/// ascending bitmask within the SCC. `emit` returns false to stop early.
/// Throws CapExceeded if an SCC region to enumerate is larger than `cap`.
void cycle_sets(const Digraph& g, const StateSet& restrict_to, std::optional<StateId> anchor,
                const std::function<bool(const StateSet&)>& emit, std::size_t cap = kDefaultCycleCap);
std::vector<StateSet> cycle_sets(const Automaton& a, const StateSet& restrict_to,
                                 std::optional<StateId> anchor = std::nullopt, std::size_t cap = kDefaultCycleCap);

bool is_deterministic(const Automaton& a);
bool is_complete(const Automaton& a);

bool is_weak_shape(const Automaton& a, const StateSet& candidate);
/// First SCC (by least member) that is neither inside nor disjoint from `candidate`.
std::optional<StateSet> mixed_component(const Automaton& a, const StateSet& candidate);

}  // namespace gfg
