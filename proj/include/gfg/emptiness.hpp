#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gfg/automaton.hpp"
#include "gfg/lasso.hpp"

namespace gfg {

/// Letter-labelled graph with initial nodes; the carrier of products.
struct LabeledGraph {
  std::size_t num_letters = 0;
  std::vector<std::vector<std::pair<LetterId, StateId>>> out;
  std::vector<StateId> initial;

  std::size_t size() const noexcept { return out.size(); }
  Digraph digraph() const;
};

LabeledGraph labeled_graph(const Automaton& a);

/// One disjunct: a nonempty inf-set S satisfies it iff S ∩ removed = ∅ and S
/// satisfies the Streett pairs.
struct StreettDisjunct {
  StateSet removed;
  std::vector<AcceptancePair> pairs;
};

/// Disjunction of Streett disjuncts over one universe; expresses every condition
/// kind and is closed under conjunction and lifting along products.
struct GeneralCondition {
  std::size_t universe = 0;
  std::vector<StreettDisjunct> disjuncts;
};

GeneralCondition general_condition(const Acceptance& acc, std::size_t num_states);
GeneralCondition lift(const GeneralCondition& c, const std::vector<StateId>& projection);
GeneralCondition conjoin(const GeneralCondition& x, const GeneralCondition& y);
GeneralCondition disjoin(const GeneralCondition& x, const GeneralCondition& y);
bool satisfies(const GeneralCondition& c, const StateSet& s);

/// Synchronous product restricted to reachable pairs.
struct Product {
  LabeledGraph graph;
  std::vector<StateId> left;
  std::vector<StateId> right;
};
Product product(const LabeledGraph& x, const LabeledGraph& y);

/// A reachable cycle set satisfying `c`, via Emerson-Lei restriction.
std::optional<StateSet> find_accepting_cycle(const LabeledGraph& g, const GeneralCondition& c);
/// A lasso whose run visits exactly `cycle` infinitely often; `cycle` must be a reachable cycle set.
Lasso lasso_through(const LabeledGraph& g, const StateSet& cycle);
std::optional<Lasso> find_accepting_lasso(const LabeledGraph& g, const GeneralCondition& c);

/// Accepting witness, or nullopt when L(a) = ∅.
std::optional<Lasso> is_empty(const Automaton& a);

/// Deterministic automaton-shaped graph for a lasso: one node per position.
LabeledGraph lasso_graph(const Lasso& w, std::size_t num_letters);

bool member(const Automaton& a, const Lasso& w);

}  // namespace gfg
