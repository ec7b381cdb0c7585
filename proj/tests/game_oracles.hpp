#pragma once
// Game oracles: brute force over memoryless Eve strategies.

#include <algorithm>
#include <random>

#include "gfg/game.hpp"
#include "gfg/graph.hpp"
#include "oracles.hpp"

namespace oracle {

using namespace gfg;

inline bool rabin(const std::vector<AcceptancePair>& pairs, const StateSet& s) {
  for (const auto& p : pairs)
    if (!s.intersects(p.bad) && s.intersects(p.good)) return true;
  return false;
}

// Nodes of a one-player graph (Eve fixed) that lie on a cycle set Adam wins.
inline StateSet adam_cycle_nodes(const Digraph& h, const std::vector<AcceptancePair>& pairs, StateSet within) {
  StateSet out(h.size());
  for (const auto& comp : scc_decompose(h, within)) {
    if (!comp.nontrivial) continue;
    StateSet c(h.size(), comp.states);
    if (!rabin(pairs, c)) {
      out |= c;
      continue;
    }
    // Every Adam-winning subset avoids F_i for each violated pair; shrink and recurse.
    StateSet smaller = c;
    for (const auto& p : pairs)
      if (!c.intersects(p.bad) && c.intersects(p.good)) smaller -= p.good;
    out |= adam_cycle_nodes(h, pairs, smaller);
  }
  return out;
}

// Adam wins from v under a fixed Eve strategy iff an Adam cycle set is reachable.
inline StateSet adam_wins_fixed(const RabinGame& g, const std::vector<StateId>& eve_move) {
  Digraph h(g.size());
  for (StateId v = 0; v < g.size(); ++v) h[v] = g.eve[v] ? std::vector<StateId>{eve_move[v]} : g.succ[v];
  const StateSet bad = adam_cycle_nodes(h, g.pairs, StateSet::full(g.size()));
  return coreachable(h, bad);
}

// Eve's winning region by trying every memoryless Eve strategy.
inline StateSet brute_force_region(const RabinGame& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> pick(n, 0);
  StateSet eve(n);
  for (;;) {
    std::vector<StateId> move(n);
    for (StateId v = 0; v < n; ++v) move[v] = g.succ[v][pick[v]];
    eve |= adam_wins_fixed(g, move).complement();
    std::size_t i = 0;
    while (i < n && (!g.eve[i] || ++pick[i] == g.succ[i].size())) {
      if (g.eve[i]) pick[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return eve;
}

inline RabinGame random_game(std::mt19937& rng) {
  const std::size_t n = 1 + rng() % 12;
  RabinGame g;
  for (std::size_t v = 0; v < n; ++v) {
    g.eve.push_back(rng() % 2);
    std::vector<StateId> s;
    for (std::size_t k = 1 + rng() % 2; k > 0; --k) s.push_back(static_cast<StateId>(rng() % n));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    g.succ.push_back(s);
  }
  for (std::size_t k = 1 + rng() % 2; k > 0; --k)
    g.pairs.push_back({oracle::random_set(rng, n, 0.3), oracle::random_set(rng, n, 0.3)});
  return g;
}

// L(d) on two copies of d, with cross edges; GFG by construction.
inline Automaton doubled(std::mt19937& rng, const Automaton& d) {
  const std::size_t n = d.num_states();
  std::vector<std::string> names;
  std::vector<StateId> proj;
  for (int c = 0; c < 2; ++c)
    for (StateId q = 0; q < n; ++q) {
      names.push_back(d.state_name(q) + (c ? "'" : ""));
      proj.push_back(q);
    }
  std::vector<Transition> trans;
  for (const auto& t : d.transitions())
    for (StateId c = 0; c < 2; ++c) {
      const auto k = static_cast<StateId>(n);
      const int mode = rng() % 3;  // same copy, other copy, both
      if (mode != 1) trans.push_back({t.src + c * k, t.letter, t.dst + c * k});
      if (mode != 0) trans.push_back({t.src + c * k, t.letter, t.dst + (1 - c) * k});
    }
  return Automaton(d.name() + "2", d.alphabet(), names, {d.initial().front()}, trans, lift(d.acceptance(), proj));
}


/// Reachable part of a random deterministic automaton with at least one transition.
inline Automaton random_det(std::mt19937& rng, std::size_t n, int kind) {
  for (;;) {
    const auto d0 = random_automaton(rng, n, kind, true);
    const auto d = d0.restricted_to(reachable(d0, d0.initial_set()));
    if (!d.transitions().empty()) return d;
  }
}

}  // namespace oracle
