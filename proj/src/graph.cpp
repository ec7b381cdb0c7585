#include "gfg/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "gfg/errors.hpp"

namespace gfg {

std::vector<Component> scc_decompose(const Digraph& g, const std::optional<StateSet>& within) {
  const std::size_t n = g.size();
  constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> index(n, kUnset), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<StateId> stack;
  std::vector<std::pair<StateId, std::size_t>> call;  // (node, next edge)
  std::vector<Component> out;
  std::uint32_t counter = 0;
  auto inside = [&](StateId v) { return !within || within->contains(v); };

  for (StateId root = 0; root < n; ++root) {
    if (index[root] != kUnset || !inside(root)) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, edge] = call.back();
      if (edge < g[v].size()) {
        const StateId w = g[v][edge++];
        if (!inside(w)) continue;
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const StateId done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] != index[done]) continue;
      Component c;
      StateId w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        c.states.push_back(w);
      } while (w != done);
      std::sort(c.states.begin(), c.states.end());
      if (c.states.size() > 1) {
        c.nontrivial = true;
      } else {
        const auto& adj = g[done];
        c.nontrivial = std::find(adj.begin(), adj.end(), done) != adj.end();
      }
      out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Component& x, const Component& y) { return x.states.front() < y.states.front(); });
  return out;
}

std::vector<Component> scc_decompose(const Automaton& a) { return scc_decompose(a.graph()); }

StateSet reachable(const Digraph& g, const StateSet& from, const std::optional<StateSet>& within) {
  StateSet seen(g.size());
  std::vector<StateId> work;
  from.for_each([&](StateId v) {
    if (!within || within->contains(v)) {
      seen.insert(v);
      work.push_back(v);
    }
  });
  while (!work.empty()) {
    const StateId v = work.back();
    work.pop_back();
    for (StateId w : g[v]) {
      if (seen.contains(w) || (within && !within->contains(w))) continue;
      seen.insert(w);
      work.push_back(w);
    }
  }
  return seen;
}

StateSet reachable(const Automaton& a, const StateSet& from) { return reachable(a.graph(), from); }

StateSet coreachable(const Digraph& g, const StateSet& to, const std::optional<StateSet>& within) {
  Digraph rev(g.size());
  for (StateId v = 0; v < g.size(); ++v)
    for (StateId w : g[v]) rev[w].push_back(v);
  return reachable(rev, to, within);
}

bool is_cycle_set(const Digraph& g, const StateSet& c) {
  if (c.empty()) return false;
  const StateId first = c.front();
  if (c.size() == 1) return std::find(g[first].begin(), g[first].end(), first) != g[first].end();
  StateSet start(g.size(), {first});
  return reachable(g, start, c) == c && coreachable(g, start, c) == c;
}

void cycle_sets(const Digraph& g, const StateSet& restrict_to, std::optional<StateId> anchor,
                const std::function<bool(const StateSet&)>& emit, std::size_t cap) {
  if (anchor && !restrict_to.contains(*anchor)) return;
  for (const auto& comp : scc_decompose(g, restrict_to)) {
    if (!comp.nontrivial) continue;
    std::size_t anchor_bit = 0;
    if (anchor) {
      auto it = std::find(comp.states.begin(), comp.states.end(), *anchor);
      if (it == comp.states.end()) continue;
      anchor_bit = static_cast<std::size_t>(it - comp.states.begin());
    }
    const std::size_t k = comp.states.size();
    if (k > cap)
      throw CapExceeded("enumeration cap: cycle region of " + std::to_string(k) + " states exceeds cap " +
                        std::to_string(cap));
    const std::uint64_t limit = std::uint64_t{1} << k;
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
      if (anchor && ((mask >> anchor_bit) & 1u) == 0) continue;
      StateSet c(g.size());
      for (std::size_t i = 0; i < k; ++i)
        if ((mask >> i) & 1u) c.insert(comp.states[i]);
      if (is_cycle_set(g, c) && !emit(c)) return;
    }
  }
}

std::vector<StateSet> cycle_sets(const Automaton& a, const StateSet& restrict_to, std::optional<StateId> anchor,
                                 std::size_t cap) {
  std::vector<StateSet> out;
  cycle_sets(
      a.graph(), restrict_to, anchor,
      [&](const StateSet& c) {
        out.push_back(c);
        return true;
      },
      cap);
  return out;
}

bool is_deterministic(const Automaton& a) {
  if (a.initial().size() != 1) return false;
  for (StateId q = 0; q < a.num_states(); ++q)
    for (LetterId l = 0; l < a.num_letters(); ++l)
      if (a.successors(q, l).size() > 1) return false;
  return true;
}

bool is_complete(const Automaton& a) {
  for (StateId q = 0; q < a.num_states(); ++q)
    for (LetterId l = 0; l < a.num_letters(); ++l)
      if (a.successors(q, l).empty()) return false;
  return true;
}

std::optional<StateSet> mixed_component(const Automaton& a, const StateSet& candidate) {
  for (const auto& comp : scc_decompose(a)) {
    StateSet c(a.num_states(), comp.states);
    if (c.intersects(candidate) && !c.is_subset_of(candidate)) return c;
  }
  return std::nullopt;
}

bool is_weak_shape(const Automaton& a, const StateSet& candidate) { return !mixed_component(a, candidate); }

}  // namespace gfg
