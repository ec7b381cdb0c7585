#include "gfg/emptiness.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "gfg/errors.hpp"
#include "gfg/graph.hpp"

namespace gfg {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

StateSet lift_set(const StateSet& s, const std::vector<StateId>& projection) {
  StateSet out(projection.size());
  for (StateId m = 0; m < projection.size(); ++m)
    if (s.contains(projection[m])) out.insert(m);
  return out;
}

std::optional<StateSet> streett_search(const Digraph& g, const StateSet& region,
                                       const std::vector<AcceptancePair>& pairs) {
  for (const auto& comp : scc_decompose(g, region)) {
    if (!comp.nontrivial) continue;
    const StateSet c(g.size(), comp.states);
    StateSet drop(g.size());
    for (const auto& p : pairs)
      if (p.bad.intersects(c) && !p.good.intersects(c)) drop |= p.bad & c;
    if (drop.empty()) return c;
    if (auto r = streett_search(g, c - drop, pairs)) return r;
  }
  return std::nullopt;
}

// Shortest labelled path from any node in `from` to `target`, staying inside `within`.
std::vector<LetterId> bfs_path(const LabeledGraph& g, const std::vector<StateId>& from, StateId target,
                               const std::optional<StateSet>& within) {
  std::vector<std::pair<StateId, LetterId>> parent(g.size(), {static_cast<StateId>(-1), 0});
  std::vector<bool> seen(g.size(), false);
  std::deque<StateId> queue;
  for (StateId s : from) {
    if (!seen[s]) {
      seen[s] = true;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const StateId v = queue.front();
    queue.pop_front();
    if (v == target) break;
    for (const auto& [letter, w] : g.out[v]) {
      if (seen[w] || (within && !within->contains(w))) continue;
      seen[w] = true;
      parent[w] = {v, letter};
      queue.push_back(w);
    }
  }
  if (!seen[target]) throw Error("internal: lasso target unreachable");
  std::vector<LetterId> path;
  for (StateId v = target; std::find(from.begin(), from.end(), v) == from.end();) {
    path.push_back(parent[v].second);
    v = parent[v].first;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

Digraph LabeledGraph::digraph() const {
  Digraph g(out.size());
  for (StateId v = 0; v < out.size(); ++v) {
    for (const auto& e : out[v]) g[v].push_back(e.second);
    std::sort(g[v].begin(), g[v].end());
    g[v].erase(std::unique(g[v].begin(), g[v].end()), g[v].end());
  }
  return g;
}

LabeledGraph labeled_graph(const Automaton& a) {
  LabeledGraph g;
  g.num_letters = a.num_letters();
  g.out.resize(a.num_states());
  for (const auto& t : a.transitions()) g.out[t.src].push_back({t.letter, t.dst});
  g.initial = a.initial();
  return g;
}

GeneralCondition general_condition(const Acceptance& acc, std::size_t n) {
  GeneralCondition out{n, {}};
  const StateSet all = StateSet::full(n);
  const StateSet none(n);
  auto add = [&](StateSet removed, std::vector<AcceptancePair> pairs) {
    out.disjuncts.push_back({std::move(removed), std::move(pairs)});
  };
  std::visit(overloaded{
                 [&](const Buchi& b) { add(none, {{all, b.accepting}}); },
                 [&](const Weak& w) { add(none, {{all, w.accepting}}); },
                 [&](const CoBuchi& c) { add(c.rejecting, {}); },
                 [&](const Parity& p) {
                   for (const auto& pair : parity_rabin_ladder(p)) add(pair.bad, {{all, pair.good}});
                 },
                 [&](const Rabin& r) {
                   for (const auto& pair : r.pairs) add(pair.bad, {{all, pair.good}});
                 },
                 [&](const Streett& s) { add(none, s.pairs); },
             },
             acc);
  return out;
}

GeneralCondition lift(const GeneralCondition& c, const std::vector<StateId>& projection) {
  GeneralCondition out{projection.size(), {}};
  for (const auto& d : c.disjuncts) {
    StreettDisjunct nd{lift_set(d.removed, projection), {}};
    for (const auto& p : d.pairs) nd.pairs.push_back({lift_set(p.bad, projection), lift_set(p.good, projection)});
    out.disjuncts.push_back(std::move(nd));
  }
  return out;
}

GeneralCondition conjoin(const GeneralCondition& x, const GeneralCondition& y) {
  if (x.universe != y.universe) throw StructuralError("conjoined conditions over different universes");
  GeneralCondition out{x.universe, {}};
  for (const auto& dx : x.disjuncts) {
    for (const auto& dy : y.disjuncts) {
      StreettDisjunct d{dx.removed | dy.removed, dx.pairs};
      d.pairs.insert(d.pairs.end(), dy.pairs.begin(), dy.pairs.end());
      out.disjuncts.push_back(std::move(d));
    }
  }
  return out;
}

GeneralCondition disjoin(const GeneralCondition& x, const GeneralCondition& y) {
  if (x.universe != y.universe) throw StructuralError("disjoined conditions over different universes");
  GeneralCondition out = x;
  out.disjuncts.insert(out.disjuncts.end(), y.disjuncts.begin(), y.disjuncts.end());
  return out;
}

bool satisfies(const GeneralCondition& c, const StateSet& s) {
  if (s.empty()) return false;
  for (const auto& d : c.disjuncts) {
    if (d.removed.intersects(s)) continue;
    if (std::all_of(d.pairs.begin(), d.pairs.end(),
                    [&](const AcceptancePair& p) { return !p.bad.intersects(s) || p.good.intersects(s); }))
      return true;
  }
  return false;
}

Product product(const LabeledGraph& x, const LabeledGraph& y) {
  if (x.num_letters != y.num_letters) throw StructuralError("product of graphs over different alphabets");
  Product p;
  p.graph.num_letters = x.num_letters;
  std::map<std::pair<StateId, StateId>, StateId> index;
  std::deque<StateId> work;
  auto intern = [&](StateId a, StateId b) {
    auto [it, fresh] = index.try_emplace({a, b}, static_cast<StateId>(p.left.size()));
    if (fresh) {
      p.left.push_back(a);
      p.right.push_back(b);
      p.graph.out.emplace_back();
      work.push_back(it->second);
    }
    return it->second;
  };
  for (StateId a : x.initial)
    for (StateId b : y.initial) p.graph.initial.push_back(intern(a, b));
  while (!work.empty()) {
    const StateId v = work.front();
    work.pop_front();
    const StateId a = p.left[v], b = p.right[v];
    for (const auto& [la, ta] : x.out[a])
      for (const auto& [lb, tb] : y.out[b])
        if (la == lb) {
          const StateId w = intern(ta, tb);
          p.graph.out[v].push_back({la, w});
        }
  }
  return p;
}

std::optional<StateSet> find_accepting_cycle(const LabeledGraph& g, const GeneralCondition& c) {
  if (c.universe != g.size()) throw StructuralError("condition universe does not match graph");
  const Digraph dg = g.digraph();
  const StateSet reach = reachable(dg, StateSet(g.size(), g.initial));
  for (const auto& d : c.disjuncts)
    if (auto r = streett_search(dg, reach - d.removed, d.pairs)) return r;
  return std::nullopt;
}

Lasso lasso_through(const LabeledGraph& g, const StateSet& cycle) {
  const StateId c0 = cycle.front();
  Lasso w;
  w.prefix = bfs_path(g, g.initial, c0, std::nullopt);
  StateId current = c0;
  for (StateId t : cycle.elements()) {
    if (t == current) continue;
    auto part = bfs_path(g, {current}, t, cycle);
    w.cycle.insert(w.cycle.end(), part.begin(), part.end());
    current = t;
  }
  if (current != c0) {
    auto back = bfs_path(g, {current}, c0, cycle);
    w.cycle.insert(w.cycle.end(), back.begin(), back.end());
  } else {
    // single state: close with an edge inside the cycle set
    for (const auto& [letter, t] : g.out[c0]) {
      if (!cycle.contains(t)) continue;
      w.cycle.push_back(letter);
      if (t != c0) {
        auto back = bfs_path(g, {t}, c0, cycle);
        w.cycle.insert(w.cycle.end(), back.begin(), back.end());
      }
      break;
    }
  }
  if (w.cycle.empty()) throw Error("internal: lasso cycle set has no cycle");
  return w;
}

std::optional<Lasso> find_accepting_lasso(const LabeledGraph& g, const GeneralCondition& c) {
  if (auto cyc = find_accepting_cycle(g, c)) return lasso_through(g, *cyc);
  return std::nullopt;
}

std::optional<Lasso> is_empty(const Automaton& a) {
  return find_accepting_lasso(labeled_graph(a), general_condition(a.acceptance(), a.num_states()));
}

LabeledGraph lasso_graph(const Lasso& w, std::size_t num_letters) {
  if (w.cycle.empty()) throw StructuralError("lasso cycle must be nonempty");
  LabeledGraph g;
  g.num_letters = num_letters;
  const std::size_t u = w.prefix.size(), n = u + w.cycle.size();
  g.out.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const LetterId letter = i < u ? w.prefix[i] : w.cycle[i - u];
    if (letter >= num_letters) throw StructuralError("lasso letter outside the alphabet");
    const std::size_t next = i + 1 < n ? i + 1 : u;
    g.out[i].push_back({letter, static_cast<StateId>(next)});
  }
  g.initial = {0};
  return g;
}

bool member(const Automaton& a, const Lasso& w) {
  const auto p = product(labeled_graph(a), lasso_graph(w, a.num_letters()));
  const auto cond = lift(general_condition(a.acceptance(), a.num_states()), p.left);
  return find_accepting_cycle(p.graph, cond).has_value();
}

}  // namespace gfg
