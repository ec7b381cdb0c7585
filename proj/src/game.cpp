#include "gfg/game.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "gfg/errors.hpp"
#include "gfg/graph.hpp"

namespace gfg {

namespace {

class Solver {
 public:
  explicit Solver(const RabinGame& g) : g_(g), n_(g.size()), pred_(n_) {
    for (StateId v = 0; v < n_; ++v)
      for (StateId w : g.succ[v]) pred_[w].push_back(v);
  }

  GameSolution solve(const StateSet& nodes) {
    GameSolution out{StateSet(n_), std::vector<StateId>(n_, kNoChoice)};
    if (nodes.empty()) return out;

    const bool eve_top = rabin_accepts(nodes);
    std::vector<StateSet> children;
    if (eve_top) {
      StateSet d = max_streett_subset(nodes);
      if (!d.empty()) children.push_back(std::move(d));
    } else {
      for (const auto& p : g_.pairs) {
        StateSet d = nodes - p.bad;
        if (d.intersects(p.good)) children.push_back(std::move(d));
      }
    }

    StateSet cur = nodes;
    StateSet opp(n_);
    std::vector<StateId> opp_choice(n_, kNoChoice);
    // Last sub-solution of the single Eve child, reused for Eve's final strategy.
    std::optional<std::pair<StateSet, GameSolution>> last;
    for (bool progress = true; progress;) {
      progress = false;
      last.reset();
      for (const auto& d : children) {
        std::vector<StateId> attr_choice(n_, kNoChoice);
        const StateSet a = attractor(eve_top, cur - d, cur, attr_choice);
        const StateSet sub = cur - a;
        GameSolution r = solve(sub);
        const StateSet won = eve_top ? sub - r.eve_region : r.eve_region;
        if (won.empty()) {
          if (eve_top) {
            for (StateId v = 0; v < n_; ++v)
              if (attr_choice[v] != kNoChoice) r.choice[v] = attr_choice[v];
            last.emplace(a, std::move(r));
          }
          continue;
        }
        std::vector<StateId> b_choice(n_, kNoChoice);
        const StateSet b = attractor(!eve_top, won, cur, b_choice);
        if (!eve_top) {
          won.for_each([&](StateId v) { opp_choice[v] = r.choice[v]; });
          (b - won).for_each([&](StateId v) { opp_choice[v] = b_choice[v]; });
        }
        opp |= b;
        cur -= b;
        progress = true;
        break;
      }
    }

    if (!eve_top) {
      out.eve_region = opp;
      out.choice = std::move(opp_choice);
      return out;
    }
    out.eve_region = cur;
    cur.for_each([&](StateId v) {
      if (!g_.eve[v]) return;
      if (last && last->second.choice[v] != kNoChoice && cur.contains(last->second.choice[v])) {
        out.choice[v] = last->second.choice[v];
        return;
      }
      for (StateId w : g_.succ[v])
        if (cur.contains(w)) {
          out.choice[v] = w;
          break;
        }
    });
    return out;
  }

 private:
  bool rabin_accepts(const StateSet& s) const {
    for (const auto& p : g_.pairs)
      if (!s.intersects(p.bad) && s.intersects(p.good)) return true;
    return false;
  }

  // Streett-satisfying subsets are closed under union; shrink to the largest one.
  StateSet max_streett_subset(StateSet s) const {
    for (bool changed = true; changed && !s.empty();) {
      changed = false;
      for (const auto& p : g_.pairs)
        if (!s.intersects(p.bad) && s.intersects(p.good)) {
          s -= p.good;
          changed = true;
        }
    }
    return s;
  }

  // Attractor for Eve (eve_player) or Adam inside `within`; records Eve's attracting moves.
  StateSet attractor(bool eve_player, const StateSet& target, const StateSet& within,
                     std::vector<StateId>& choice) const {
    StateSet attr = target & within;
    std::vector<std::size_t> count(n_, 0);
    within.for_each([&](StateId v) {
      for (StateId w : g_.succ[v]) count[v] += within.contains(w);
    });
    std::deque<StateId> queue;
    attr.for_each([&](StateId v) { queue.push_back(v); });
    while (!queue.empty()) {
      const StateId v = queue.front();
      queue.pop_front();
      for (StateId u : pred_[v]) {
        if (!within.contains(u) || attr.contains(u)) continue;
        if (g_.eve[u] == eve_player) {
          if (eve_player) choice[u] = v;
        } else if (--count[u] > 0) {
          continue;
        }
        attr.insert(u);
        queue.push_back(u);
      }
    }
    return attr;
  }

  const RabinGame& g_;
  std::size_t n_;
  std::vector<std::vector<StateId>> pred_;
};

}  // namespace

GameSolution solve_rabin_game(const RabinGame& game, std::size_t budget) {
  const std::size_t n = game.size();
  if (game.eve.size() != n) throw StructuralError("game owner vector does not match the graph");
  if (n * std::max<std::size_t>(1, game.pairs.size()) > budget)
    throw CapExceeded("enumeration cap: game of " + std::to_string(n) + " nodes and " +
                      std::to_string(game.pairs.size()) + " pairs exceeds budget " + std::to_string(budget));
  Digraph succ = game.succ;
  for (StateId v = 0; v < n; ++v) {
    if (succ[v].empty()) throw StructuralError("game node " + std::to_string(v) + " has no successor");
    std::sort(succ[v].begin(), succ[v].end());
    succ[v].erase(std::unique(succ[v].begin(), succ[v].end()), succ[v].end());
  }
  for (const auto& p : game.pairs)
    if (p.bad.universe() != n || p.good.universe() != n) throw StructuralError("game pair over a different node set");
  const RabinGame clean{game.eve, std::move(succ), game.pairs};
  return Solver(clean).solve(StateSet::full(n));
}

std::size_t GameArena::adam_nodes() const {
  return static_cast<std::size_t>(std::count(game.eve.begin(), game.eve.end(), false));
}

GameArena build_letter_game(const Automaton& a, const Automaton& dref) {
  if (a.alphabet() != dref.alphabet()) throw StructuralError("letter game over different alphabets");
  if (!is_deterministic(dref)) throw PreconditionError("reference '" + dref.name() + "' is not deterministic");
  if (kind_of(a.acceptance()) == AcceptanceKind::streett)
    throw UnsupportedError("unsupported: use brute_force_gfg (Streett automaton condition)");
  if (kind_of(dref.acceptance()) == AcceptanceKind::rabin)
    throw UnsupportedError("unsupported: reference condition must not be Rabin");

  const Automaton ca = complete(a);
  const Automaton cd = complete(dref);
  const auto a_pairs = rabin_pairs(ca.acceptance());
  const auto d_pairs = rabin_pairs(dual(cd.acceptance()));

  std::vector<bool> eve;
  Digraph succ;
  std::vector<StateId> qs, ds;
  std::vector<LetterId> letters;
  std::map<std::tuple<bool, StateId, StateId, LetterId>, StateId> ids;
  std::deque<StateId> todo;
  auto node = [&](bool is_eve, StateId q, StateId d, LetterId l) {
    auto [it, fresh] = ids.emplace(std::make_tuple(is_eve, q, d, l), static_cast<StateId>(eve.size()));
    if (fresh) {
      eve.push_back(is_eve);
      succ.emplace_back();
      qs.push_back(q);
      ds.push_back(d);
      letters.push_back(l);
      todo.push_back(it->second);
    }
    return it->second;
  };

  const StateId d0 = cd.initial().front();
  StateId initial;
  if (ca.initial().size() == 1) {
    initial = node(false, ca.initial().front(), d0, GameArena::kNoLetter);
  } else {
    initial = node(true, kNoChoice, d0, GameArena::kNoLetter);
  }
  while (!todo.empty()) {
    const StateId v = todo.front();
    todo.pop_front();
    std::vector<StateId> out;  // node() grows succ, so collect first
    if (eve[v] && letters[v] == GameArena::kNoLetter) {
      for (StateId q : ca.initial()) out.push_back(node(false, q, d0, GameArena::kNoLetter));
    } else if (!eve[v]) {
      for (LetterId l = 0; l < ca.num_letters(); ++l) out.push_back(node(true, qs[v], ds[v], l));
    } else {
      const StateId d2 = cd.successors(ds[v], letters[v]).front();
      for (StateId q2 : ca.successors(qs[v], letters[v])) out.push_back(node(false, q2, d2, GameArena::kNoLetter));
    }
    succ[v] = std::move(out);
  }

  const std::size_t n = eve.size();
  std::vector<AcceptancePair> pairs;
  auto lift_pairs = [&](const std::vector<AcceptancePair>& src, const std::vector<StateId>& proj) {
    for (const auto& p : src) {
      AcceptancePair lp{StateSet(n), StateSet(n)};
      for (StateId v = 0; v < n; ++v) {
        if (eve[v]) continue;
        if (p.bad.contains(proj[v])) lp.bad.insert(v);
        if (p.good.contains(proj[v])) lp.good.insert(v);
      }
      pairs.push_back(std::move(lp));
    }
  };
  lift_pairs(d_pairs, ds);
  lift_pairs(a_pairs, qs);

  GameArena arena{RabinGame{std::move(eve), std::move(succ), std::move(pairs)}, ca, cd, std::move(qs), std::move(ds),
                  std::move(letters), initial, a.num_states()};
  return arena;
}

GameVerdict solve_letter_game(const GameArena& arena, std::size_t budget) {
  GameVerdict v;
  v.solution = solve_rabin_game(arena.game, budget);
  v.eve_wins = v.solution.eve_region.contains(arena.initial);
  return v;
}

StrategyTransducer extract_strategy(const GameArena& arena, const GameVerdict& verdict, const std::string& name) {
  if (!verdict.eve_wins) throw PreconditionError("Adam wins the letter game: no strategy to extract");
  const auto& g = arena.game;
  const auto& ch = verdict.solution.choice;
  StateId start = arena.initial;
  if (g.eve[start]) start = ch[start];

  std::map<StateId, MemoryId> mem;
  std::vector<StateId> order;
  auto memory = [&](StateId v) {
    auto [it, fresh] = mem.emplace(v, static_cast<MemoryId>(order.size()));
    if (fresh) order.push_back(v);
    return it->second;
  };
  memory(start);
  std::vector<std::tuple<MemoryId, LetterId, MemoryId>> steps;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const StateId v = order[i];
    for (StateId e : g.succ[v]) {
      const StateId w = ch[e];
      if (w == kNoChoice) throw Error("internal invariant: Eve node without a choice in her region");
      if (arena.a_state[w] >= arena.original_states) continue;  // completion sink
      const MemoryId from = mem.at(v);
      steps.emplace_back(from, arena.letter[e], memory(w));
    }
  }
  std::vector<std::string> names;
  std::vector<StateId> out;
  for (StateId v : order) {
    names.push_back(arena.automaton.state_name(arena.a_state[v]) + "@" + arena.reference.state_name(arena.ref_state[v]));
    out.push_back(arena.a_state[v]);
  }
  return StrategyTransducer(name, arena.automaton.name(), std::move(names), std::move(out), 0,
                            arena.automaton.num_letters(), std::move(steps));
}

GfgCheck check_gfg(const Automaton& a, const Automaton& dref, std::size_t ref_bound) {
  GfgCheck r;
  r.a_in_ref = contained_in_deterministic(a, dref);
  if (r.a_in_ref.kind == VerdictKind::fails)
    throw PreconditionError("reference does not match: " + format_lasso(*r.a_in_ref.counterexample, a.alphabet()) +
                            " is accepted by '" + a.name() + "' only");
  r.ref_in_a = bounded_equiv(a, dref, ref_bound);
  if (r.ref_in_a.kind == VerdictKind::fails)
    throw PreconditionError("reference does not match: " + format_lasso(*r.ref_in_a.counterexample, a.alphabet()) +
                            " is accepted by '" + dref.name() + "' only");
  const auto arena = build_letter_game(a, dref);
  r.adam_nodes = arena.adam_nodes();
  r.eve_nodes = arena.eve_nodes();
  const auto v = solve_letter_game(arena);
  r.gfg = v.eve_wins;
  if (r.gfg) r.strategy = extract_strategy(arena, v);
  return r;
}

std::optional<StrategyTransducer> brute_force_gfg(const Automaton& a, std::size_t memory_bound,
                                                  const std::optional<Automaton>& reference,
                                                  const std::vector<Witness>& witnesses, std::size_t budget) {
  if (!reference && witnesses.empty()) throw PreconditionError("brute-force GFG check needs a reference or witnesses");
  const std::size_t n = a.num_states();
  const std::size_t letters = a.num_letters();
  double total = 0;
  for (std::size_t k = 1; k <= memory_bound; ++k) {
    double term = 1;
    for (std::size_t i = 0; i < k * letters; ++i) term *= static_cast<double>(k);
    for (std::size_t i = 0; i < k; ++i) term *= static_cast<double>(n);
    total += term;
  }
  if (total > static_cast<double>(budget))
    throw CapExceeded("enumeration cap: brute-force search space exceeds budget " + std::to_string(budget));

  std::vector<std::string> names;
  for (std::size_t k = 1; k <= memory_bound; ++k) {
    names.push_back("m" + std::to_string(k - 1));
    std::vector<StateId> out(k, 0);
    out[0] = a.initial().front();
    std::size_t init_idx = 0;
    for (;;) {
      // options per (memory, letter); kNoChoice marks an undefined step.
      std::vector<std::vector<MemoryId>> options(k * letters);
      bool viable = true;
      for (MemoryId m = 0; m < k && viable; ++m)
        for (LetterId l = 0; l < letters && viable; ++l) {
          auto& opt = options[m * letters + l];
          if (a.successors(out[m], l).empty()) {
            opt.push_back(kNoChoice);
            continue;
          }
          for (MemoryId t = 0; t < k; ++t)
            if (a.has_transition({out[m], l, out[t]})) opt.push_back(t);
          viable = !opt.empty();
        }
      if (viable) {
        std::vector<std::size_t> pick(options.size(), 0);
        for (;;) {
          std::vector<std::tuple<MemoryId, LetterId, MemoryId>> steps;
          for (std::size_t i = 0; i < options.size(); ++i)
            if (options[i][pick[i]] != kNoChoice)
              steps.emplace_back(static_cast<MemoryId>(i / letters), static_cast<LetterId>(i % letters),
                                 options[i][pick[i]]);
          StrategyTransducer g("g_brute", a.name(), names, out, 0, letters, std::move(steps));
          const auto ag = compose(a, g);
          if (ag.reachable.size() == k && !separated_by_witnesses(ag.automaton, witnesses) &&
              (!reference || (contained_in_deterministic(ag.automaton, *reference).kind == VerdictKind::holds &&
                              contained_in_deterministic(*reference, ag.automaton).kind == VerdictKind::holds)))
            return g;
          std::size_t i = 0;
          while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
          if (i == pick.size()) break;
        }
      }
      // next output tuple: memory 0 ranges over initial states, others over Q
      std::size_t i = 1;
      while (i < k && ++out[i] == n) out[i++] = 0;
      if (i < k) continue;
      if (++init_idx == a.initial().size()) break;
      out[0] = a.initial()[init_idx];
    }
  }
  return std::nullopt;
}

}  // namespace gfg
