#include "gfg/transform.hpp"

#include <algorithm>

#include "gfg/emptiness.hpp"
#include "gfg/errors.hpp"
#include "gfg/graph.hpp"

namespace gfg {

std::string_view step_kind_name(TransformStep::Kind k) noexcept {
  switch (k) {
    case TransformStep::Kind::remove_transition: return "remove_transition";
    case TransformStep::Kind::drop_memory: return "drop_memory";
    case TransformStep::Kind::merge_memory: return "merge_memory";
    case TransformStep::Kind::remove_from_good: return "remove_from_good";
    case TransformStep::Kind::set_condition: return "set_condition";
    case TransformStep::Kind::remove_state: return "remove_state";
    case TransformStep::Kind::set_initial: return "set_initial";
  }
  return "?";
}

namespace {

std::string condition_text(const Automaton& a, const Acceptance& acc) {
  const std::string kind(display_name(kind_of(acc)));
  if (auto* b = std::get_if<Buchi>(&acc)) return kind + " " + a.describe(b->accepting);
  if (auto* w = std::get_if<Weak>(&acc)) return kind + " " + a.describe(w->accepting);
  if (auto* c = std::get_if<CoBuchi>(&acc)) return kind + " " + a.describe(c->rejecting);
  if (auto* p = std::get_if<Parity>(&acc)) {
    std::string s = kind + " [";
    for (StateId q = 0; q < p->priority.size(); ++q)
      s += (q ? ", " : "") + a.state_name(q) + ":" + std::to_string(p->priority[q]);
    return s + "]";
  }
  const auto& pairs = kind_of(acc) == AcceptanceKind::rabin ? std::get<Rabin>(acc).pairs : std::get<Streett>(acc).pairs;
  std::string s = kind + " [";
  for (std::size_t i = 0; i < pairs.size(); ++i)
    s += (i ? ", " : "") + std::string("(") + a.describe(pairs[i].bad) + ", " + a.describe(pairs[i].good) + ")";
  return s + "]";
}

StateId state_named(const Automaton& a, const std::string& name) {
  auto q = a.find_state(name);
  if (!q) throw StructuralError("log names unknown state '" + name + "'");
  return *q;
}

MemoryId memory_named(const std::optional<StrategyTransducer>& g, const std::string& name) {
  if (!g) throw StructuralError("log step needs a strategy");
  auto m = g->find_memory(name);
  if (!m) throw StructuralError("log names unknown memory '" + name + "'");
  return *m;
}

void apply(Automaton& a, std::optional<StrategyTransducer>& g, const TransformStep& s) {
  using K = TransformStep::Kind;
  switch (s.kind) {
    case K::remove_transition: {
      auto l = a.find_letter(s.letter);
      if (!l) throw StructuralError("log names unknown letter '" + s.letter + "'");
      const Transition t{state_named(a, s.src), *l, state_named(a, s.dst)};
      std::vector<Transition> rest;
      for (const auto& x : a.transitions())
        if (!(x == t)) rest.push_back(x);
      if (rest.size() == a.transitions().size()) throw StructuralError("log removes missing transition " + a.describe(t));
      a = a.with_transitions(std::move(rest));
      return;
    }
    case K::drop_memory: {
      StateSet keep = StateSet::full(g ? g->size() : 0);
      keep.erase(memory_named(g, s.memory));
      g = g->restricted_to(keep);
      return;
    }
    case K::merge_memory:
      g = g->merged(memory_named(g, s.memory), memory_named(g, s.into));
      return;
    case K::remove_from_good: {
      auto* r = std::get_if<Rabin>(&a.acceptance());
      if (!r || s.pair >= r->pairs.size()) throw StructuralError("log edits a missing Rabin pair");
      Rabin copy = *r;
      copy.pairs[s.pair].good.erase(state_named(a, s.state));
      a = a.with_acceptance(std::move(copy));
      return;
    }
    case K::set_condition:
      a = a.with_acceptance(*s.condition);
      return;
    case K::remove_state: {
      StateSet keep = a.all_states();
      keep.erase(state_named(a, s.state));
      a = a.restricted_to(keep);
      return;
    }
    case K::set_initial:
      a = a.with_initial({state_named(a, s.state)});
      return;
  }
}

TransformStep make_step(TransformStep::Kind k) {
  TransformStep s;
  s.kind = k;
  return s;
}

// Accumulates a log while applying it.
struct Builder {
  Automaton a;
  std::optional<StrategyTransducer> g;
  std::vector<TransformStep> log;
  std::vector<std::string> notes;

  void push(TransformStep s) {
    apply(a, g, s);
    log.push_back(std::move(s));
  }
  void remove_transition(const Transition& t) {
    auto s = make_step(TransformStep::Kind::remove_transition);
    s.src = a.state_name(t.src);
    s.letter = a.letter_name(t.letter);
    s.dst = a.state_name(t.dst);
    push(std::move(s));
  }
  void drop_unreachable() {
    const auto ag = compose(a, *g);
    std::vector<std::string> names;
    for (MemoryId m = 0; m < g->size(); ++m)
      if (!ag.reachable.contains(m)) names.push_back(g->memory_name(m));
    for (auto& n : names) {
      auto s = make_step(TransformStep::Kind::drop_memory);
      s.memory = std::move(n);
      push(std::move(s));
    }
  }
  void prune_unused() {
    const auto used = used_transitions(a, *g);
    std::vector<Transition> unused;
    for (std::size_t i = 0; i < a.transitions().size(); ++i)
      if (!std::binary_search(used.begin(), used.end(), i)) unused.push_back(a.transitions()[i]);
    for (const auto& t : unused) remove_transition(t);
  }
  void merge(MemoryId m, MemoryId into) {
    auto s = make_step(TransformStep::Kind::merge_memory);
    s.memory = g->memory_name(m);
    s.into = g->memory_name(into);
    push(std::move(s));
  }
  void set_condition(Acceptance acc) {
    auto s = make_step(TransformStep::Kind::set_condition);
    s.condition = std::move(acc);
    push(std::move(s));
  }

  TransformReport finish(const Automaton& input, const TransformOptions& opt) && {
    TransformReport r{std::move(a), std::move(g), std::move(log), std::move(notes), Verdict::unknown(0), ""};
    if (opt.verify_bound == 0) {
      r.verification_summary = "verification skipped";
      return r;
    }
    r.verification = bounded_equiv(input, r.automaton, opt.verify_bound);
    if (r.verification.kind == VerdictKind::fails)
      throw PreconditionError("verification failed: input and output differ on " +
                              format_lasso(*r.verification.counterexample, input.alphabet()) +
                              " (precondition violated)");
    r.verification_summary = "no counterexample among lassos with |u|,|v| <= " + std::to_string(opt.verify_bound);
    return r;
  }
};

Builder start(const Automaton& a, std::optional<StrategyTransducer> g) { return Builder{a, std::move(g), {}, {}}; }

void require_tight(const Automaton& a, const StrategyTransducer& g) {
  const auto t = check_tightness(a, g);
  if (!t.tight) throw PreconditionError("input is not tight: " + t.diagnostic);
}

// Some cycle of A_g through m satisfies the (non-Rabin) condition of ag.
bool accepting_cycle_through(const ComposedAutomaton& ag, MemoryId m) {
  const std::size_t n = ag.automaton.num_states();
  auto pairs = streett_pairs(ag.automaton.acceptance());
  pairs.push_back({StateSet::full(n), StateSet(n, {m})});
  LabeledGraph lg = labeled_graph(ag.automaton);
  lg.initial = {m};
  return find_accepting_cycle(lg, general_condition(Streett{std::move(pairs)}, n)).has_value();
}

// States none of whose memories (reachable, or all) lies on an accepting cycle.
StateSet without_accepting_memory(const ComposedAutomaton& ag, std::size_t num_states, bool all_memories) {
  StateSet out(num_states);
  for (StateId q = 0; q < num_states; ++q) {
    bool any = false;
    for (MemoryId m = 0; m < ag.tau.size() && !any; ++m) {
      if (ag.tau[m] != q || (!all_memories && !ag.reachable.contains(m))) continue;
      any = accepting_cycle_through(ag, m);
    }
    if (!any) out.insert(q);
  }
  return out;
}

}  // namespace

std::string TransformStep::describe(const Automaton& before) const {
  switch (kind) {
    case Kind::remove_transition: return "remove transition (" + src + "," + letter + "," + dst + ")";
    case Kind::drop_memory: return "drop unreachable memory " + memory;
    case Kind::merge_memory: return "merge " + memory + " into " + into;
    case Kind::remove_from_good: return "remove " + state + " from good set " + std::to_string(pair);
    case Kind::set_condition: return "set condition " + condition_text(before, *condition);
    case Kind::remove_state: return "remove state " + state;
    case Kind::set_initial: return "set initial state " + state;
  }
  return "?";
}

std::pair<Automaton, std::optional<StrategyTransducer>> replay(const Automaton& a,
                                                               std::optional<StrategyTransducer> g,
                                                               const std::vector<TransformStep>& log) {
  Automaton cur = a;
  for (const auto& s : log) apply(cur, g, s);
  return {std::move(cur), std::move(g)};
}

TransformReport tighten(const Automaton& a, const StrategyTransducer& g, const TransformOptions& opt) {
  auto b = start(a, g);
  for (;;) {
    b.drop_unreachable();
    b.prune_unused();
    const auto t = check_tightness(b.a, *b.g);
    if (t.tight) break;
    if (!t.replaceable_pair) throw Error("tighten: not weakly tight after pruning");
    b.merge(t.replaceable_pair->first, t.replaceable_pair->second);
  }
  return std::move(b).finish(a, opt);
}

TransformReport strong_tighten(const Automaton& a, const StrategyTransducer& g, const TransformOptions& opt) {
  if (kind_of(a.acceptance()) == AcceptanceKind::streett)
    throw UnsupportedError("strong tightening needs a Rabin condition; got Streett");
  auto b = start(a, g);
  if (kind_of(a.acceptance()) != AcceptanceKind::rabin) {
    b.notes.push_back(std::string(display_name(kind_of(a.acceptance()))) + " condition encoded as Rabin");
    b.set_condition(as_rabin(a.acceptance()));
  }
  require_tight(b.a, *b.g);
  for (bool changed = true; changed;) {
    changed = false;
    const auto ag = compose(b.a, *b.g);
    const auto& pairs = std::get<Rabin>(b.a.acceptance()).pairs;
    for (std::size_t i = 0; i < pairs.size() && !changed; ++i) {
      for (StateId q : pairs[i].good.elements()) {
        if (q_exclusive_accepting_cycle(ag, q, opt.cap)) continue;
        auto s = make_step(TransformStep::Kind::remove_from_good);
        s.pair = i;
        s.state = b.a.state_name(q);
        b.push(std::move(s));
        changed = true;
        break;
      }
    }
  }
  return std::move(b).finish(a, opt);
}

TransformReport streett_to_cobuchi(const Automaton& a, const StrategyTransducer& g, const TransformOptions& opt) {
  const auto kind = kind_of(a.acceptance());
  if (kind == AcceptanceKind::rabin) throw UnsupportedError("Streett to co-Büchi needs a Streett-expressible condition");
  if (!is_weakly_tight(a, g)) throw PreconditionError("input is not weakly tight: " + check_tightness(a, g).diagnostic);
  auto b = start(a, g);
  if (kind != AcceptanceKind::streett)
    b.notes.push_back(std::string(display_name(kind)) + " condition read through its Streett encoding");
  if (opt.include_unreachable_memories) b.notes.push_back("unreachable memories included");
  const auto ag = compose(a.with_acceptance(as_streett(a.acceptance())), g);
  const StateSet alpha = without_accepting_memory(ag, a.num_states(), opt.include_unreachable_memories);
  b.notes.push_back("alpha' = " + a.describe(alpha));
  b.set_condition(CoBuchi{alpha});
  return std::move(b).finish(a, opt);
}

TransformReport rabin_to_buchi(const Automaton& a, const StrategyTransducer& g, const TransformOptions& opt) {
  TransformOptions inner = opt;
  inner.verify_bound = 0;
  const auto st = strong_tighten(a, g, inner);
  Builder b{st.automaton, st.strategy, st.log, st.notes};
  StateSet good(a.num_states());
  for (const auto& p : std::get<Rabin>(b.a.acceptance()).pairs) good |= p.good;
  b.notes.push_back("alpha_B = " + a.describe(good));
  b.set_condition(Buchi{good});
  return std::move(b).finish(a, opt);
}

TransformReport cobuchi_to_weak(const Automaton& a, const StrategyTransducer& g, const TransformOptions& opt) {
  const auto* c = std::get_if<CoBuchi>(&a.acceptance());
  if (!c) throw UnsupportedError("co-Büchi to weak needs a co-Büchi condition");
  require_tight(a, g);
  const auto ag = compose(a, g);
  const StateSet rejecting = c->rejecting | without_accepting_memory(ag, a.num_states(), false);
  const StateSet accepting = rejecting.complement();
  if (auto mixed = mixed_component(a, accepting))
    throw PreconditionError("not weak: precondition (NWW-realizability or tightness) violated; component " +
                            a.describe(*mixed) + " is mixed");
  auto b = start(a, g);
  b.notes.push_back("S' = " + a.describe(rejecting));
  b.set_condition(Weak{accepting});
  return std::move(b).finish(a, opt);
}

TransformReport unambiguous_detbyp(const Automaton& a, const TransformOptions& opt) {
  const StateSet reach = reachable(a, a.initial_set());
  std::vector<std::string> doomed;
  bool any = false;
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (reach.contains(q) && is_empty(rebased(a, q)))
      any = true;
    else
      doomed.push_back(a.state_name(q));
  }
  if (!any) throw PreconditionError("input language is empty");
  auto b = start(a, std::nullopt);
  for (auto& name : doomed) {
    auto s = make_step(TransformStep::Kind::remove_state);
    s.state = std::move(name);
    b.push(std::move(s));
  }
  if (b.a.initial().size() > 1) {
    std::vector<std::string> names;
    for (StateId q : b.a.initial()) names.push_back(b.a.state_name(q));
    throw PreconditionError("input not unambiguous-GFG: several initial states survive (" + names[0] + ", " +
                            names[1] + ")");
  }
  for (StateId q = 0; q < b.a.num_states(); ++q)
    for (LetterId l = 0; l < b.a.num_letters(); ++l)
      if (b.a.successors(q, l).size() > 1)
        throw PreconditionError("input not unambiguous-GFG: nondeterminism at (" + b.a.state_name(q) + ", " +
                                b.a.letter_name(l) + ")");
  return std::move(b).finish(a, opt);
}

TransformReport weak_detbyp(const Automaton& a, const StrategyTransducer& g, const TransformOptions& opt) {
  const auto* w = std::get_if<Weak>(&a.acceptance());
  if (!w) throw UnsupportedError("weak DetByP needs a weak condition");
  const auto st = check_strong_tightness(a, g);
  if (!st.strongly_tight) {
    std::string why = st.tightness.diagnostic;
    if (why.empty()) why = "no exclusive accepting cycle for " + a.state_name(st.lacking_exclusive_cycle.front());
    throw PreconditionError("input not strongly tight: " + why);
  }
  auto b = start(a, g);
  for (bool changed = true; changed;) {
    changed = false;
    const auto ag = compose(b.a, *b.g);
    for (StateId q = 0; q < a.num_states() && !changed; ++q) {
      const auto mems = ag.memories_of(q).elements();
      if (mems.size() < 2) continue;
      if (w->accepting.contains(q))
        throw Error("internal invariant: accepting state " + a.state_name(q) + " has several memories");
      b.merge(mems[1], mems[0]);
      changed = true;
    }
  }
  b.drop_unreachable();
  b.prune_unused();
  const StateId q0 = b.g->output(b.g->initial());
  if (b.a.initial() != std::vector<StateId>{q0}) {
    auto s = make_step(TransformStep::Kind::set_initial);
    s.state = b.a.state_name(q0);
    b.push(std::move(s));
  }
  if (!is_deterministic(b.a)) throw PreconditionError("input not weak-GFG (or not strongly tight)");
  return std::move(b).finish(a, opt);
}

TypenessResult typeness_search(const Automaton& a, AcceptanceKind target, const std::vector<Witness>& witnesses,
                               const std::optional<Automaton>& reference, const std::vector<Automaton>& substructures,
                               std::size_t budget, std::size_t reverse_bound) {
  if (target != AcceptanceKind::buchi && target != AcceptanceKind::cobuchi && target != AcceptanceKind::weak)
    throw UnsupportedError("typeness search targets Büchi, co-Büchi or weak conditions");
  if (witnesses.empty() && !reference) throw PreconditionError("typeness search needs witnesses or a reference");
  const std::vector<Automaton> subs = substructures.empty() ? std::vector<Automaton>{a} : substructures;
  std::size_t total = 0;
  for (const auto& s : subs) {
    if (s.num_states() >= 40 || total + (std::size_t{1} << s.num_states()) > budget)
      throw CapExceeded("enumeration cap: typeness search exceeds budget " + std::to_string(budget));
    total += std::size_t{1} << s.num_states();
  }
  TypenessResult r;
  for (const auto& s : subs) {
    const std::size_t n = s.num_states();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      ++r.candidates;
      StateSet alpha(n);
      for (StateId q = 0; q < n; ++q)
        if ((mask >> q) & 1u) alpha.insert(q);
      Acceptance acc;
      if (target == AcceptanceKind::buchi)
        acc = Buchi{alpha};
      else if (target == AcceptanceKind::cobuchi)
        acc = CoBuchi{alpha};
      else if (is_weak_shape(s, alpha))
        acc = Weak{alpha};
      else
        continue;
      const Automaton cand = s.with_acceptance(std::move(acc));
      if (separated_by_witnesses(cand, witnesses)) continue;
      if (reference) {
        if (contained_in_deterministic(cand, *reference).kind != VerdictKind::holds) continue;
        const bool back = is_deterministic(cand)
                              ? contained_in_deterministic(*reference, cand).kind == VerdictKind::holds
                              : bounded_equiv(cand, *reference, reverse_bound).kind != VerdictKind::fails;
        if (!back) continue;
      }
      r.found = cand;
      return r;
    }
  }
  return r;
}

}  // namespace gfg
