#include "gfg/language.hpp"

#include "gfg/errors.hpp"
#include "gfg/graph.hpp"

namespace gfg {

std::string_view verdict_name(VerdictKind k) noexcept {
  switch (k) {
    case VerdictKind::holds: return "holds";
    case VerdictKind::fails: return "fails";
    case VerdictKind::unknown: return "unknown";
  }
  return "?";
}

Automaton complete(const Automaton& a) {
  if (is_complete(a)) return a;
  const auto sink = static_cast<StateId>(a.num_states());
  std::string sink_name = "sink";
  while (a.find_state(sink_name)) sink_name += "'";
  auto states = a.states();
  states.push_back(sink_name);
  auto trans = a.transitions();
  for (StateId q = 0; q <= sink; ++q)
    for (LetterId l = 0; l < a.num_letters(); ++l)
      if (q == sink || a.successors(q, l).empty()) trans.push_back({q, l, sink});
  return Automaton(a.name(), a.alphabet(), std::move(states), a.initial(), std::move(trans),
                   with_rejecting_sink(a.acceptance(), a.num_states()));
}

Automaton dualize_deterministic(const Automaton& d) {
  if (!is_deterministic(d)) throw PreconditionError("dualize: automaton '" + d.name() + "' is not deterministic");
  const auto c = complete(d);
  return c.with_acceptance(dual(c.acceptance()));
}

Verdict contained_in_deterministic(const Automaton& a, const Automaton& d) {
  if (a.alphabet() != d.alphabet()) throw StructuralError("containment check over different alphabets");
  const auto nd = dualize_deterministic(d);
  const auto p = product(labeled_graph(a), labeled_graph(nd));
  const auto cond = conjoin(lift(general_condition(a.acceptance(), a.num_states()), p.left),
                            lift(general_condition(nd.acceptance(), nd.num_states()), p.right));
  if (auto w = find_accepting_lasso(p.graph, cond)) return Verdict::fails(*w);
  return Verdict::holds();
}

std::size_t lasso_count(std::size_t num_letters, std::size_t bound) {
  // (Σ_{i≤b} k^i) · (Σ_{1≤j≤b} k^j), saturating
  constexpr std::size_t kMax = static_cast<std::size_t>(-1) / 4;
  std::size_t prefixes = 0, power = 1, cycles = 0;
  for (std::size_t i = 0; i <= bound; ++i) {
    prefixes += power;
    if (i > 0) cycles += power;
    if (power > kMax / std::max<std::size_t>(num_letters, 1)) return kMax;
    power *= num_letters;
  }
  if (cycles != 0 && prefixes > kMax / cycles) return kMax;
  return prefixes * cycles;
}

void for_each_lasso(std::size_t k, std::size_t bound, const std::function<bool(const Lasso&)>& visit) {
  if (k == 0) return;
  for (std::size_t total = 1; total <= 2 * bound; ++total) {
    for (std::size_t u = 0; u <= bound && u < total; ++u) {
      const std::size_t v = total - u;
      if (v > bound) continue;
      std::vector<LetterId> word(total, 0);
      while (true) {
        Lasso w{{word.begin(), word.begin() + static_cast<std::ptrdiff_t>(u)},
                {word.begin() + static_cast<std::ptrdiff_t>(u), word.end()}};
        if (!visit(w)) return;
        // next word in lexicographic order (last position fastest)
        std::size_t i = total;
        while (i > 0 && word[i - 1] + 1 == k) word[--i] = 0;
        if (i == 0) break;
        ++word[i - 1];
      }
    }
  }
}

std::size_t default_equiv_bound(const Automaton& a, const Automaton& b) {
  std::size_t bound = std::max<std::size_t>(1, a.num_states() * b.num_states());
  while (bound > 1 && lasso_count(a.num_letters(), bound) > kLassoBudget) --bound;
  return bound;
}

Verdict bounded_equiv(const Automaton& a, const Automaton& b, std::size_t bound) {
  if (a.alphabet() != b.alphabet()) throw StructuralError("equivalence check over different alphabets");
  if (bound == 0) bound = default_equiv_bound(a, b);
  if (lasso_count(a.num_letters(), bound) > kLassoBudget)
    throw CapExceeded("lasso sweep at bound " + std::to_string(bound) + " exceeds the budget of " +
                      std::to_string(kLassoBudget) + " lassos");
  std::optional<Lasso> diff;
  for_each_lasso(a.num_letters(), bound, [&](const Lasso& w) {
    if (member(a, w) != member(b, w)) {
      diff = w;
      return false;
    }
    return true;
  });
  if (diff) return Verdict::fails(*diff);
  return Verdict::unknown(bound);
}

std::optional<Lasso> separated_by_witnesses(const Automaton& a, const std::vector<Witness>& expected) {
  for (const auto& [w, verdict] : expected)
    if (member(a, w) != verdict) return w;
  return std::nullopt;
}

Automaton rebased(const Automaton& a, StateId q) { return a.with_initial({q}); }

}  // namespace gfg
