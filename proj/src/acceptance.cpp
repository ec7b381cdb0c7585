#include "gfg/acceptance.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "gfg/errors.hpp"

namespace gfg {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

StateSet resized(const StateSet& s, std::size_t universe) {
  StateSet out(universe);
  s.for_each([&](StateId q) {
    if (q < universe) out.insert(q);
  });
  return out;
}

StateSet lift_set(const StateSet& s, const std::vector<StateId>& projection) {
  StateSet out(projection.size());
  for (std::size_t m = 0; m < projection.size(); ++m)
    if (s.contains(projection[m])) out.insert(static_cast<StateId>(m));
  return out;
}

StateSet restrict_set(const StateSet& s, const std::vector<StateId>& kept) {
  StateSet out(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i)
    if (s.contains(kept[i])) out.insert(static_cast<StateId>(i));
  return out;
}

std::vector<AcceptancePair> map_pairs(const std::vector<AcceptancePair>& pairs, auto&& f) {
  std::vector<AcceptancePair> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back({f(p.bad), f(p.good)});
  return out;
}

}  // namespace

AcceptanceKind kind_of(const Acceptance& acc) noexcept {
  return static_cast<AcceptanceKind>(acc.index());
}

std::string_view kind_name(AcceptanceKind k) noexcept {
  switch (k) {
    case AcceptanceKind::buchi: return "buchi";
    case AcceptanceKind::cobuchi: return "cobuchi";
    case AcceptanceKind::parity: return "parity";
    case AcceptanceKind::rabin: return "rabin";
    case AcceptanceKind::streett: return "streett";
    case AcceptanceKind::weak: return "weak";
  }
  return "?";
}

std::string_view display_name(AcceptanceKind k) noexcept {
  switch (k) {
    case AcceptanceKind::buchi: return "Büchi";
    case AcceptanceKind::cobuchi: return "co-Büchi";
    case AcceptanceKind::parity: return "parity";
    case AcceptanceKind::rabin: return "Rabin";
    case AcceptanceKind::streett: return "Streett";
    case AcceptanceKind::weak: return "weak";
  }
  return "?";
}

AcceptanceKind parse_kind(std::string_view name) {
  for (auto k : {AcceptanceKind::buchi, AcceptanceKind::cobuchi, AcceptanceKind::parity,
                 AcceptanceKind::rabin, AcceptanceKind::streett, AcceptanceKind::weak})
    if (kind_name(k) == name) return k;
  throw PreconditionError("unknown acceptance kind '" + std::string(name) + "'");
}

std::size_t universe_of(const Acceptance& acc) noexcept {
  return std::visit(overloaded{
                        [](const Buchi& b) { return b.accepting.universe(); },
                        [](const CoBuchi& c) { return c.rejecting.universe(); },
                        [](const Parity& p) { return p.priority.size(); },
                        [](const Weak& w) { return w.accepting.universe(); },
                        [](const auto& pairs) -> std::size_t {
                          // Rabin/Streett with no pairs carry no universe information.
                          return pairs.pairs.empty() ? 0 : pairs.pairs.front().bad.universe();
                        },
                    },
                    acc);
}

bool satisfies(const Acceptance& acc, const StateSet& s) {
  const std::size_t u = universe_of(acc);
  const bool pairless = (kind_of(acc) == AcceptanceKind::rabin && std::get<Rabin>(acc).pairs.empty()) ||
                        (kind_of(acc) == AcceptanceKind::streett && std::get<Streett>(acc).pairs.empty());
  if (!pairless && s.universe() != u)
    throw StructuralError("state set over " + std::to_string(s.universe()) +
                          " states evaluated against a condition over " + std::to_string(u));
  return std::visit(overloaded{
                        [&](const Buchi& b) { return s.intersects(b.accepting); },
                        [&](const CoBuchi& c) { return !s.intersects(c.rejecting); },
                        [&](const Weak& w) { return s.intersects(w.accepting); },
                        [&](const Parity& p) {
                          if (s.empty()) throw PreconditionError("parity condition undefined on empty set");
                          unsigned least = std::numeric_limits<unsigned>::max();
                          s.for_each([&](StateId q) { least = std::min(least, p.priority[q]); });
                          return least % 2 == 0;
                        },
                        [&](const Rabin& r) {
                          return std::any_of(r.pairs.begin(), r.pairs.end(), [&](const AcceptancePair& p) {
                            return !s.intersects(p.bad) && s.intersects(p.good);
                          });
                        },
                        [&](const Streett& st) {
                          return std::all_of(st.pairs.begin(), st.pairs.end(), [&](const AcceptancePair& p) {
                            return !s.intersects(p.bad) || s.intersects(p.good);
                          });
                        },
                    },
                    acc);
}

std::vector<AcceptancePair> parity_rabin_ladder(const Parity& p) {
  const std::size_t n = p.priority.size();
  std::set<unsigned> evens;
  for (unsigned pr : p.priority)
    if (pr % 2 == 0) evens.insert(pr);
  std::vector<AcceptancePair> pairs;
  for (unsigned even : evens) {
    AcceptancePair pair{StateSet(n), StateSet(n)};
    for (std::size_t q = 0; q < n; ++q) {
      if (p.priority[q] < even) pair.bad.insert(static_cast<StateId>(q));
      if (p.priority[q] == even) pair.good.insert(static_cast<StateId>(q));
    }
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

std::vector<AcceptancePair> parity_streett_ladder(const Parity& p) {
  const std::size_t n = p.priority.size();
  std::set<unsigned> odds;
  for (unsigned pr : p.priority)
    if (pr % 2 == 1) odds.insert(pr);
  std::vector<AcceptancePair> pairs;
  for (unsigned odd : odds) {
    AcceptancePair pair{StateSet(n), StateSet(n)};
    for (std::size_t q = 0; q < n; ++q) {
      if (p.priority[q] == odd) pair.bad.insert(static_cast<StateId>(q));
      if (p.priority[q] < odd) pair.good.insert(static_cast<StateId>(q));
    }
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

std::vector<AcceptancePair> rabin_pairs(const Acceptance& acc) {
  return std::visit(overloaded{
                        [](const Buchi& b) {
                          return std::vector<AcceptancePair>{{StateSet(b.accepting.universe()), b.accepting}};
                        },
                        [](const Weak& w) {
                          return std::vector<AcceptancePair>{{StateSet(w.accepting.universe()), w.accepting}};
                        },
                        [](const CoBuchi& c) {
                          return std::vector<AcceptancePair>{{c.rejecting, StateSet::full(c.rejecting.universe())}};
                        },
                        [](const Parity& p) { return parity_rabin_ladder(p); },
                        [](const Rabin& r) { return r.pairs; },
                        [](const Streett&) -> std::vector<AcceptancePair> {
                          throw UnsupportedError("Streett condition has no Rabin encoding on the same structure");
                        },
                    },
                    acc);
}

std::vector<AcceptancePair> streett_pairs(const Acceptance& acc) {
  return std::visit(overloaded{
                        [](const Buchi& b) {
                          return std::vector<AcceptancePair>{{StateSet::full(b.accepting.universe()), b.accepting}};
                        },
                        [](const Weak& w) {
                          return std::vector<AcceptancePair>{{StateSet::full(w.accepting.universe()), w.accepting}};
                        },
                        [](const CoBuchi& c) {
                          return std::vector<AcceptancePair>{{c.rejecting, StateSet(c.rejecting.universe())}};
                        },
                        [](const Parity& p) { return parity_streett_ladder(p); },
                        [](const Streett& s) { return s.pairs; },
                        [](const Rabin&) -> std::vector<AcceptancePair> {
                          throw UnsupportedError("Rabin condition has no Streett encoding on the same structure");
                        },
                    },
                    acc);
}

Acceptance as_rabin(const Acceptance& acc) { return Rabin{rabin_pairs(acc)}; }
Acceptance as_streett(const Acceptance& acc) { return Streett{streett_pairs(acc)}; }

Acceptance lift(const Acceptance& acc, const std::vector<StateId>& projection) {
  auto f = [&](const StateSet& s) { return lift_set(s, projection); };
  return std::visit(overloaded{
                        [&](const Buchi& b) -> Acceptance { return Buchi{f(b.accepting)}; },
                        [&](const CoBuchi& c) -> Acceptance { return CoBuchi{f(c.rejecting)}; },
                        [&](const Weak& w) -> Acceptance { return Weak{f(w.accepting)}; },
                        [&](const Parity& p) -> Acceptance {
                          Parity out;
                          out.priority.reserve(projection.size());
                          for (StateId q : projection) out.priority.push_back(p.priority.at(q));
                          return out;
                        },
                        [&](const Rabin& r) -> Acceptance { return Rabin{map_pairs(r.pairs, f)}; },
                        [&](const Streett& s) -> Acceptance { return Streett{map_pairs(s.pairs, f)}; },
                    },
                    acc);
}

namespace {
std::vector<AcceptancePair> swapped(const std::vector<AcceptancePair>& pairs) {
  std::vector<AcceptancePair> out;
  for (const auto& p : pairs) out.push_back({p.good, p.bad});
  return out;
}
}  // namespace

Acceptance dual(const Acceptance& acc) {
  return std::visit(overloaded{
                        [](const Buchi& b) -> Acceptance { return CoBuchi{b.accepting}; },
                        [](const CoBuchi& c) -> Acceptance { return Buchi{c.rejecting}; },
                        [](const Weak& w) -> Acceptance { return Weak{w.accepting.complement()}; },
                        [](const Parity& p) -> Acceptance {
                          Parity out = p;
                          for (auto& pr : out.priority) ++pr;
                          return out;
                        },
                        [](const Rabin& r) -> Acceptance { return Streett{swapped(r.pairs)}; },
                        [](const Streett& s) -> Acceptance { return Rabin{swapped(s.pairs)}; },
                    },
                    acc);
}

Acceptance with_rejecting_sink(const Acceptance& acc, std::size_t num_states) {
  const std::size_t n = num_states;
  const auto sink = static_cast<StateId>(n);
  auto grow = [&](const StateSet& s) { return resized(s, n + 1); };
  return std::visit(overloaded{
                        [&](const Buchi& b) -> Acceptance { return Buchi{grow(b.accepting)}; },
                        [&](const Weak& w) -> Acceptance { return Weak{grow(w.accepting)}; },
                        [&](const CoBuchi& c) -> Acceptance {
                          auto s = grow(c.rejecting);
                          s.insert(sink);
                          return CoBuchi{s};
                        },
                        [&](const Parity& p) -> Acceptance {
                          Parity out = p;
                          unsigned top = 1;
                          for (unsigned pr : p.priority) top = std::max(top, pr + 1);
                          if (top % 2 == 0) ++top;
                          out.priority.push_back(top);
                          return out;
                        },
                        [&](const Rabin& r) -> Acceptance {
                          Rabin out;
                          for (const auto& p : r.pairs) {
                            AcceptancePair q{grow(p.bad), grow(p.good)};
                            q.bad.insert(sink);
                            out.pairs.push_back(std::move(q));
                          }
                          return out;
                        },
                        [&](const Streett& s) -> Acceptance {
                          Streett out;
                          for (const auto& p : s.pairs) out.pairs.push_back({grow(p.bad), grow(p.good)});
                          AcceptancePair fresh{StateSet(n + 1), StateSet(n + 1)};
                          fresh.bad.insert(sink);
                          out.pairs.push_back(std::move(fresh));
                          return out;
                        },
                    },
                    acc);
}

Acceptance restrict_acceptance(const Acceptance& acc, const std::vector<StateId>& kept) {
  auto f = [&](const StateSet& s) { return restrict_set(s, kept); };
  return std::visit(overloaded{
                        [&](const Buchi& b) -> Acceptance { return Buchi{f(b.accepting)}; },
                        [&](const CoBuchi& c) -> Acceptance { return CoBuchi{f(c.rejecting)}; },
                        [&](const Weak& w) -> Acceptance { return Weak{f(w.accepting)}; },
                        [&](const Parity& p) -> Acceptance {
                          Parity out;
                          for (StateId q : kept) out.priority.push_back(p.priority.at(q));
                          return out;
                        },
                        [&](const Rabin& r) -> Acceptance { return Rabin{map_pairs(r.pairs, f)}; },
                        [&](const Streett& s) -> Acceptance { return Streett{map_pairs(s.pairs, f)}; },
                    },
                    acc);
}

}  // namespace gfg
