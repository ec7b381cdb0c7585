#include "gfg/automaton.hpp"

#include <algorithm>
#include <set>

#include "gfg/errors.hpp"
#include "gfg/graph.hpp"

namespace gfg {

namespace {

void check_unique(const std::vector<std::string>& names, const char* what) {
  std::set<std::string_view> seen;
  for (const auto& n : names) {
    if (n.empty()) throw StructuralError(std::string("empty ") + what + " name");
    if (!seen.insert(n).second) throw StructuralError(std::string("duplicate ") + what + " '" + n + "'");
  }
}

void check_set(const StateSet& s, std::size_t n, const char* what) {
  if (s.universe() != n)
    throw StructuralError(std::string(what) + " references states outside the automaton");
}

void check_acceptance(const Acceptance& acc, std::size_t n) {
  switch (kind_of(acc)) {
    case AcceptanceKind::buchi: check_set(std::get<Buchi>(acc).accepting, n, "Büchi set"); break;
    case AcceptanceKind::cobuchi: check_set(std::get<CoBuchi>(acc).rejecting, n, "co-Büchi set"); break;
    case AcceptanceKind::weak: check_set(std::get<Weak>(acc).accepting, n, "weak set"); break;
    case AcceptanceKind::parity:
      if (std::get<Parity>(acc).priority.size() != n)
        throw StructuralError("parity map must assign a priority to every state");
      break;
    case AcceptanceKind::rabin:
      for (const auto& p : std::get<Rabin>(acc).pairs) {
        check_set(p.bad, n, "Rabin pair");
        check_set(p.good, n, "Rabin pair");
      }
      break;
    case AcceptanceKind::streett:
      for (const auto& p : std::get<Streett>(acc).pairs) {
        check_set(p.bad, n, "Streett pair");
        check_set(p.good, n, "Streett pair");
      }
      break;
  }
}

}  // namespace

Automaton::Automaton(std::string name, std::vector<std::string> alphabet, std::vector<std::string> states,
                     std::vector<StateId> initial, std::vector<Transition> transitions, Acceptance acceptance)
    : name_(std::move(name)),
      alphabet_(std::move(alphabet)),
      states_(std::move(states)),
      initial_(std::move(initial)),
      transitions_(std::move(transitions)),
      acceptance_(std::move(acceptance)) {
  check_unique(alphabet_, "letter");
  check_unique(states_, "state");
  if (initial_.empty()) throw StructuralError("automaton '" + name_ + "' has no initial state");
  std::sort(initial_.begin(), initial_.end());
  if (std::adjacent_find(initial_.begin(), initial_.end()) != initial_.end())
    throw StructuralError("duplicate initial state");
  for (StateId q : initial_)
    if (q >= states_.size()) throw StructuralError("initial state is not declared");
  succ_.assign(states_.size() * alphabet_.size(), {});
  std::set<Transition> seen;
  for (const auto& t : transitions_) {
    if (t.src >= states_.size() || t.dst >= states_.size() || t.letter >= alphabet_.size())
      throw StructuralError("transition references an undeclared state or letter");
    if (!seen.insert(t).second) throw StructuralError("duplicate transition " + describe(t));
    succ_[t.src * alphabet_.size() + t.letter].push_back(t.dst);
  }
  check_acceptance(acceptance_, states_.size());
  if (kind_of(acceptance_) == AcceptanceKind::weak && !is_weak_shape(*this, std::get<Weak>(acceptance_).accepting)) {
    const auto mixed = mixed_component(*this, std::get<Weak>(acceptance_).accepting);
    throw StructuralError("weak condition is not a union of SCCs: component " + describe(*mixed) +
                          " is mixed");
  }
}

bool Automaton::is_initial(StateId q) const {
  return std::binary_search(initial_.begin(), initial_.end(), q);
}

std::optional<std::size_t> Automaton::transition_index(const Transition& t) const {
  for (std::size_t i = 0; i < transitions_.size(); ++i)
    if (transitions_[i] == t) return i;
  return std::nullopt;
}

std::optional<StateId> Automaton::find_state(std::string_view name) const {
  for (std::size_t i = 0; i < states_.size(); ++i)
    if (states_[i] == name) return static_cast<StateId>(i);
  return std::nullopt;
}

std::optional<LetterId> Automaton::find_letter(std::string_view name) const {
  for (std::size_t i = 0; i < alphabet_.size(); ++i)
    if (alphabet_[i] == name) return static_cast<LetterId>(i);
  return std::nullopt;
}

Digraph Automaton::graph() const {
  Digraph g(states_.size());
  for (const auto& t : transitions_) g[t.src].push_back(t.dst);
  for (auto& adj : g) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  return g;
}

std::string Automaton::describe(const Transition& t) const {
  return "(" + states_.at(t.src) + "," + alphabet_.at(t.letter) + "," + states_.at(t.dst) + ")";
}

std::string Automaton::describe(const StateSet& s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](StateId q) {
    if (!first) out += ",";
    out += q < states_.size() ? states_[q] : "#" + std::to_string(q);
    first = false;
  });
  return out + "}";
}

Automaton Automaton::with_name(std::string name) const {
  Automaton copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

Automaton Automaton::with_acceptance(Acceptance acc) const {
  return Automaton(name_, alphabet_, states_, initial_, transitions_, std::move(acc));
}

Automaton Automaton::with_initial(std::vector<StateId> initial) const {
  return Automaton(name_, alphabet_, states_, std::move(initial), transitions_, acceptance_);
}

Automaton Automaton::with_transitions(std::vector<Transition> transitions) const {
  return Automaton(name_, alphabet_, states_, initial_, std::move(transitions), acceptance_);
}

Automaton Automaton::restricted_to(const StateSet& keep) const {
  const auto kept = keep.elements();
  std::vector<StateId> renumber(states_.size(), static_cast<StateId>(-1));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    renumber[kept[i]] = static_cast<StateId>(i);
    names.push_back(states_[kept[i]]);
  }
  std::vector<StateId> init;
  for (StateId q : initial_)
    if (keep.contains(q)) init.push_back(renumber[q]);
  std::vector<Transition> trans;
  for (const auto& t : transitions_)
    if (keep.contains(t.src) && keep.contains(t.dst)) trans.push_back({renumber[t.src], t.letter, renumber[t.dst]});
  return Automaton(name_, alphabet_, std::move(names), std::move(init), std::move(trans),
                   restrict_acceptance(acceptance_, kept));
}

// ---------------------------------------------------------------------------

AutomatonBuilder& AutomatonBuilder::alphabet(std::vector<std::string> letters) {
  alphabet_ = std::move(letters);
  return *this;
}

AutomatonBuilder& AutomatonBuilder::states(std::vector<std::string> states) {
  states_ = std::move(states);
  return *this;
}

AutomatonBuilder& AutomatonBuilder::initial(const std::vector<std::string>& states) {
  initial_.clear();
  for (const auto& s : states) initial_.push_back(state(s));
  return *this;
}

AutomatonBuilder& AutomatonBuilder::trans(std::string_view src, std::string_view letter, std::string_view dst) {
  transitions_.push_back({state(src), this->letter(letter), state(dst)});
  return *this;
}

StateId AutomatonBuilder::state(std::string_view name) const {
  for (std::size_t i = 0; i < states_.size(); ++i)
    if (states_[i] == name) return static_cast<StateId>(i);
  throw StructuralError("undeclared state '" + std::string(name) + "'");
}

LetterId AutomatonBuilder::letter(std::string_view name) const {
  for (std::size_t i = 0; i < alphabet_.size(); ++i)
    if (alphabet_[i] == name) return static_cast<LetterId>(i);
  throw StructuralError("undeclared letter '" + std::string(name) + "'");
}

StateSet AutomatonBuilder::set(const std::vector<std::string>& names) const {
  StateSet s(states_.size());
  for (const auto& n : names) s.insert(state(n));
  return s;
}

AutomatonBuilder& AutomatonBuilder::buchi(const std::vector<std::string>& accepting) {
  acceptance_ = Buchi{set(accepting)};
  return *this;
}

AutomatonBuilder& AutomatonBuilder::cobuchi(const std::vector<std::string>& rejecting) {
  acceptance_ = CoBuchi{set(rejecting)};
  return *this;
}

AutomatonBuilder& AutomatonBuilder::weak(const std::vector<std::string>& accepting) {
  acceptance_ = Weak{set(accepting)};
  return *this;
}

AutomatonBuilder& AutomatonBuilder::parity(const std::vector<std::pair<std::string, unsigned>>& priorities) {
  Parity p;
  p.priority.assign(states_.size(), 0);
  std::vector<bool> given(states_.size(), false);
  for (const auto& [name, pr] : priorities) {
    p.priority[state(name)] = pr;
    given[state(name)] = true;
  }
  if (std::find(given.begin(), given.end(), false) != given.end())
    throw StructuralError("parity map must assign a priority to every state");
  acceptance_ = std::move(p);
  return *this;
}

AutomatonBuilder& AutomatonBuilder::rabin() {
  acceptance_ = Rabin{};
  return *this;
}

AutomatonBuilder& AutomatonBuilder::streett() {
  acceptance_ = Streett{};
  return *this;
}

AutomatonBuilder& AutomatonBuilder::rabin_pair(const std::vector<std::string>& bad,
                                               const std::vector<std::string>& good) {
  if (!acceptance_ || kind_of(*acceptance_) != AcceptanceKind::rabin) acceptance_ = Rabin{};
  std::get<Rabin>(*acceptance_).pairs.push_back({set(bad), set(good)});
  return *this;
}

AutomatonBuilder& AutomatonBuilder::streett_pair(const std::vector<std::string>& bad,
                                                 const std::vector<std::string>& good) {
  if (!acceptance_ || kind_of(*acceptance_) != AcceptanceKind::streett) acceptance_ = Streett{};
  std::get<Streett>(*acceptance_).pairs.push_back({set(bad), set(good)});
  return *this;
}

Automaton AutomatonBuilder::build() const {
  if (!acceptance_) throw StructuralError("automaton '" + name_ + "' has no acceptance condition");
  return Automaton(name_, alphabet_, states_, initial_, transitions_, *acceptance_);
}

}  // namespace gfg
