#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gfg/state_set.hpp"

namespace gfg {

/// A Rabin/Streett pair. `bad` is the E component, `good` the F component.
struct AcceptancePair {
  StateSet bad;
  StateSet good;
  friend bool operator==(const AcceptancePair&, const AcceptancePair&) = default;
};

struct Buchi {
  StateSet accepting;
  friend bool operator==(const Buchi&, const Buchi&) = default;
};
struct CoBuchi {
  StateSet rejecting;
  friend bool operator==(const CoBuchi&, const CoBuchi&) = default;
};
/// Min-even parity: a set is accepting iff its least priority is even.
struct Parity {
  std::vector<unsigned> priority;
  friend bool operator==(const Parity&, const Parity&) = default;
};
struct Rabin {
  std::vector<AcceptancePair> pairs;
  friend bool operator==(const Rabin&, const Rabin&) = default;
};
struct Streett {
  std::vector<AcceptancePair> pairs;
  friend bool operator==(const Streett&, const Streett&) = default;
};
/// Büchi condition whose set is a union of strongly connected components.
struct Weak {
  StateSet accepting;
  friend bool operator==(const Weak&, const Weak&) = default;
};

using Acceptance = std::variant<Buchi, CoBuchi, Parity, Rabin, Streett, Weak>;

enum class AcceptanceKind { buchi, cobuchi, parity, rabin, streett, weak };

AcceptanceKind kind_of(const Acceptance& acc) noexcept;
std::string_view kind_name(AcceptanceKind k) noexcept;
/// Human-readable class name ("Büchi", "co-Büchi", ...).
std::string_view display_name(AcceptanceKind k) noexcept;
AcceptanceKind parse_kind(std::string_view name);

/// Number of states the condition is defined over; 0 for pair conditions without pairs.
std::size_t universe_of(const Acceptance& acc) noexcept;

/// Whether `s` satisfies `acc` when read as an inf-set.
/// Throws StructuralError if `s` lives in a different universe and
/// PreconditionError for the empty set under a parity condition.
bool satisfies(const Acceptance& acc, const StateSet& s);

/// Rabin pairs equivalent to `acc` on every nonempty set. Streett input throws.
std::vector<AcceptancePair> rabin_pairs(const Acceptance& acc);
/// Streett pairs equivalent to `acc` on every nonempty set. Rabin input throws.
std::vector<AcceptancePair> streett_pairs(const Acceptance& acc);

Acceptance as_rabin(const Acceptance& acc);
Acceptance as_streett(const Acceptance& acc);

/// Parity ladder: one pair per even priority p, E = {priority < p}, F = {priority == p}.
std::vector<AcceptancePair> parity_rabin_ladder(const Parity& p);
/// One pair per odd priority p, E = {priority == p}, F = {priority < p}.
std::vector<AcceptancePair> parity_streett_ladder(const Parity& p);

/// Condition over a new universe whose member m belongs to a lifted set
/// iff projection[m] belongs to the original set.
Acceptance lift(const Acceptance& acc, const std::vector<StateId>& projection);

/// Complementing condition on the same structure; exact for deterministic complete automata.
/// Rabin and Streett swap into each other with each pair's components exchanged.
Acceptance dual(const Acceptance& acc);

/// Condition with one extra state (index = old universe) that is rejecting
/// under every reading; used for completion with a sink.
Acceptance with_rejecting_sink(const Acceptance& acc, std::size_t num_states);

/// The same condition with states renumbered: new state i is old state kept[i].
Acceptance restrict_acceptance(const Acceptance& acc, const std::vector<StateId>& kept);

}  // namespace gfg
