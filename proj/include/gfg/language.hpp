#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gfg/automaton.hpp"
#include "gfg/emptiness.hpp"
#include "gfg/lasso.hpp"

namespace gfg {

enum class VerdictKind { holds, fails, unknown };

struct Verdict {
  VerdictKind kind = VerdictKind::unknown;
  std::optional<Lasso> counterexample;  // set iff kind == fails
  std::size_t bound_used = 0;           // set iff kind == unknown

  static Verdict holds() { return {VerdictKind::holds, std::nullopt, 0}; }
  static Verdict fails(Lasso w) { return {VerdictKind::fails, std::move(w), 0}; }
  static Verdict unknown(std::size_t bound) { return {VerdictKind::unknown, std::nullopt, bound}; }
};

std::string_view verdict_name(VerdictKind k) noexcept;

using Witness = std::pair<Lasso, bool>;

/// Adds a fresh rejecting sink when some (state, letter) has no successor; identity otherwise.
Automaton complete(const Automaton& a);

/// Complement of a deterministic automaton on the same (completed) structure.
/// Throws PreconditionError on nondeterministic input.
Automaton dualize_deterministic(const Automaton& d);

/// Exact check of L(a) ⊆ L(d) for deterministic d; never returns unknown.
Verdict contained_in_deterministic(const Automaton& a, const Automaton& d);

/// Every lasso with |u| ≤ bound, 1 ≤ |v| ≤ bound, ordered by |u|+|v|, then |u|, then
/// lexicographically by letter index. `visit` returns false to stop.
void for_each_lasso(std::size_t num_letters, std::size_t bound, const std::function<bool(const Lasso&)>& visit);
std::size_t lasso_count(std::size_t num_letters, std::size_t bound);

inline constexpr std::size_t kLassoBudget = 1u << 20;

/// Default bound |Qa|·|Qb|, lowered until the sweep fits kLassoBudget.
std::size_t default_equiv_bound(const Automaton& a, const Automaton& b);

/// Fails on the first lasso (in for_each_lasso order) on which memberships differ,
/// unknown(bound) otherwise. bound 0 selects default_equiv_bound.
Verdict bounded_equiv(const Automaton& a, const Automaton& b, std::size_t bound = 0);

/// First witness whose membership disagrees with the expected verdict.
std::optional<Lasso> separated_by_witnesses(const Automaton& a, const std::vector<Witness>& expected);

/// Same automaton with a single initial state q.
Automaton rebased(const Automaton& a, StateId q);

}  // namespace gfg
