#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gfg/automaton.hpp"
#include "gfg/language.hpp"
#include "gfg/strategy.hpp"

namespace gfg {

/// One logged step, by names so the log survives renumbering.
struct TransformStep {
  enum class Kind {
    remove_transition,  // src, letter, dst
    drop_memory,        // memory (unreachable)
    merge_memory,       // memory -> into
    remove_from_good,   // state removed from pair `pair`'s good set
    set_condition,      // acceptance replaced by `condition`
    remove_state,       // state
    set_initial,        // state becomes the only initial state
  };
  Kind kind = Kind::set_condition;
  std::string src, letter, dst;
  std::string memory, into;
  std::string state;
  std::size_t pair = 0;
  std::optional<Acceptance> condition;

  std::string describe(const Automaton& before) const;
};

std::string_view step_kind_name(TransformStep::Kind k) noexcept;

struct TransformReport {
  Automaton automaton;
  std::optional<StrategyTransducer> strategy;
  std::vector<TransformStep> log;
  std::vector<std::string> notes;
  Verdict verification;  // bounded_equiv(input, output); never fails in a returned report
  std::string verification_summary;
};

struct TransformOptions {
  std::size_t verify_bound = 4;  // 0 skips verification
  std::size_t cap = kDefaultCycleCap;
  /// streett_to_cobuchi: also quantify over unreachable memories.
  bool include_unreachable_memories = false;
};

/// Applies `log` to the inputs; reproduces the report's automaton and strategy.
std::pair<Automaton, std::optional<StrategyTransducer>> replay(const Automaton& a,
                                                               std::optional<StrategyTransducer> g,
                                                               const std::vector<TransformStep>& log);

/// Removes unused transitions and merges replaceable memories until tight.
TransformReport tighten(const Automaton& a, const StrategyTransducer& g, const TransformOptions& opt = {});

/// Removes good-set states lacking a q-exclusive accepting cycle. Requires tightness.
TransformReport strong_tighten(const Automaton& a, const StrategyTransducer& g, const TransformOptions& opt = {});

/// co-Büchi condition α' on the same structure. Requires weak tightness.
TransformReport streett_to_cobuchi(const Automaton& a, const StrategyTransducer& g,
                                   const TransformOptions& opt = {});

/// Strong tightening followed by the Büchi condition ⋃ F_i. Requires tightness.
TransformReport rabin_to_buchi(const Automaton& a, const StrategyTransducer& g, const TransformOptions& opt = {});

/// Weak condition Q \ S'. Requires tightness; throws PreconditionError on a mixed SCC.
TransformReport cobuchi_to_weak(const Automaton& a, const StrategyTransducer& g, const TransformOptions& opt = {});

/// Prunes unreachable and empty-language states; the result must be deterministic.
TransformReport unambiguous_detbyp(const Automaton& a, const TransformOptions& opt = {});

/// Merges memories of non-accepting states, then prunes to used transitions.
TransformReport weak_detbyp(const Automaton& a, const StrategyTransducer& g, const TransformOptions& opt = {});

inline constexpr std::size_t kTypenessBudget = 1u << 16;

struct TypenessResult {
  std::optional<Automaton> found;  // first surviving candidate
  std::size_t candidates = 0;      // condition candidates enumerated
};

/// Enumerates α ⊆ Q (ascending bitmask) per substructure (default: `a` itself) for
/// target ∈ {buchi, cobuchi, weak}. A candidate survives when no witness separates it
/// and, given `reference` (deterministic), it is equivalent to it: exact in the
/// candidate→reference direction, exact in reverse for deterministic candidates and
/// bounded by `reverse_bound` otherwise.
TypenessResult typeness_search(const Automaton& a, AcceptanceKind target, const std::vector<Witness>& witnesses,
                               const std::optional<Automaton>& reference = std::nullopt,
                               const std::vector<Automaton>& substructures = {},
                               std::size_t budget = kTypenessBudget, std::size_t reverse_bound = 4);

}  // namespace gfg
