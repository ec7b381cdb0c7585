#pragma once

#include <optional>
#include <vector>

#include "gfg/automaton.hpp"
#include "gfg/language.hpp"
#include "gfg/strategy.hpp"

namespace gfg {

/// Two-player game on a finite graph; Eve wins a play iff its inf-set satisfies
/// the Rabin pairs. Every node needs a successor.
struct RabinGame {
  std::vector<bool> eve;  // owner per node
  Digraph succ;
  std::vector<AcceptancePair> pairs;

  std::size_t size() const noexcept { return succ.size(); }
};

inline constexpr StateId kNoChoice = static_cast<StateId>(-1);

struct GameSolution {
  StateSet eve_region;         // Adam wins on the complement
  std::vector<StateId> choice;  // memoryless Eve move on eve_region, kNoChoice elsewhere
};

inline constexpr std::size_t kGameBudget = 100000;

/// Recursive (McNaughton-Zielonka) solver specialised to Rabin conditions.
/// Throws CapExceeded when nodes × pairs exceeds `budget`.
GameSolution solve_rabin_game(const RabinGame& game, std::size_t budget = kGameBudget);

/// Letter game of `a` against a deterministic reference: Adam picks letters, Eve
/// resolves a's nondeterminism. Eve wins iff reference-rejecting or a-accepting.
struct GameArena {
  RabinGame game;
  Automaton automaton;  // completed input
  Automaton reference;  // completed reference
  std::vector<StateId> a_state;    // per node
  std::vector<StateId> ref_state;  // per node
  std::vector<LetterId> letter;    // pending letter of Eve nodes; kNoLetter at the start node
  StateId initial = 0;
  std::size_t original_states = 0;  // states of a before completion

  static constexpr LetterId kNoLetter = static_cast<LetterId>(-1);
  std::size_t adam_nodes() const;
  std::size_t eve_nodes() const { return game.size() - adam_nodes(); }
};

GameArena build_letter_game(const Automaton& a, const Automaton& dref);

struct GameVerdict {
  bool eve_wins = false;
  GameSolution solution;
};

GameVerdict solve_letter_game(const GameArena& arena, std::size_t budget = kGameBudget);

/// Memories = Adam nodes reachable under Eve's strategy (sink excluded, so ρ may be partial).
StrategyTransducer extract_strategy(const GameArena& arena, const GameVerdict& verdict,
                                    const std::string& name = "g_game");

struct GfgCheck {
  bool gfg = false;
  std::optional<StrategyTransducer> strategy;
  std::size_t adam_nodes = 0, eve_nodes = 0;
  Verdict a_in_ref;  // exact
  Verdict ref_in_a;  // bounded
};

/// Checks the reference (exact one way, bounded the other), then solves the letter game.
GfgCheck check_gfg(const Automaton& a, const Automaton& dref, std::size_t ref_bound = 4);

inline constexpr std::size_t kBruteForceBudget = 10000000;

/// Exhaustive search over transducers with at most `memory_bound` memories, by
/// increasing size, outputs, then steps. Accepts a candidate when its composition
/// equals `reference` exactly (if given) and no witness separates it.
std::optional<StrategyTransducer> brute_force_gfg(const Automaton& a, std::size_t memory_bound,
                                                  const std::optional<Automaton>& reference,
                                                  const std::vector<Witness>& witnesses = {},
                                                  std::size_t budget = kBruteForceBudget);

}  // namespace gfg
