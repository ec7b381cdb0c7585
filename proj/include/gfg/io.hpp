#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gfg/automaton.hpp"
#include "gfg/language.hpp"
#include "gfg/strategy.hpp"

namespace gfg {

/// Line-based automaton format ('#' comments):
///   automaton NAME / alphabet a b / states q0 q1 / initial q0 / trans SRC LETTER DST /
///   acc buchi|cobuchi|weak q.. | acc parity q:p .. | acc rabin|streett (E: q.. | F: q..) ..
/// Throws ParseError with the offending line and column.
Automaton parse_automaton(std::string_view text);
/// Canonical form: declaration order everywhere.
std::string print_automaton(const Automaton& a);

/// strategy NAME / automaton NAME / memory m: q / initial m / step m letter m'
/// Resolved against `a`, whose name must match.
StrategyTransducer parse_strategy(std::string_view text, const Automaton& a);
std::string print_strategy(const StrategyTransducer& g, const Automaton& a);

/// One witness per line: accept U:V | reject U:V
std::vector<Witness> parse_witnesses(std::string_view text, const std::vector<std::string>& alphabet);
std::string print_witnesses(const std::vector<Witness>& ws, const std::vector<std::string>& alphabet);

/// HOA v1, state-based acceptance.
std::string to_hoa(const Automaton& a);
std::string to_dot(const Automaton& a);
std::string to_dot(const StrategyTransducer& g, const Automaton& a);

/// Single-line rendering of a condition in the automaton format, without "acc ".
std::string condition_to_text(const Automaton& a, const Acceptance& acc);

}  // namespace gfg
