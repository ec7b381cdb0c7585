#pragma once
// Figure automata built directly with the builder, independent of the text corpus.

#include "gfg/automaton.hpp"
#include "gfg/strategy.hpp"

namespace fx {

using gfg::Automaton;
using gfg::AutomatonBuilder;

// Fig. 1: infinitely many b's.
inline Automaton a0() {
  return AutomatonBuilder("a0")
      .alphabet({"a", "b"})
      .states({"q0", "q1", "q2"})
      .initial({"q2"})
      .trans("q2", "b", "q2")
      .trans("q2", "a", "q1")
      .trans("q1", "a", "q1")
      .trans("q1", "a", "q2")
      .trans("q1", "b", "q0")
      .trans("q0", "b", "q0")
      .trans("q0", "a", "q1")
      .parity({{"q0", 0}, {"q1", 1}, {"q2", 2}})
      .build();
}

inline Automaton a0_pruned() {
  return AutomatonBuilder("a0_pruned")
      .alphabet({"a", "b"})
      .states({"q0", "q1", "q2"})
      .initial({"q2"})
      .trans("q2", "b", "q2")
      .trans("q2", "a", "q1")
      .trans("q1", "a", "q1")
      .trans("q1", "b", "q0")
      .trans("q0", "b", "q0")
      .trans("q0", "a", "q1")
      .parity({{"q0", 0}, {"q1", 1}, {"q2", 2}})
      .build();
}

// Textbook DBW for "infinitely many b's".
inline Automaton dbw_l0() {
  return AutomatonBuilder("dbw_l0")
      .alphabet({"a", "b"})
      .states({"d0", "d1"})
      .initial({"d0"})
      .trans("d0", "a", "d0")
      .trans("d0", "b", "d1")
      .trans("d1", "a", "d0")
      .trans("d1", "b", "d1")
      .buchi({"d1"})
      .build();
}

// Fig. 4.
inline Automaton a1() {
  return AutomatonBuilder("a1")
      .alphabet({"a", "b"})
      .states({"q00", "q01", "q10", "q11", "p0", "p1", "p2"})
      .initial({"q00", "q01", "p0"})
      .trans("q00", "b", "q00")
      .trans("q00", "b", "q01")
      .trans("q00", "a", "q11")
      .trans("q11", "a", "q00")
      .trans("q10", "a", "q01")
      .trans("q01", "a", "q10")
      .trans("q10", "b", "q11")
      .trans("q10", "b", "q10")
      .trans("p0", "b", "p0")
      .trans("p0", "a", "p1")
      .trans("p1", "a", "p1")
      .trans("p1", "b", "p2")
      .trans("p2", "a", "p0")
      .trans("p2", "b", "p0")
      .parity({{"q00", 2}, {"q01", 1}, {"q10", 1}, {"q11", 1}, {"p0", 1}, {"p1", 1}, {"p2", 0}})
      .build();
}

// Fig. 5.
inline Automaton dbw_l1() {
  return AutomatonBuilder("dbw_l1")
      .alphabet({"a", "b"})
      .states({"q00", "q01", "q10", "q11", "q12"})
      .initial({"q00"})
      .trans("q00", "b", "q01")
      .trans("q01", "b", "q01")
      .trans("q10", "b", "q11")
      .trans("q11", "b", "q12")
      .trans("q12", "b", "q12")
      .trans("q00", "a", "q10")
      .trans("q10", "a", "q00")
      .trans("q11", "a", "q00")
      .trans("q12", "a", "q00")
      .trans("q01", "a", "q10")
      .buchi({"q01", "q11"})
      .build();
}

// Fig. 6.
inline Automaton a2() {
  return AutomatonBuilder("a2")
      .alphabet({"a", "b"})
      .states({"q0", "q1", "q2", "q3"})
      .initial({"q0"})
      .trans("q0", "b", "q2")
      .trans("q0", "a", "q1")
      .trans("q2", "a", "q3")
      .trans("q2", "a", "q1")
      .trans("q1", "b", "q2")
      .trans("q2", "b", "q2")
      .trans("q3", "a", "q3")
      .trans("q1", "a", "q1")
      .buchi({"q2", "q3"})
      .build();
}

// Fig. 8.
inline Automaton a3(bool pruned = false) {
  AutomatonBuilder b(pruned ? "a3_pruned" : "a3");
  b.alphabet({"a", "b"}).states({"q0", "q1", "p0", "p1", "p2"}).initial({"q0"});
  if (!pruned) b.trans("q0", "b", "q0");
  b.trans("q0", "a", "q1")
      .trans("q1", "a", "q0")
      .trans("q0", "b", "p0")
      .trans("p0", "b", "p0")
      .trans("p0", "a", "p1")
      .trans("p1", "a", "p2")
      .trans("p2", "a", "p1")
      .trans("p2", "b", "p2")
      .buchi({"q1", "p1", "p2"});
  return b.build();
}

// Fig. 7.
inline Automaton a4() {
  return AutomatonBuilder("a4")
      .alphabet({"a", "b"})
      .states({"q0", "q1", "p0", "p1"})
      .initial({"q0"})
      .trans("q0", "a", "q1")
      .trans("q0", "b", "q1")
      .trans("q1", "a", "q1")
      .trans("q1", "b", "q0")
      .trans("q0", "b", "p0")
      .trans("q1", "b", "p0")
      .trans("p0", "b", "p0")
      .trans("p0", "a", "p1")
      .trans("p1", "a", "p1")
      .trans("p1", "b", "p1")
      .cobuchi({"q0", "p0"})
      .build();
}

inline Automaton dcw_contains_b() {
  return AutomatonBuilder("dcw_contains_b")
      .alphabet({"a", "b"})
      .states({"q0", "q1"})
      .initial({"q0"})
      .trans("q0", "a", "q0")
      .trans("q0", "b", "q1")
      .trans("q1", "a", "q1")
      .trans("q1", "b", "q1")
      .cobuchi({"q0"})
      .build();
}

// Guesses the last b: finitely many b's.
inline Automaton nbw_fin_b() {
  return AutomatonBuilder("nbw_fin_b")
      .alphabet({"a", "b"})
      .states({"q0", "q1"})
      .initial({"q0"})
      .trans("q0", "a", "q0")
      .trans("q0", "b", "q0")
      .trans("q0", "a", "q1")
      .trans("q1", "a", "q1")
      .buchi({"q1"})
      .build();
}

inline Automaton dcw_fin_b() {
  return AutomatonBuilder("dcw_fin_b")
      .alphabet({"a", "b"})
      .states({"r0", "r1"})
      .initial({"r0"})
      .trans("r0", "a", "r0")
      .trans("r0", "b", "r1")
      .trans("r1", "a", "r0")
      .trans("r1", "b", "r1")
      .cobuchi({"r1"})
      .build();
}

// Everything over {a,b}, Büchi.
inline Automaton nbw_all() {
  return AutomatonBuilder("nbw_all")
      .alphabet({"a", "b"})
      .states({"s"})
      .initial({"s"})
      .trans("s", "a", "s")
      .trans("s", "b", "s")
      .buchi({"s"})
      .build();
}

using gfg::StrategyTransducer;

// Fig. 2.
inline StrategyTransducer g_fig2(const Automaton& a) {
  return gfg::make_strategy(a, "g_fig2", {{"m0", "q0"}, {"m1", "q1"}, {"m1'", "q1"}, {"m2", "q2"}}, "m2",
                            {{"m2", "b", "m2"},
                             {"m2", "a", "m1'"},
                             {"m1'", "a", "m1'"},
                             {"m1'", "b", "m0"},
                             {"m1", "a", "m2"},
                             {"m1", "b", "m0"},
                             {"m0", "b", "m0"},
                             {"m0", "a", "m1"}});
}

// Fig. 3, over a0_pruned.
inline StrategyTransducer g_fig3(const Automaton& a) {
  return gfg::make_strategy(a, "g_fig3", {{"m0", "q0"}, {"m1'", "q1"}, {"m2", "q2"}}, "m2",
                            {{"m2", "b", "m2"},
                             {"m2", "a", "m1'"},
                             {"m1'", "a", "m1'"},
                             {"m1'", "b", "m0"},
                             {"m0", "b", "m0"},
                             {"m0", "a", "m1'"}});
}

// Does not witness GFGness: after q2 it always bounces back on a, so (aab)^ω is lost.
inline StrategyTransducer g_broken(const Automaton& a) {
  return gfg::make_strategy(a, "g_broken", {{"m0", "q0"}, {"m1", "q1"}, {"m2", "q2"}}, "m2",
                            {{"m2", "b", "m2"},
                             {"m2", "a", "m1"},
                             {"m1", "a", "m2"},
                             {"m1", "b", "m0"},
                             {"m0", "b", "m0"},
                             {"m0", "a", "m1"}});
}

// Weak GFG automaton for "contains a b" with a redundant nondeterministic a-edge.
inline Automaton weak_nd() {
  return AutomatonBuilder("weak_nd")
      .alphabet({"a", "b"})
      .states({"q", "p", "t"})
      .initial({"q"})
      .trans("q", "a", "q")
      .trans("q", "a", "p")
      .trans("p", "a", "q")
      .trans("q", "b", "t")
      .trans("p", "b", "t")
      .trans("t", "a", "t")
      .trans("t", "b", "t")
      .weak({"t"})
      .build();
}

inline StrategyTransducer g_weak_nd(const Automaton& a) {
  return gfg::make_strategy(a, "g_weak_nd", {{"mq", "q"}, {"mp", "p"}, {"mq2", "q"}, {"mt", "t"}}, "mq",
                            {{"mq", "a", "mp"},
                             {"mp", "a", "mq2"},
                             {"mq2", "a", "mq"},
                             {"mq", "b", "mt"},
                             {"mp", "b", "mt"},
                             {"mq2", "b", "mt"},
                             {"mt", "a", "mt"},
                             {"mt", "b", "mt"}});
}

// Rabin (∅, {x, y}) on a 2-cycle: x has no exclusive accepting cycle.
inline Automaton rabin_xy() {
  return AutomatonBuilder("rabin_xy")
      .alphabet({"a", "b"})
      .states({"x", "y"})
      .initial({"x"})
      .trans("x", "b", "y")
      .trans("y", "a", "x")
      .rabin_pair({}, {"x", "y"})
      .build();
}

}  // namespace fx
