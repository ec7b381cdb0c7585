#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "gfg/errors.hpp"
#include "gfg/language.hpp"
#include "gfg/strategy.hpp"
#include "oracles.hpp"

using namespace gfg;

namespace {

Lasso L(std::string_view text) { return parse_lasso(text, {"a", "b"}); }

MemoryId mem(const StrategyTransducer& g, std::string_view name) { return *g.find_memory(name); }

}  // namespace

TEST_CASE("compose: Fig. 2 and Fig. 3") {
  const auto a0 = fx::a0();
  const auto g = fx::g_fig2(a0);
  const auto ag = compose(a0, g);
  CHECK(ag.automaton.num_states() == 4);
  CHECK(is_deterministic(ag.automaton));
  const auto& pr = std::get<Parity>(ag.automaton.acceptance()).priority;
  CHECK(pr[mem(g, "m2")] == 2);
  CHECK(pr[mem(g, "m1")] == 1);
  CHECK(pr[mem(g, "m1'")] == 1);
  CHECK(pr[mem(g, "m0")] == 0);

  const auto p = fx::a0_pruned();
  const auto ag3 = compose(p, fx::g_fig3(p));
  CHECK(ag3.automaton.num_states() == 3);
  CHECK(is_deterministic(ag3.automaton));
}

TEST_CASE("compose: identity strategy reproduces a deterministic automaton") {
  const auto d = fx::dbw_l1();
  const auto ag = compose(d, identity_strategy(d));
  auto x = ag.automaton.transitions(), y = d.transitions();
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  CHECK(x == y);
  CHECK(ag.automaton.acceptance() == d.acceptance());
}

TEST_CASE("compose: ill-formed strategies are rejected") {
  const auto a0 = fx::a0();
  CHECK_THROWS_AS(make_strategy(a0, "bad", {{"m", "q0"}}, "m", {}), StructuralError);
  try {
    make_strategy(a0, "bad", {{"m", "q2"}, {"n", "q0"}}, "m", {{"m", "a", "n"}});
    FAIL("expected a structural error");
  } catch (const StructuralError& e) {
    CHECK(std::string(e.what()).find("(m, a)") != std::string::npos);
  }
}

TEST_CASE("used_transitions") {
  const auto a0 = fx::a0();
  CHECK(used_transitions(a0, fx::g_fig2(a0)).size() == a0.transitions().size());
  const auto used = used_transitions(a0, make_strategy(a0, "g", {{"m0", "q0"}, {"m1'", "q1"}, {"m2", "q2"}}, "m2",
                                                       {{"m2", "b", "m2"},
                                                        {"m2", "a", "m1'"},
                                                        {"m1'", "a", "m1'"},
                                                        {"m1'", "b", "m0"},
                                                        {"m0", "b", "m0"},
                                                        {"m0", "a", "m1'"}}));
  CHECK(used.size() == 6);
  CHECK_FALSE(std::binary_search(used.begin(), used.end(), *a0.transition_index({1, 0, 2})));

  const auto loop = make_strategy(a0, "loop", {{"m", "q2"}}, "m", {{"m", "b", "m"}});
  CHECK(used_transitions(a0, loop) == std::vector<std::size_t>{*a0.transition_index({2, 1, 2})});
}

TEST_CASE("path_combination_sets") {
  const auto a0 = fx::a0();
  const auto g = fx::g_fig2(a0);
  const auto ag = compose(a0, g);
  const auto sets = path_combination_sets(ag, mem(g, "m1'"), mem(g, "m1"));
  REQUIRE_FALSE(sets.empty());
  for (const auto& x : sets) {
    CHECK(x.contains(mem(g, "m1'")));
    CHECK(x.contains(mem(g, "m1")));
    CHECK(x.contains(mem(g, "m0")));
    CHECK(satisfies(ag.automaton.acceptance(), x));
  }

  const auto d = fx::dcw_contains_b();
  const auto agd = compose(d, identity_strategy(d));
  CHECK(path_combination_sets(agd, 1, 0).empty());
  const auto single = path_combination_sets(agd, 0, 1);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == StateSet(2, {0, 1}));
}

TEST_CASE("replaceable: Example 2") {
  const auto a0 = fx::a0();
  const auto g = fx::g_fig2(a0);
  const auto ag = compose(a0, g);
  CHECK(replaceable(ag, mem(g, "m1"), mem(g, "m1'")));
  CHECK_FALSE(replaceable(ag, mem(g, "m1'"), mem(g, "m1")));
  CHECK(replaceable_by_enumeration(ag, mem(g, "m1"), mem(g, "m1'")));
  CHECK_FALSE(replaceable_by_enumeration(ag, mem(g, "m1'"), mem(g, "m1")));
  CHECK_THROWS_AS(replaceable(ag, mem(g, "m1"), mem(g, "m0")), PreconditionError);

  const auto ra = a0.with_acceptance(as_rabin(a0.acceptance()));
  const auto agr = compose(ra, g);
  CHECK(replaceable(agr, mem(g, "m1"), mem(g, "m1'")));
  CHECK_FALSE(replaceable(agr, mem(g, "m1'"), mem(g, "m1")));
}

TEST_CASE("replaceable: no connecting walk either way") {
  const auto a = AutomatonBuilder("two")
                     .alphabet({"a", "b"})
                     .states({"s", "x"})
                     .initial({"s"})
                     .trans("s", "a", "x")
                     .trans("s", "b", "x")
                     .trans("x", "a", "x")
                     .buchi({"x"})
                     .build();
  const auto g = make_strategy(a, "g", {{"s", "s"}, {"x1", "x"}, {"x2", "x"}}, "s",
                               {{"s", "a", "x1"}, {"s", "b", "x2"}, {"x1", "a", "x1"}, {"x2", "a", "x2"}});
  const auto ag = compose(a, g);
  CHECK(replaceable(ag, 1, 2));
  CHECK(replaceable(ag, 2, 1));
}

TEST_CASE("tightness: Examples 2 and 3") {
  const auto a0 = fx::a0();
  const auto r = check_tightness(a0, fx::g_fig2(a0));
  CHECK(r.weakly_tight);
  CHECK_FALSE(r.tight);
  CHECK(r.diagnostic == "m1 replaceable by m1'");
  CHECK(is_weakly_tight(a0, fx::g_fig2(a0)));

  const auto p = fx::a0_pruned();
  CHECK(is_tight(p, fx::g_fig3(p)));

  const auto g3_on_a0 = make_strategy(a0, "g3", {{"m0", "q0"}, {"m1'", "q1"}, {"m2", "q2"}}, "m2",
                                      {{"m2", "b", "m2"},
                                       {"m2", "a", "m1'"},
                                       {"m1'", "a", "m1'"},
                                       {"m1'", "b", "m0"},
                                       {"m0", "b", "m0"},
                                       {"m0", "a", "m1'"}});
  const auto r3 = check_tightness(a0, g3_on_a0);
  CHECK_FALSE(r3.weakly_tight);
  CHECK(r3.diagnostic == "unused transition (q1,a,q2)");

  const auto d = fx::dbw_l1();
  CHECK(is_tight(d, identity_strategy(d)));
  const auto bare = AutomatonBuilder("bare").alphabet({"a"}).states({"x"}).initial({"x"}).buchi({}).build();
  CHECK(is_weakly_tight(bare, identity_strategy(bare)));
}

TEST_CASE("q_exclusive_accepting_cycle") {
  const auto p = fx::a0_pruned();
  const auto g = fx::g_fig3(p);
  const auto ag = compose(p, g);
  const auto c = q_exclusive_accepting_cycle(ag, 0);
  REQUIRE(c);
  CHECK(c->contains(mem(g, "m0")));
  CHECK(satisfies(ag.automaton.acceptance(), *c));

  // q with no memory on a cycle
  const auto d = fx::dcw_contains_b().with_acceptance(Buchi{StateSet(2, {0, 1})});
  const auto agd = compose(d, identity_strategy(d));
  CHECK(q_exclusive_accepting_cycle(agd, 0));

  const auto chain = AutomatonBuilder("chain")
                         .alphabet({"a"})
                         .states({"s", "t"})
                         .initial({"s"})
                         .trans("s", "a", "t")
                         .trans("t", "a", "t")
                         .buchi({"s", "t"})
                         .build();
  const auto agc = compose(chain, identity_strategy(chain));
  CHECK_FALSE(q_exclusive_accepting_cycle(agc, 0));
  const auto only = q_exclusive_accepting_cycle(agc, 1);
  REQUIRE(only);
  CHECK(*only == StateSet(2, {1}));
}

TEST_CASE("strong tightness") {
  const auto p = fx::a0_pruned();
  const auto g = fx::g_fig3(p);
  CHECK(is_strongly_tight(p, g));
  CHECK(is_strongly_tight(p.with_acceptance(as_rabin(p.acceptance())), g));

  // q1 added to the good set of the q2 pair: no q1-exclusive accepting cycle exists.
  auto pairs = rabin_pairs(p.acceptance());
  REQUIRE(pairs.size() == 2);
  pairs[1].good.insert(1);
  const auto modified = p.with_acceptance(Rabin{pairs});
  const auto r = check_strong_tightness(modified, g);
  CHECK_FALSE(r.strongly_tight);
  CHECK(r.lacking_exclusive_cycle == std::vector<StateId>{1});

  const auto d = fx::dcw_contains_b().with_acceptance(Rabin{{{StateSet(2), StateSet(2)}}});
  CHECK(is_strongly_tight(d, identity_strategy(d)) == is_tight(d, identity_strategy(d)));
  CHECK_THROWS_AS(is_strongly_tight(fx::a0().with_acceptance(as_streett(fx::a0().acceptance())), fx::g_fig2(fx::a0())),
                  PreconditionError);
}

TEST_CASE("residual_check") {
  const auto a0 = fx::a0();
  CHECK_FALSE(residual_check(a0, fx::g_fig2(a0), 5));
  const auto bad = residual_check(a0, fx::g_broken(a0), 5);
  REQUIRE(bad);
  const auto ag = compose(a0, fx::g_broken(a0));
  CHECK(member(a0.with_initial({ag.tau[bad->first]}), bad->second));
  CHECK_FALSE(member(ag.automaton.with_initial({bad->first}), bad->second));
  CHECK_FALSE(member(ag.automaton, L(":aab")));
  CHECK(member(a0, L(":aab")));

  CHECK_FALSE(residual_check(fx::nbw_all(), identity_strategy(fx::nbw_all())));
}

TEST_CASE("lint") {
  const auto a0 = fx::a0();
  auto g = make_strategy(a0, "g", {{"m2", "q2"}, {"x", "q0"}}, "m2", {{"m2", "b", "m2"}});
  const auto notes = lint(a0, g);
  REQUIRE(notes.size() == 2);
  CHECK(notes[0] == "step (m2, a) is undefined but q2 is not stuck");
  CHECK(notes[1] == "memory x is unreachable");
  CHECK(lint(a0, fx::g_fig2(a0)).empty());
}

TEST_CASE("property: L(A_g) ⊆ L(A) on the corpus") {
  const auto a0 = fx::a0();
  const auto p = fx::a0_pruned();
  const auto w = fx::weak_nd();
  const std::vector<std::pair<Automaton, StrategyTransducer>> cases{
      {a0, fx::g_fig2(a0)}, {p, fx::g_fig3(p)}, {a0, fx::g_broken(a0)}, {w, fx::g_weak_nd(w)}};
  for (const auto& [a, g] : cases) {
    const auto ag = compose(a, g);
    for_each_lasso(2, 4, [&](const Lasso& l) {
      if (member(ag.automaton, l)) CHECK(member(a, l));
      return true;
    });
  }
}

TEST_CASE("property: structured replaceability agrees with enumeration") {
  std::mt19937 rng(123);
  int compared = 0;
  for (int iter = 0; iter < 400; ++iter) {
    const auto a = oracle::random_automaton(rng, 1 + rng() % 4, iter % 5, false, 0.45);
    const auto g = oracle::random_strategy(rng, a, 6);
    const auto ag = compose(a, g);
    for (MemoryId m : ag.reachable.elements())
      for (MemoryId m2 : ag.reachable.elements()) {
        if (m == m2 || ag.tau[m] != ag.tau[m2]) continue;
        CHECK(replaceable(ag, m, m2) == replaceable_by_enumeration(ag, m, m2));
        ++compared;
      }
  }
  CHECK(compared >= 100);
}

TEST_CASE("property: exclusive cycles re-validate") {
  std::mt19937 rng(321);
  int found = 0;
  for (int iter = 0; iter < 300; ++iter) {
    const auto a = oracle::random_automaton(rng, 1 + rng() % 4, iter % 4, false, 0.45);
    const auto g = oracle::random_strategy(rng, a, 5);
    const auto ag = compose(a, g);
    for (StateId q = 0; q < a.num_states(); ++q) {
      const auto c = q_exclusive_accepting_cycle(ag, q);
      if (!c) continue;
      ++found;
      CHECK(is_cycle_set(ag.reachable_graph(), *c));
      CHECK(c->intersects(ag.memories_of(q)));
      CHECK(satisfies(ag.automaton.acceptance(), *c));
      // rejected once q leaves every good set
      auto pairs = rabin_pairs(ag.automaton.acceptance());
      for (auto& p : pairs) p.good -= ag.memories_of(q);
      for (const auto& p : pairs) CHECK_FALSE((!p.bad.intersects(*c) && p.good.intersects(*c)));
    }
  }
  const auto st = fx::a3(true).with_acceptance(as_streett(fx::a3(true).acceptance()));
  CHECK_THROWS_AS(q_exclusive_accepting_cycle(compose(st, identity_strategy(st)), 0), UnsupportedError);
  CHECK(found >= 100);
}
