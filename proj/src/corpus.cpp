#include "gfg/corpus.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "gfg/emptiness.hpp"
#include "gfg/errors.hpp"
#include "gfg/game.hpp"
#include "gfg/graph.hpp"
#include "gfg/io.hpp"
#include "gfg/transform.hpp"

namespace gfg {

namespace {

const std::map<std::string, std::string>& automaton_texts() {
  static const std::map<std::string, std::string> texts{
      {"a0", R"(# infinitely many b's; priorities below the states
automaton a0
alphabet a b
states q0 q1 q2
initial q2
trans q2 b q2
trans q2 a q1
trans q1 a q1
trans q1 a q2
trans q1 b q0
trans q0 b q0
trans q0 a q1
acc parity q0:0 q1:1 q2:2
)"},
      {"a0_pruned", R"(# a0 without (q1,a,q2)
automaton a0_pruned
alphabet a b
states q0 q1 q2
initial q2
trans q2 b q2
trans q2 a q1
trans q1 a q1
trans q1 b q0
trans q0 b q0
trans q0 a q1
acc parity q0:0 q1:1 q2:2
)"},
      {"dbw_l0", R"(# deterministic Buchi: infinitely many b's
automaton dbw_l0
alphabet a b
states d0 d1
initial d0
trans d0 a d0
trans d0 b d1
trans d1 a d0
trans d1 b d1
acc buchi d1
)"},
      {"a1", R"(# unambiguous parity automaton; infinitely many b's and infinitely many or evenly many a's
automaton a1
alphabet a b
states q00 q01 q10 q11 p0 p1 p2
initial q00 q01 p0
trans q00 b q00
trans q00 b q01
trans q00 a q11
trans q11 a q00
trans q10 a q01
trans q01 a q10
trans q10 b q11
trans q10 b q10
trans p0 b p0
trans p0 a p1
trans p1 a p1
trans p1 b p2
trans p2 a p0
trans p2 b p0
acc parity q00:2 q01:1 q10:1 q11:1 p0:1 p1:1 p2:0
)"},
      {"dbw_l1", R"(automaton dbw_l1
alphabet a b
states q00 q01 q10 q11 q12
initial q00
trans q00 b q01
trans q01 b q01
trans q10 b q11
trans q11 b q12
trans q12 b q12
trans q00 a q10
trans q10 a q00
trans q11 a q00
trans q12 a q00
trans q01 a q10
acc buchi q01 q11
)"},
      {"a2", R"(automaton a2
alphabet a b
states q0 q1 q2 q3
initial q0
trans q0 b q2
trans q0 a q1
trans q2 a q3
trans q2 a q1
trans q1 b q2
trans q2 b q2
trans q3 a q3
trans q1 a q1
acc buchi q2 q3
)"},
      {"a3", R"(# (aa)^w + (aa)* b+ aa (b + aa)^w
automaton a3
alphabet a b
states q0 q1 p0 p1 p2
initial q0
trans q0 b q0
trans q0 a q1
trans q1 a q0
trans q0 b p0
trans p0 b p0
trans p0 a p1
trans p1 a p2
trans p2 a p1
trans p2 b p2
acc buchi q1 p1 p2
)"},
      {"a3_pruned", R"(# a3 without (q0,b,q0); deterministic
automaton a3_pruned
alphabet a b
states q0 q1 p0 p1 p2
initial q0
trans q0 a q1
trans q1 a q0
trans q0 b p0
trans p0 b p0
trans p0 a p1
trans p1 a p2
trans p2 a p1
trans p2 b p2
acc buchi q1 p1 p2
)"},
      {"a4", R"(# a^w + a* b+ a (a + b)^w
automaton a4
alphabet a b
states q0 q1 p0 p1
initial q0
trans q0 a q1
trans q0 b q1
trans q1 a q1
trans q1 b q0
trans q0 b p0
trans q1 b p0
trans p0 b p0
trans p0 a p1
trans p1 a p1
trans p1 b p1
acc cobuchi q0 p0
)"},
      {"a4_det", R"(# a4 without (q0,b,q1) and (q1,b,q0)
automaton a4_det
alphabet a b
states q0 q1 p0 p1
initial q0
trans q0 a q1
trans q1 a q1
trans q0 b p0
trans q1 b p0
trans p0 b p0
trans p0 a p1
trans p1 a p1
trans p1 b p1
acc cobuchi q0 p0
)"},
      {"dcw_contains_b", R"(automaton dcw_contains_b
alphabet a b
states q0 q1
initial q0
trans q0 a q0
trans q0 b q1
trans q1 a q1
trans q1 b q1
acc cobuchi q0
)"},
      {"nbw_fin_b", R"(# guesses the last b: finitely many b's
automaton nbw_fin_b
alphabet a b
states q0 q1
initial q0
trans q0 a q0
trans q0 b q0
trans q0 a q1
trans q1 a q1
acc buchi q1
)"},
      {"dcw_fin_b", R"(automaton dcw_fin_b
alphabet a b
states r0 r1
initial r0
trans r0 a r0
trans r0 b r1
trans r1 a r0
trans r1 b r1
acc cobuchi r1
)"},
      {"weak_nd", R"(# contains a b; the a-loop at q is duplicated through p
automaton weak_nd
alphabet a b
states q p t
initial q
trans q a q
trans q a p
trans p a q
trans q b t
trans p b t
trans t a t
trans t b t
acc weak t
)"},
      {"ua_dead", R"(# unambiguous: the branch through x is never accepting
automaton ua_dead
alphabet a b
states d0 d1 x y
initial d0 x
trans d0 a d0
trans d0 b d1
trans d1 a d0
trans d1 b d1
trans d0 b x
trans x a x
trans y a d0
acc buchi d1
)"},
      {"rabin_xy", R"(automaton rabin_xy
alphabet a b
states x y
initial x
trans x b y
trans y a x
acc rabin (E: | F: x y)
)"},
  };
  return texts;
}

const std::map<std::string, std::pair<std::string, std::string>>& strategy_texts() {
  static const std::map<std::string, std::pair<std::string, std::string>> texts{
      {"g_fig2", {"a0", R"(strategy g_fig2
automaton a0
memory m0: q0
memory m1: q1
memory m1': q1
memory m2: q2
initial m2
step m0 a m1
step m0 b m0
step m1 a m2
step m1 b m0
step m1' a m1'
step m1' b m0
step m2 a m1'
step m2 b m2
)"}},
      {"g_fig3", {"a0_pruned", R"(strategy g_fig3
automaton a0_pruned
memory m0: q0
memory m1': q1
memory m2: q2
initial m2
step m0 a m1'
step m0 b m0
step m1' a m1'
step m1' b m0
step m2 a m1'
step m2 b m2
)"}},
      {"g_weak_nd", {"weak_nd", R"(strategy g_weak_nd
automaton weak_nd
memory mq: q
memory mp: p
memory mq2: q
memory mt: t
initial mq
step mq a mp
step mq b mt
step mp a mq2
step mp b mt
step mq2 a mq
step mq2 b mt
step mt a mt
step mt b mt
)"}},
  };
  return texts;
}

const std::map<std::string, std::string>& witness_texts() {
  static const std::map<std::string, std::string> texts{
      {"a1", "reject :a\nreject b:a\nreject a:b\naccept :b\n"},
      {"a3", "accept :a\nreject :b\n"},
      {"a4", "accept :a\nreject :b\n"},
  };
  return texts;
}

// a2's own verdicts on every lasso with |u|, |v| <= 3.
std::string a2_witnesses() {
  const Automaton a = parse_automaton(automaton_texts().at("a2"));
  std::vector<Witness> ws;
  for_each_lasso(a.num_letters(), 3, [&](const Lasso& w) {
    ws.push_back({w, member(a, w)});
    return true;
  });
  return print_witnesses(ws, a.alphabet());
}

struct Entry {
  std::string name, description, automaton;
  std::string strategy;  // strategy file, "id" for the identity strategy, or empty
  std::string reference;
  std::string witnesses;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list{
      {"a0", "parity automaton for infinitely many b's with its 4-memory strategy", "a0", "g_fig2", "dbw_l0", ""},
      {"g_fig2", "4-memory strategy for a0", "a0", "g_fig2", "dbw_l0", ""},
      {"g_fig3", "tight 3-memory strategy for a0 pruned", "a0_pruned", "g_fig3", "dbw_l0", ""},
      {"a0_pruned", "a0 without (q1,a,q2)", "a0_pruned", "g_fig3", "dbw_l0", ""},
      {"dbw_l0", "deterministic Buchi automaton for infinitely many b's", "dbw_l0", "id", "", ""},
      {"a1", "unambiguous parity automaton, not Buchi-type", "a1", "", "dbw_l1", "a1"},
      {"dbw_l1", "deterministic Buchi automaton for the language of a1", "dbw_l1", "id", "", ""},
      {"a2", "Buchi automaton, not co-Buchi-type", "a2", "", "", "a2"},
      {"a3", "GFG Buchi automaton, not co-Buchi-type", "a3", "", "a3_pruned", "a3"},
      {"a3_pruned", "a3 without (q0,b,q0)", "a3_pruned", "id", "", "a3"},
      {"a4", "GFG co-Buchi automaton, not Buchi-type", "a4", "", "a4_det", "a4"},
      {"a4_det", "deterministic co-Buchi automaton for the language of a4", "a4_det", "id", "", "a4"},
      {"dcw_contains_b", "deterministic co-Buchi automaton: contains a b", "dcw_contains_b", "id", "", ""},
      {"nbw_fin_b", "Buchi automaton guessing the last b (not GFG)", "nbw_fin_b", "", "dcw_fin_b", ""},
      {"dcw_fin_b", "deterministic co-Buchi automaton: finitely many b's", "dcw_fin_b", "id", "", ""},
      {"weak_nd", "weak GFG automaton with a 2-memory strategy", "weak_nd", "g_weak_nd", "dcw_contains_b", ""},
      {"ua_dead", "unambiguous GFG automaton with a dead branch", "ua_dead", "", "dbw_l0", ""},
      {"rabin_xy", "Rabin automaton on a 2-cycle", "rabin_xy", "", "", ""},
  };
  return list;
}

}  // namespace

std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& e : entries()) out.push_back(e.name);
  return out;
}

CorpusItem corpus(const std::string& name) {
  auto it = std::find_if(entries().begin(), entries().end(), [&](const Entry& e) { return e.name == name; });
  if (it == entries().end()) throw Error("unknown corpus entry '" + name + "'");
  CorpusItem item{it->name, it->description, parse_automaton(automaton_texts().at(it->automaton)), std::nullopt,
                  std::nullopt, std::nullopt};
  if (it->strategy == "id")
    item.strategy = identity_strategy(item.automaton);
  else if (!it->strategy.empty())
    item.strategy = parse_strategy(strategy_texts().at(it->strategy).second, item.automaton);
  if (!it->reference.empty()) item.reference = parse_automaton(automaton_texts().at(it->reference));
  if (!it->witnesses.empty())
    item.witnesses = parse_witnesses(*corpus_file(it->witnesses + ".wit"), item.automaton.alphabet());
  return item;
}

std::vector<CorpusFile> corpus_files() {
  std::vector<CorpusFile> out;
  for (const auto& [name, text] : automaton_texts()) out.push_back({name + ".aut", text});
  for (const auto& [name, s] : strategy_texts()) out.push_back({name + ".strat", s.second});
  for (const auto& [name, text] : witness_texts()) out.push_back({name + ".wit", text});
  out.push_back({"a2.wit", a2_witnesses()});
  std::sort(out.begin(), out.end(), [](const CorpusFile& x, const CorpusFile& y) { return x.filename < y.filename; });
  return out;
}

std::optional<std::string> corpus_file(const std::string& filename) {
  auto stem = [&](std::string_view ext) -> std::optional<std::string> {
    if (filename.size() <= ext.size() || filename.compare(filename.size() - ext.size(), ext.size(), ext) != 0)
      return std::nullopt;
    return filename.substr(0, filename.size() - ext.size());
  };
  if (auto s = stem(".aut"); s && automaton_texts().count(*s)) return automaton_texts().at(*s);
  if (auto s = stem(".strat"); s && strategy_texts().count(*s)) return strategy_texts().at(*s).second;
  if (auto s = stem(".wit")) {
    if (*s == "a2") return a2_witnesses();
    if (witness_texts().count(*s)) return witness_texts().at(*s);
  }
  return std::nullopt;
}

namespace {

std::string lasso_text(const Lasso& w) { return format_lasso(w, {"a", "b"}); }

bool same_language_bounded(const Automaton& x, const Automaton& y, std::size_t bound, std::string& detail) {
  const Verdict v = bounded_equiv(x, y, bound);
  if (v.kind == VerdictKind::fails) {
    detail = "differ on " + lasso_text(*v.counterexample);
    return false;
  }
  return true;
}

}  // namespace

std::vector<CorpusCheck> verify_corpus() {
  std::vector<CorpusCheck> out;
  auto check = [&](const std::string& name, const std::function<bool(std::string&)>& body) {
    CorpusCheck c{name, false, ""};
    try {
      c.passed = body(c.detail);
    } catch (const std::exception& e) {
      c.detail = std::string("error: ") + e.what();
    }
    out.push_back(std::move(c));
  };

  check("round-trip: every corpus file parses and prints canonically", [](std::string& d) {
    for (const auto& [name, text] : automaton_texts()) {
      const Automaton a = parse_automaton(text);
      if (print_automaton(parse_automaton(print_automaton(a))) != print_automaton(a)) {
        d = name;
        return false;
      }
    }
    for (const auto& [name, s] : strategy_texts()) {
      const Automaton a = parse_automaton(automaton_texts().at(s.first));
      const auto g = parse_strategy(s.second, a);
      if (print_strategy(parse_strategy(print_strategy(g, a), a), a) != print_strategy(g, a)) {
        d = name;
        return false;
      }
    }
    return true;
  });

  check("a0: priorities q2:2 q1:1 q0:0; g_fig2 has memories m0 m1 m1' m2", [](std::string& d) {
    const auto item = corpus("a0");
    const auto& p = std::get<Parity>(item.automaton.acceptance()).priority;
    const auto& a = item.automaton;
    if (p[*a.find_state("q2")] != 2 || p[*a.find_state("q1")] != 1 || p[*a.find_state("q0")] != 0) {
      d = "priorities";
      return false;
    }
    return item.strategy->memories() == std::vector<std::string>{"m0", "m1", "m1'", "m2"};
  });

  check("a0 recognizes infinitely many b's (lassos |u|<=2, |v|<=3; exact containment)", [](std::string& d) {
    const auto item = corpus("a0");
    std::size_t n = 0;
    bool ok = true;
    for_each_lasso(2, 3, [&](const Lasso& w) {
      if (w.prefix.size() > 2) return true;
      ++n;
      const bool inf_b = std::count(w.cycle.begin(), w.cycle.end(), LetterId{1}) > 0;
      if (member(item.automaton, w) != inf_b || member(*item.reference, w) != inf_b) {
        d = "disagree on " + lasso_text(w);
        ok = false;
      }
      return ok;
    });
    if (ok) d = std::to_string(n) + " lassos";
    return ok && contained_in_deterministic(item.automaton, *item.reference).kind == VerdictKind::holds;
  });

  check("tighten(a0, g_fig2): merge m1 into m1', remove (q1,a,q2); result is g_fig3", [](std::string& d) {
    const auto item = corpus("a0");
    const auto r = tighten(item.automaton, *item.strategy);
    std::vector<std::string> log;
    for (const auto& s : r.log) log.push_back(s.describe(item.automaton));
    d = std::to_string(log.size()) + " steps";
    const auto fig3 = corpus("g_fig3");
    return log == std::vector<std::string>{"merge m1 into m1'", "remove transition (q1,a,q2)"} &&
           is_tight(r.automaton, *r.strategy) &&
           r.automaton.transitions() == fig3.automaton.transitions() &&
           r.strategy->steps() == fig3.strategy->steps();
  });

  auto negative = [&](const std::string& entry, AcceptanceKind target, std::size_t expected) {
    check(entry + ": no " + std::string(display_name(target)) + " condition on the structure (" +
              std::to_string(expected) + " candidates)",
          [entry, target, expected](std::string& d) {
            const auto item = corpus(entry);
            const auto r = typeness_search(item.automaton, target, *item.witnesses);
            d = std::to_string(r.candidates) + " candidates";
            return !r.found && r.candidates == expected;
          });
  };
  negative("a1", AcceptanceKind::buchi, 128);
  negative("a4", AcceptanceKind::buchi, 16);
  negative("a3", AcceptanceKind::cobuchi, 32);
  negative("a2", AcceptanceKind::cobuchi, 16);

  check("streett_to_cobuchi(a3_pruned): alpha' = {p0}, same language as a3 up to 4", [](std::string& d) {
    const auto item = corpus("a3_pruned");
    const auto r = streett_to_cobuchi(item.automaton, *item.strategy);
    const auto* c = std::get_if<CoBuchi>(&r.automaton.acceptance());
    if (!c) return false;
    d = "alpha' = " + r.automaton.describe(c->rejecting);
    return c->rejecting == StateSet(5, {*item.automaton.find_state("p0")}) &&
           same_language_bounded(r.automaton, corpus("a3").automaton, 4, d);
  });

  check("rabin_to_buchi(tightened a0): Buchi union of good sets, contained in dbw_l0", [](std::string& d) {
    const auto item = corpus("a0");
    const auto t = tighten(item.automaton, *item.strategy);
    const auto st = strong_tighten(t.automaton, *t.strategy);
    const auto r = rabin_to_buchi(t.automaton, *t.strategy);
    const auto* b = std::get_if<Buchi>(&r.automaton.acceptance());
    if (!b) return false;
    StateSet u(r.automaton.num_states());
    for (const auto& p : std::get<Rabin>(st.automaton.acceptance()).pairs) u |= p.good;
    d = "alpha = " + r.automaton.describe(b->accepting);
    return b->accepting == u && contained_in_deterministic(r.automaton, *item.reference).kind == VerdictKind::holds &&
           same_language_bounded(r.automaton, *item.reference, 6, d);
  });

  check("cobuchi_to_weak(dcw_contains_b) and weak_detbyp(weak_nd)", [](std::string& d) {
    const auto c = corpus("dcw_contains_b");
    const auto w = cobuchi_to_weak(c.automaton, *c.strategy);
    const auto* wk = std::get_if<Weak>(&w.automaton.acceptance());
    if (!wk || !is_weak_shape(w.automaton, wk->accepting)) return false;
    if (!same_language_bounded(w.automaton, c.automaton, 5, d)) return false;
    const auto n = corpus("weak_nd");
    const auto r = weak_detbyp(n.automaton, *n.strategy);
    return is_deterministic(r.automaton) && same_language_bounded(r.automaton, n.automaton, 5, d);
  });

  check("letter game: a0 is GFG (Eve wins), nbw_fin_b is not (Adam wins)", [](std::string& d) {
    const auto a0 = corpus("a0");
    const auto r = check_gfg(a0.automaton, *a0.reference);
    if (!r.gfg || residual_check(a0.automaton, *r.strategy)) {
      d = "a0";
      return false;
    }
    const auto n = corpus("nbw_fin_b");
    if (check_gfg(n.automaton, *n.reference).gfg || brute_force_gfg(n.automaton, 3, n.reference)) {
      d = "nbw_fin_b";
      return false;
    }
    return true;
  });

  check("detbyp-unambiguous: ua_dead succeeds, a2 fails at (q2, a)", [](std::string& d) {
    const auto u = corpus("ua_dead");
    const auto r = unambiguous_detbyp(u.automaton);
    if (!is_deterministic(r.automaton) || !same_language_bounded(r.automaton, u.automaton, 5, d)) return false;
    try {
      unambiguous_detbyp(corpus("a2").automaton);
    } catch (const PreconditionError& e) {
      d = e.what();
      return d == "input not unambiguous-GFG: nondeterminism at (q2, a)";
    }
    return false;
  });

  return out;
}

}  // namespace gfg
