#include "gfg/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "gfg/corpus.hpp"
#include "gfg/emptiness.hpp"
#include "gfg/errors.hpp"
#include "gfg/game.hpp"
#include "gfg/graph.hpp"
#include "gfg/io.hpp"
#include "gfg/transform.hpp"

namespace gfg {

namespace {

using Json = nlohmann::ordered_json;

// Negative verdicts travel as a return value; usage problems as this exception.
struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::string automaton, strategy, reference, witness, lasso, out, target, format;
  std::optional<std::size_t> bound, cap;
  bool json = false;
  std::string entry;  // corpus
};

struct Outcome {
  int code = kExitPositive;
  std::vector<std::string> lines;
  Json report = Json::object();
};

// "@name" loads corpus file name + ext; anything else is a path.
std::string load_text(const std::string& spec, const std::string& ext) {
  if (!spec.empty() && spec[0] == '@') {
    auto text = corpus_file(spec.substr(1) + ext);
    if (!text) throw UsageError("no corpus file '" + spec.substr(1) + ext + "'");
    return *text;
  }
  std::ifstream in(spec, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + spec + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

template <class F>
auto parsing(const std::string& spec, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw UsageError(spec + ": " + e.what());
  }
}

Automaton load_automaton(const std::string& spec) {
  if (spec.empty()) throw UsageError("missing automaton (-a)");
  const auto text = load_text(spec, ".aut");
  return parsing(spec, [&] { return parse_automaton(text); });
}

StrategyTransducer load_strategy(const Options& o, const Automaton& a) {
  if (o.strategy.empty()) {
    if (is_deterministic(a)) return identity_strategy(a);
    throw UsageError("missing strategy (-g); only deterministic automata default to the identity strategy");
  }
  const auto text = load_text(o.strategy, ".strat");
  return parsing(o.strategy, [&] { return parse_strategy(text, a); });
}

std::vector<Witness> load_witnesses(const std::string& spec, const Automaton& a) {
  const auto text = load_text(spec, ".wit");
  return parsing(spec, [&] { return parse_witnesses(text, a.alphabet()); });
}

std::vector<std::string> write_files(const std::string& dir, const std::vector<std::pair<std::string, std::string>>& files) {
  std::vector<std::string> written;
  if (dir.empty()) return written;
  std::filesystem::create_directories(dir);
  for (const auto& [name, text] : files) {
    const auto path = (std::filesystem::path(dir) / name).string();
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + path + "'");
    f << text;
    written.push_back(path);
  }
  return written;
}

std::string short_step(const TransformStep& s, const Automaton& before) {
  using K = TransformStep::Kind;
  switch (s.kind) {
    case K::remove_transition: return "removed (" + s.src + "," + s.letter + "," + s.dst + ")";
    case K::drop_memory: return "dropped " + s.memory;
    case K::merge_memory: return "merged " + s.memory + "→" + s.into;
    case K::remove_from_good: return "removed " + s.state + " from good set " + std::to_string(s.pair);
    case K::set_condition: return "condition := " + condition_to_text(before, *s.condition);
    case K::remove_state: return "removed state " + s.state;
    case K::set_initial: return "initial := " + s.state;
  }
  return "?";
}

Json verdict_json(const Verdict& v, const Automaton& a) {
  Json j{{"verdict", std::string(verdict_name(v.kind))}};
  j["counterexample"] = v.counterexample ? Json(format_lasso(*v.counterexample, a.alphabet())) : Json(nullptr);
  j["bound"] = v.bound_used;
  return j;
}

Outcome transform(const Options& o, const std::string& cmd) {
  const Automaton a = load_automaton(o.automaton);
  TransformOptions opt;
  if (o.bound) opt.verify_bound = *o.bound;
  if (o.cap) opt.cap = *o.cap;
  std::optional<StrategyTransducer> g;
  TransformReport r = [&] {
    if (cmd == "detbyp-unambiguous") return unambiguous_detbyp(a, opt);
    g = load_strategy(o, a);
    if (cmd == "tighten") return tighten(a, *g, opt);
    if (cmd == "strong-tighten") return strong_tighten(a, *g, opt);
    if (cmd == "to-cobuchi") return streett_to_cobuchi(a, *g, opt);
    if (cmd == "to-buchi") return rabin_to_buchi(a, *g, opt);
    if (cmd == "to-weak") return cobuchi_to_weak(a, *g, opt);
    return weak_detbyp(a, *g, opt);
  }();

  Outcome out;
  std::vector<std::string> shorts;
  Json log = Json::array();
  Automaton cur = a;
  std::optional<StrategyTransducer> cg = g;
  for (const auto& s : r.log) {
    shorts.push_back(short_step(s, cur));
    log.push_back({{"kind", std::string(step_kind_name(s.kind))}, {"text", s.describe(cur)}});
    std::tie(cur, cg) = replay(cur, cg, {s});
  }
  std::string summary;
  for (std::size_t i = 0; i < shorts.size(); ++i) summary += (i ? "; " : "") + shorts[i];
  if (summary.empty()) summary = "no changes";

  std::vector<std::pair<std::string, std::string>> files{{r.automaton.name() + ".aut", print_automaton(r.automaton)}};
  if (r.strategy) files.push_back({r.strategy->name() + ".strat", print_strategy(*r.strategy, r.automaton)});
  const auto written = write_files(o.out, files);

  out.lines.push_back(cmd + " " + a.name() + (g ? " with " + g->name() : "") + ": " + std::to_string(r.log.size()) +
                      " step(s)");
  out.lines.push_back(summary);
  for (const auto& n : r.notes) out.lines.push_back("note: " + n);
  out.lines.push_back("acc " + condition_to_text(r.automaton, r.automaton.acceptance()));
  out.lines.push_back("verification: " + r.verification_summary);
  for (const auto& w : written) out.lines.push_back("wrote " + w);

  out.report["automaton"] = a.name();
  out.report["strategy"] = g ? Json(g->name()) : Json(nullptr);
  out.report["summary"] = summary;
  out.report["log"] = log;
  out.report["notes"] = r.notes;
  out.report["verification"] = verdict_json(r.verification, a);
  out.report["result"] = {{"automaton", print_automaton(r.automaton)},
                          {"strategy", r.strategy ? Json(print_strategy(*r.strategy, r.automaton)) : Json(nullptr)}};
  out.report["files"] = written;
  return out;
}

Outcome member_cmd(const Options& o) {
  const Automaton a = load_automaton(o.automaton);
  if (o.lasso.empty()) throw UsageError("missing --lasso U:V");
  const Lasso w = parsing("--lasso", [&] { return parse_lasso(o.lasso, a.alphabet()); });
  const bool acc = member(a, w);
  Outcome out;
  out.code = acc ? kExitPositive : kExitNegative;
  out.lines.push_back(acc ? "accepted" : "rejected");
  out.report["automaton"] = a.name();
  out.report["lasso"] = format_lasso(w, a.alphabet());
  out.report["accepted"] = acc;
  return out;
}

Outcome empty_cmd(const Options& o) {
  const Automaton a = load_automaton(o.automaton);
  const auto w = is_empty(a);
  Outcome out;
  out.code = w ? kExitNegative : kExitPositive;
  out.lines.push_back(w ? "nonempty: accepts " + format_lasso(*w, a.alphabet()) : "empty");
  out.report["automaton"] = a.name();
  out.report["empty"] = !w;
  out.report["witness"] = w ? Json(format_lasso(*w, a.alphabet())) : Json(nullptr);
  return out;
}

Outcome equiv_cmd(const Options& o) {
  const Automaton a = load_automaton(o.automaton);
  if (o.reference.empty()) throw UsageError("missing second automaton (-d)");
  const Automaton b = load_automaton(o.reference);
  if (a.alphabet() != b.alphabet()) throw UsageError("automata have different alphabets");
  Verdict v;
  bool exact = false;
  if (is_deterministic(a) && is_deterministic(b)) {
    exact = true;
    v = contained_in_deterministic(a, b);
    if (v.kind == VerdictKind::holds) v = contained_in_deterministic(b, a);
  } else {
    if (is_deterministic(b)) v = contained_in_deterministic(a, b);
    if (v.kind != VerdictKind::fails && is_deterministic(a)) v = contained_in_deterministic(b, a);
    if (v.kind != VerdictKind::fails) v = bounded_equiv(a, b, o.bound.value_or(0));
  }
  Outcome out;
  out.code = v.kind == VerdictKind::fails ? kExitNegative : kExitPositive;
  if (v.kind == VerdictKind::fails)
    out.lines.push_back("not equivalent: differ on " + format_lasso(*v.counterexample, a.alphabet()));
  else if (exact)
    out.lines.push_back("equivalent");
  else
    out.lines.push_back("no difference among lassos with |u|,|v| <= " + std::to_string(v.bound_used));
  out.report["left"] = a.name();
  out.report["right"] = b.name();
  out.report["exact"] = exact;
  out.report["result"] = verdict_json(v, a);
  return out;
}

Outcome dualize_cmd(const Options& o) {
  const Automaton a = load_automaton(o.automaton);
  const Automaton d = dualize_deterministic(a).with_name(a.name() + "_dual");
  Outcome out;
  const auto written = write_files(o.out, {{d.name() + ".aut", print_automaton(d)}});
  out.lines.push_back("acc " + condition_to_text(d, d.acceptance()));
  if (written.empty()) out.lines.push_back(print_automaton(d));
  for (const auto& w : written) out.lines.push_back("wrote " + w);
  out.report["automaton"] = a.name();
  out.report["result"] = print_automaton(d);
  out.report["files"] = written;
  return out;
}

Outcome check_gfg_cmd(const Options& o) {
  const Automaton a = load_automaton(o.automaton);
  if (o.reference.empty()) throw UsageError("missing deterministic reference (-d)");
  const Automaton d = load_automaton(o.reference);
  const GfgCheck r = check_gfg(a, d, o.bound.value_or(4));
  Outcome out;
  out.code = r.gfg ? kExitPositive : kExitNegative;
  out.lines.push_back("letter game: " + std::to_string(r.adam_nodes) + " Adam nodes, " + std::to_string(r.eve_nodes) +
                      " Eve nodes");
  std::vector<std::string> written;
  if (r.gfg) {
    out.lines.push_back("Eve wins: " + a.name() + " is GFG (strategy with " + std::to_string(r.strategy->size()) +
                        " memories)");
    written = write_files(o.out, {{r.strategy->name() + ".strat", print_strategy(*r.strategy, a)}});
  } else {
    out.lines.push_back("Adam wins: " + a.name() + " is not GFG");
  }
  for (const auto& w : written) out.lines.push_back("wrote " + w);
  out.report["automaton"] = a.name();
  out.report["reference"] = d.name();
  out.report["eve_wins"] = r.gfg;
  out.report["adam_nodes"] = r.adam_nodes;
  out.report["eve_nodes"] = r.eve_nodes;
  out.report["a_in_ref"] = verdict_json(r.a_in_ref, a);
  out.report["ref_in_a"] = verdict_json(r.ref_in_a, a);
  out.report["strategy"] = r.strategy ? Json(print_strategy(*r.strategy, a)) : Json(nullptr);
  out.report["files"] = written;
  return out;
}

Outcome brute_gfg_cmd(const Options& o) {
  const Automaton a = load_automaton(o.automaton);
  if (!o.bound) throw UsageError("missing memory bound (--bound)");
  std::optional<Automaton> ref;
  if (!o.reference.empty()) ref = load_automaton(o.reference);
  std::vector<Witness> ws;
  if (!o.witness.empty()) ws = load_witnesses(o.witness, a);
  const auto g = brute_force_gfg(a, *o.bound, ref, ws, o.cap.value_or(kBruteForceBudget));
  Outcome out;
  out.code = g ? kExitPositive : kExitNegative;
  std::vector<std::string> written;
  if (g) {
    out.lines.push_back("found strategy with " + std::to_string(g->size()) + " memories");
    written = write_files(o.out, {{g->name() + ".strat", print_strategy(*g, a)}});
  } else {
    out.lines.push_back("no strategy with at most " + std::to_string(*o.bound) + " memories");
  }
  for (const auto& w : written) out.lines.push_back("wrote " + w);
  out.report["automaton"] = a.name();
  out.report["bound"] = *o.bound;
  out.report["found"] = g.has_value();
  out.report["memories"] = g ? Json(g->size()) : Json(nullptr);
  out.report["strategy"] = g ? Json(print_strategy(*g, a)) : Json(nullptr);
  out.report["files"] = written;
  return out;
}

Outcome typeness_cmd(const Options& o) {
  const Automaton a = load_automaton(o.automaton);
  if (o.target.empty()) throw UsageError("missing --target buchi|cobuchi|weak");
  AcceptanceKind target;
  try {
    target = parse_kind(o.target);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  std::optional<Automaton> ref;
  if (!o.reference.empty()) ref = load_automaton(o.reference);
  std::vector<Witness> ws;
  if (!o.witness.empty()) ws = load_witnesses(o.witness, a);
  const auto r = typeness_search(a, target, ws, ref, {}, o.cap.value_or(kTypenessBudget), o.bound.value_or(4));
  const std::size_t total = std::size_t{1} << a.num_states();
  const std::string cls(display_name(target));
  Outcome out;
  out.code = r.found ? kExitPositive : kExitNegative;
  std::vector<std::string> written;
  if (r.found) {
    out.lines.push_back("found " + cls + " condition: acc " + condition_to_text(*r.found, r.found->acceptance()) + " (" +
                        std::to_string(r.candidates) + "/" + std::to_string(total) + " candidates tried)");
    written = write_files(o.out, {{r.found->name() + ".aut", print_automaton(*r.found)}});
  } else {
    out.lines.push_back("no " + cls + " condition on structure: " + std::to_string(r.candidates) + "/" +
                        std::to_string(total) + " candidates " + (ref ? "rejected" : "separated"));
  }
  for (const auto& w : written) out.lines.push_back("wrote " + w);
  out.report["automaton"] = a.name();
  out.report["target"] = std::string(kind_name(target));
  out.report["candidates"] = r.candidates;
  out.report["total"] = total;
  out.report["found"] = r.found.has_value();
  out.report["condition"] = r.found ? Json(condition_to_text(*r.found, r.found->acceptance())) : Json(nullptr);
  out.report["files"] = written;
  return out;
}

Outcome corpus_cmd(const Options& o) {
  Outcome out;
  if (!o.entry.empty()) {
    const auto item = corpus(o.entry);
    out.lines.push_back(print_automaton(item.automaton));
    out.report["name"] = item.name;
    out.report["description"] = item.description;
    out.report["automaton"] = print_automaton(item.automaton);
    out.report["strategy"] = item.strategy ? Json(print_strategy(*item.strategy, item.automaton)) : Json(nullptr);
    out.report["reference"] = item.reference ? Json(item.reference->name()) : Json(nullptr);
    out.report["witnesses"] =
        item.witnesses ? Json(print_witnesses(*item.witnesses, item.automaton.alphabet())) : Json(nullptr);
    return out;
  }
  Json entries = Json::array();
  for (const auto& n : corpus_names()) {
    const auto item = corpus(n);
    out.lines.push_back(n + ": " + item.description);
    entries.push_back({{"name", n}, {"description", item.description}});
  }
  std::vector<std::pair<std::string, std::string>> files;
  for (const auto& f : corpus_files()) files.push_back({f.filename, f.text});
  const auto written = write_files(o.out, files);
  for (const auto& w : written) out.lines.push_back("wrote " + w);
  out.report["entries"] = entries;
  out.report["files"] = written;
  return out;
}

Outcome verify_corpus_cmd() {
  Outcome out;
  Json checks = Json::array();
  std::size_t failed = 0;
  for (const auto& c : verify_corpus()) {
    out.lines.push_back(std::string(c.passed ? "PASS " : "FAIL ") + c.name + (c.detail.empty() ? "" : " [" + c.detail + "]"));
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    if (!c.passed) ++failed;
  }
  out.code = failed ? kExitNegative : kExitPositive;
  out.lines.push_back(std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) + " checks passed");
  out.report["checks"] = checks;
  out.report["failed"] = failed;
  return out;
}

Outcome export_cmd(const Options& o) {
  const Automaton a = load_automaton(o.automaton);
  std::string text, ext;
  if (o.format == "hoa") {
    text = to_hoa(a);
    ext = ".hoa";
  } else if (o.format == "dot") {
    text = o.strategy.empty() ? to_dot(a) : to_dot(load_strategy(o, a), a);
    ext = ".dot";
  } else {
    throw UsageError("unknown format '" + o.format + "' (hoa or dot)");
  }
  Outcome out;
  const std::string stem = o.strategy.empty() || o.format == "hoa" ? a.name() : load_strategy(o, a).name();
  const auto written = write_files(o.out, {{stem + ext, text}});
  if (written.empty()) out.lines.push_back(text);
  for (const auto& w : written) out.lines.push_back("wrote " + w);
  out.report["format"] = o.format;
  out.report["text"] = text;
  out.report["files"] = written;
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Good-for-games automata toolkit", "gfgtool"};
  app.require_subcommand(1);
  Options o;
  std::string command;

  struct Spec {
    const char* name;
    const char* help;
    std::string flags;  // a g d l b c w o t f e
  };
  const std::vector<Spec> specs{
      {"member", "Decide membership of a lasso U:V", "al"},
      {"empty", "Decide emptiness", "a"},
      {"equiv", "Compare the languages of -a and -d", "adb"},
      {"tighten", "Tighten a strategy", "agbco"},
      {"strong-tighten", "Strongly tighten a strategy", "agbco"},
      {"to-cobuchi", "Co-Buchi condition on the same structure", "agbco"},
      {"to-buchi", "Buchi condition on the same structure", "agbco"},
      {"to-weak", "Weak condition on the same structure", "agbco"},
      {"detbyp-unambiguous", "Prune an unambiguous GFG automaton to a deterministic one", "abco"},
      {"detbyp-weak", "Prune a weak GFG automaton to a deterministic one", "agbco"},
      {"dualize", "Complement a deterministic automaton", "ao"},
      {"check-gfg", "Solve the letter game against a deterministic reference", "adbco"},
      {"brute-gfg", "Exhaustive strategy search up to --bound memories", "adbcwo"},
      {"typeness-search", "Search a condition of the target class on the same structure", "adbcwot"},
      {"corpus", "List or dump the built-in corpus", "oe"},
      {"verify-corpus", "Re-derive the corpus properties", ""},
      {"export", "Export an automaton (HOA or dot)", "agof"},
  };
  for (const auto& s : specs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->callback([&command, name = std::string(s.name)] { command = name; });
    sub->add_flag("--json", o.json, "Machine-readable report");
    for (char f : s.flags) switch (f) {
        case 'a': sub->add_option("-a,--automaton", o.automaton, "Automaton file (@name for the corpus)"); break;
        case 'g': sub->add_option("-g,--strategy", o.strategy, "Strategy file (@name for the corpus)"); break;
        case 'd': sub->add_option("-d,--reference", o.reference, "Deterministic reference automaton"); break;
        case 'l': sub->add_option("--lasso", o.lasso, "Lasso U:V"); break;
        case 'b': sub->add_option("--bound", o.bound, "Bound"); break;
        case 'c': sub->add_option("--cap", o.cap, "Enumeration cap or budget"); break;
        case 'w': sub->add_option("--witness", o.witness, "Witness file (@name for the corpus)"); break;
        case 'o': sub->add_option("--out", o.out, "Output directory"); break;
        case 't': sub->add_option("--target", o.target, "buchi, cobuchi or weak"); break;
        case 'f': sub->add_option("--format", o.format, "hoa or dot")->default_val("hoa"); break;
        case 'e': sub->add_option("entry", o.entry, "Corpus entry"); break;
      }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  Outcome result;
  std::string error;
  try {
    if (command == "member") result = member_cmd(o);
    else if (command == "empty") result = empty_cmd(o);
    else if (command == "equiv") result = equiv_cmd(o);
    else if (command == "dualize") result = dualize_cmd(o);
    else if (command == "check-gfg") result = check_gfg_cmd(o);
    else if (command == "brute-gfg") result = brute_gfg_cmd(o);
    else if (command == "typeness-search") result = typeness_cmd(o);
    else if (command == "corpus") result = corpus_cmd(o);
    else if (command == "verify-corpus") result = verify_corpus_cmd();
    else if (command == "export") result = export_cmd(o);
    else result = transform(o, command);
  } catch (const CapExceeded& e) {
    result.code = kExitCap;
    error = e.what();
  } catch (const PreconditionError& e) {
    result.code = kExitNegative;
    error = e.what();
  } catch (const std::exception& e) {
    result.code = kExitUsage;
    error = e.what();
  }

  if (o.json) {
    Json j{{"command", command}, {"exit_code", result.code}};
    if (!error.empty()) {
      j["error"] = error;
    } else {
      for (auto& [k, v] : result.report.items()) j[k] = v;
    }
    out << j.dump(2) << '\n';
  } else if (!error.empty()) {
    err << "error: " << error << '\n';
  } else {
    for (const auto& l : result.lines) out << l << (l.empty() || l.back() != '\n' ? "\n" : "");
  }
  return result.code;
}

}  // namespace gfg
