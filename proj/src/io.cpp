#include "gfg/io.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "gfg/errors.hpp"
#include "gfg/graph.hpp"

namespace gfg {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

bool special(char c) { return c == '(' || c == ')' || c == '|' || c == ':'; }
bool space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

struct Line {
  std::size_t number;
  std::string_view raw;  // comment stripped
  std::vector<Token> tokens;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, start = 0;
  while (start <= text.size()) {
    ++number;
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    if (auto h = raw.find('#'); h != std::string_view::npos) raw = raw.substr(0, h);
    Line line{number, raw, {}};
    for (std::size_t i = 0; i < raw.size();) {
      if (space(raw[i])) {
        ++i;
      } else if (special(raw[i])) {
        line.tokens.push_back({std::string(1, raw[i]), i + 1});
        ++i;
      } else {
        std::size_t j = i;
        while (j < raw.size() && !space(raw[j]) && !special(raw[j])) ++j;
        line.tokens.push_back({std::string(raw.substr(i, j - i)), i + 1});
        i = j;
      }
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

[[noreturn]] void fail(const Line& l, std::size_t tok, const std::string& what) {
  const std::size_t col = tok < l.tokens.size() ? l.tokens[tok].column : l.raw.size() + 1;
  throw ParseError(l.number, col, what);
}

// Reads identifiers from `i` until a special token or end of line.
std::vector<std::size_t> names_from(const Line& l, std::size_t& i) {
  std::vector<std::size_t> out;
  while (i < l.tokens.size() && !(l.tokens[i].text.size() == 1 && special(l.tokens[i].text[0]))) out.push_back(i++);
  return out;
}

void expect(const Line& l, std::size_t& i, std::string_view what) {
  if (i >= l.tokens.size() || l.tokens[i].text != what) fail(l, i, "expected '" + std::string(what) + "'");
  ++i;
}

class AutomatonParser {
 public:
  Automaton run(std::string_view text) {
    const auto lines = split_lines(text);
    for (const auto& l : lines) directive(l);
    const std::size_t end_line = lines.empty() ? 1 : lines.back().number + 1;
    auto missing = [&](const char* what) { throw ParseError(end_line, 1, std::string("missing '") + what + "' line"); };
    if (!name_) missing("automaton");
    if (!alphabet_) missing("alphabet");
    if (!states_) missing("states");
    if (!initial_) missing("initial");
    if (!acc_) missing("acc");
    try {
      return Automaton(*name_, *alphabet_, *states_, *initial_, transitions_, *acc_);
    } catch (const StructuralError& e) {
      throw ParseError(acc_line_, 1, e.what());
    }
  }

 private:
  void once(const Line& l, bool seen) {
    if (seen) fail(l, 0, "duplicate '" + l.tokens[0].text + "' line");
  }
  void need_states(const Line& l) {
    if (!states_) fail(l, 0, "'states' must be declared before '" + l.tokens[0].text + "'");
  }
  StateId state(const Line& l, std::size_t i) {
    auto it = state_index_.find(l.tokens[i].text);
    if (it == state_index_.end()) fail(l, i, "undeclared state '" + l.tokens[i].text + "'");
    return it->second;
  }
  StateSet state_set(const Line& l, const std::vector<std::size_t>& toks) {
    StateSet s(states_->size());
    for (auto i : toks) {
      const StateId q = state(l, i);
      if (s.contains(q)) fail(l, i, "state '" + l.tokens[i].text + "' listed twice");
      s.insert(q);
    }
    return s;
  }
  std::vector<std::string> declare(const Line& l, std::map<std::string, StateId>& index, const char* what) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i < l.tokens.size(); ++i) {
      if (special(l.tokens[i].text[0])) fail(l, i, "unexpected '" + l.tokens[i].text + "'");
      if (!index.emplace(l.tokens[i].text, static_cast<StateId>(out.size())).second)
        fail(l, i, std::string("duplicate ") + what + " '" + l.tokens[i].text + "'");
      out.push_back(l.tokens[i].text);
    }
    return out;
  }

  void directive(const Line& l) {
    const std::string& key = l.tokens[0].text;
    if (key == "automaton") {
      once(l, name_.has_value());
      if (l.tokens.size() != 2) fail(l, std::min<std::size_t>(2, l.tokens.size()), "expected one automaton name");
      name_ = l.tokens[1].text;
    } else if (key == "alphabet") {
      once(l, alphabet_.has_value());
      alphabet_ = declare(l, letter_index_, "letter");
    } else if (key == "states") {
      once(l, states_.has_value());
      states_ = declare(l, state_index_, "state");
    } else if (key == "initial") {
      once(l, initial_.has_value());
      need_states(l);
      std::size_t i = 1;
      const auto toks = names_from(l, i);
      if (i != l.tokens.size()) fail(l, i, "unexpected '" + l.tokens[i].text + "'");
      if (toks.empty()) fail(l, 1, "expected at least one initial state");
      initial_.emplace();
      for (auto t : toks) {
        const StateId q = state(l, t);
        if (std::find(initial_->begin(), initial_->end(), q) != initial_->end())
          fail(l, t, "duplicate initial state '" + l.tokens[t].text + "'");
        initial_->push_back(q);
      }
    } else if (key == "trans") {
      need_states(l);
      if (!alphabet_) fail(l, 0, "'alphabet' must be declared before 'trans'");
      if (l.tokens.size() != 4) fail(l, std::min<std::size_t>(4, l.tokens.size()), "expected 'trans SRC LETTER DST'");
      const StateId src = state(l, 1);
      auto li = letter_index_.find(l.tokens[2].text);
      if (li == letter_index_.end()) fail(l, 2, "undeclared letter '" + l.tokens[2].text + "'");
      const StateId dst = state(l, 3);
      const Transition t{src, li->second, dst};
      if (!seen_.insert(t).second) fail(l, 0, "duplicate transition");
      transitions_.push_back(t);
    } else if (key == "acc") {
      once(l, acc_.has_value());
      need_states(l);
      acc_line_ = l.number;
      acc_ = condition(l);
    } else {
      fail(l, 0, "unknown directive '" + key + "'");
    }
  }

  Acceptance condition(const Line& l) {
    if (l.tokens.size() < 2) fail(l, 1, "expected an acceptance kind");
    const std::string& kind = l.tokens[1].text;
    std::size_t i = 2;
    auto rest_set = [&] {
      const auto toks = names_from(l, i);
      if (i != l.tokens.size()) fail(l, i, "unexpected '" + l.tokens[i].text + "'");
      return state_set(l, toks);
    };
    if (kind == "buchi") return Buchi{rest_set()};
    if (kind == "cobuchi") return CoBuchi{rest_set()};
    if (kind == "weak") return Weak{rest_set()};
    if (kind == "parity") {
      std::vector<std::optional<unsigned>> pr(states_->size());
      while (i < l.tokens.size()) {
        const std::size_t at = i;
        const StateId q = state(l, i++);
        expect(l, i, ":");
        if (i >= l.tokens.size()) fail(l, i, "expected a priority");
        const std::string& num = l.tokens[i].text;
        if (num.empty() || num.size() > 9 || !std::all_of(num.begin(), num.end(), [](char c) { return c >= '0' && c <= '9'; }))
          fail(l, i, "priority must be a natural number");
        if (pr[q]) fail(l, at, "state '" + l.tokens[at].text + "' has two priorities");
        pr[q] = static_cast<unsigned>(std::stoul(num));
        ++i;
      }
      Parity p;
      for (StateId q = 0; q < pr.size(); ++q) {
        if (!pr[q]) fail(l, l.tokens.size(), "state '" + (*states_)[q] + "' has no priority");
        p.priority.push_back(*pr[q]);
      }
      return p;
    }
    if (kind == "rabin" || kind == "streett") {
      std::vector<AcceptancePair> pairs;
      while (i < l.tokens.size()) {
        expect(l, i, "(");
        expect(l, i, "E");
        expect(l, i, ":");
        StateSet bad = state_set(l, names_from(l, i));
        expect(l, i, "|");
        expect(l, i, "F");
        expect(l, i, ":");
        StateSet good = state_set(l, names_from(l, i));
        expect(l, i, ")");
        pairs.push_back({std::move(bad), std::move(good)});
      }
      if (kind == "rabin") return Rabin{std::move(pairs)};
      return Streett{std::move(pairs)};
    }
    fail(l, 1, "unknown acceptance kind '" + kind + "'");
  }

  std::optional<std::string> name_;
  std::optional<std::vector<std::string>> alphabet_, states_;
  std::optional<std::vector<StateId>> initial_;
  std::vector<Transition> transitions_;
  std::set<Transition> seen_;
  std::optional<Acceptance> acc_;
  std::size_t acc_line_ = 1;
  std::map<std::string, StateId> state_index_, letter_index_;
};

std::string set_names(const Automaton& a, const StateSet& s) {
  std::string out;
  s.for_each([&](StateId q) { out += " " + a.state_name(q); });
  return out;
}

}  // namespace

Automaton parse_automaton(std::string_view text) { return AutomatonParser().run(text); }

std::string condition_to_text(const Automaton& a, const Acceptance& acc) {
  std::string s(kind_name(kind_of(acc)));
  if (auto* b = std::get_if<Buchi>(&acc)) return s + set_names(a, b->accepting);
  if (auto* c = std::get_if<CoBuchi>(&acc)) return s + set_names(a, c->rejecting);
  if (auto* w = std::get_if<Weak>(&acc)) return s + set_names(a, w->accepting);
  if (auto* p = std::get_if<Parity>(&acc)) {
    for (StateId q = 0; q < p->priority.size(); ++q) s += " " + a.state_name(q) + ":" + std::to_string(p->priority[q]);
    return s;
  }
  const auto& pairs = kind_of(acc) == AcceptanceKind::rabin ? std::get<Rabin>(acc).pairs : std::get<Streett>(acc).pairs;
  for (const auto& p : pairs) s += " (E:" + set_names(a, p.bad) + " | F:" + set_names(a, p.good) + ")";
  return s;
}

std::string print_automaton(const Automaton& a) {
  std::ostringstream o;
  o << "automaton " << a.name() << "\nalphabet";
  for (const auto& l : a.alphabet()) o << ' ' << l;
  o << "\nstates";
  for (const auto& q : a.states()) o << ' ' << q;
  o << "\ninitial";
  for (StateId q : a.initial()) o << ' ' << a.state_name(q);
  o << '\n';
  for (const auto& t : a.transitions())
    o << "trans " << a.state_name(t.src) << ' ' << a.letter_name(t.letter) << ' ' << a.state_name(t.dst) << '\n';
  o << "acc " << condition_to_text(a, a.acceptance()) << '\n';
  return o.str();
}

StrategyTransducer parse_strategy(std::string_view text, const Automaton& a) {
  std::optional<std::string> name, owner;
  std::vector<std::string> memories;
  std::vector<StateId> output;
  std::map<std::string, MemoryId> index;
  std::optional<std::pair<std::string, const Line*>> initial;
  std::vector<std::pair<const Line*, std::tuple<MemoryId, LetterId, MemoryId>>> steps;
  std::set<std::pair<MemoryId, LetterId>> defined;

  const auto lines = split_lines(text);
  auto memory = [&](const Line& l, std::size_t i) {
    auto it = index.find(l.tokens[i].text);
    if (it == index.end()) fail(l, i, "undeclared memory '" + l.tokens[i].text + "'");
    return it->second;
  };
  for (const auto& l : lines) {
    const std::string& key = l.tokens[0].text;
    if (key == "strategy" || key == "automaton") {
      auto& slot = key == "strategy" ? name : owner;
      if (slot) fail(l, 0, "duplicate '" + key + "' line");
      if (l.tokens.size() != 2) fail(l, std::min<std::size_t>(2, l.tokens.size()), "expected one name");
      slot = l.tokens[1].text;
      if (key == "automaton" && *slot != a.name())
        fail(l, 1, "strategy is for automaton '" + *slot + "', not '" + a.name() + "'");
    } else if (key == "memory") {
      if (l.tokens.size() != 4 || l.tokens[2].text != ":") fail(l, std::min<std::size_t>(2, l.tokens.size()), "expected 'memory M: STATE'");
      if (!index.emplace(l.tokens[1].text, static_cast<MemoryId>(memories.size())).second)
        fail(l, 1, "duplicate memory '" + l.tokens[1].text + "'");
      auto q = a.find_state(l.tokens[3].text);
      if (!q) fail(l, 3, "undeclared state '" + l.tokens[3].text + "'");
      memories.push_back(l.tokens[1].text);
      output.push_back(*q);
    } else if (key == "initial") {
      if (initial) fail(l, 0, "duplicate 'initial' line");
      if (l.tokens.size() != 2) fail(l, std::min<std::size_t>(2, l.tokens.size()), "expected one initial memory");
      initial.emplace(l.tokens[1].text, &l);
    } else if (key == "step") {
      if (l.tokens.size() != 4) fail(l, std::min<std::size_t>(4, l.tokens.size()), "expected 'step M LETTER M2'");
      const MemoryId m = memory(l, 1);
      auto letter = a.find_letter(l.tokens[2].text);
      if (!letter) fail(l, 2, "undeclared letter '" + l.tokens[2].text + "'");
      const MemoryId t = memory(l, 3);
      if (!defined.insert({m, *letter}).second) fail(l, 0, "step defined twice");
      if (!a.has_transition({output[m], *letter, output[t]}))
        fail(l, 0, "step leaves δ: " + a.describe(Transition{output[m], *letter, output[t]}) + " is not a transition");
      steps.push_back({&l, {m, *letter, t}});
    } else {
      fail(l, 0, "unknown directive '" + key + "'");
    }
  }
  const std::size_t end_line = lines.empty() ? 1 : lines.back().number + 1;
  if (!name) throw ParseError(end_line, 1, "missing 'strategy' line");
  if (!owner) throw ParseError(end_line, 1, "missing 'automaton' line");
  if (!initial) throw ParseError(end_line, 1, "missing 'initial' line");
  auto it = index.find(initial->first);
  if (it == index.end()) fail(*initial->second, 1, "undeclared memory '" + initial->first + "'");
  if (!a.is_initial(output[it->second]))
    fail(*initial->second, 1, "initial memory does not output an initial state");
  std::vector<std::tuple<MemoryId, LetterId, MemoryId>> st;
  for (const auto& s : steps) st.push_back(s.second);
  StrategyTransducer g(*name, *owner, memories, output, it->second, a.num_letters(), std::move(st));
  validate_strategy(a, g);
  return g;
}

std::string print_strategy(const StrategyTransducer& g, const Automaton& a) {
  std::ostringstream o;
  o << "strategy " << g.name() << "\nautomaton " << g.automaton_name() << '\n';
  for (MemoryId m = 0; m < g.size(); ++m) o << "memory " << g.memory_name(m) << ": " << a.state_name(g.output(m)) << '\n';
  o << "initial " << g.memory_name(g.initial()) << '\n';
  for (const auto& [m, l, t] : g.steps())
    o << "step " << g.memory_name(m) << ' ' << a.letter_name(l) << ' ' << g.memory_name(t) << '\n';
  return o.str();
}

std::vector<Witness> parse_witnesses(std::string_view text, const std::vector<std::string>& alphabet) {
  std::vector<Witness> out;
  for (const auto& l : split_lines(text)) {
    const std::string& key = l.tokens[0].text;
    if (key != "accept" && key != "reject") fail(l, 0, "expected 'accept' or 'reject'");
    const std::size_t from = l.tokens[0].column - 1 + key.size();
    std::string_view rest = l.raw.substr(from);
    std::size_t lead = 0;
    while (lead < rest.size() && space(rest[lead])) ++lead;
    std::size_t trail = rest.size();
    while (trail > lead && space(rest[trail - 1])) --trail;
    try {
      out.push_back({parse_lasso(rest.substr(lead, trail - lead), alphabet), key == "accept"});
    } catch (const ParseError& e) {
      throw ParseError(l.number, from + lead + e.column(), std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
    }
  }
  return out;
}

std::string print_witnesses(const std::vector<Witness>& ws, const std::vector<std::string>& alphabet) {
  std::string out;
  for (const auto& [w, acc] : ws) out += (acc ? "accept " : "reject ") + format_lasso(w, alphabet) + "\n";
  return out;
}

namespace {

// `raw` is appended unescaped.
std::string quoted(const std::string& s, const std::string& raw = "") {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + raw + '"';
}

std::string parity_formula(unsigned p, unsigned top) {
  const std::string atom = (p % 2 == 0 ? "Inf(" : "Fin(") + std::to_string(p) + ")";
  if (p == top) return atom;
  return atom + (p % 2 == 0 ? " | (" : " & (") + parity_formula(p + 1, top) + ")";
}

}  // namespace

std::string to_hoa(const Automaton& a) {
  std::ostringstream o;
  const std::size_t k = a.num_letters();
  const unsigned aps = k <= 1 ? 0 : static_cast<unsigned>(std::bit_width(k - 1));
  std::vector<std::vector<unsigned>> marks(a.num_states());
  std::string acceptance, name;
  auto mark = [&](const StateSet& s, unsigned set) { s.for_each([&](StateId q) { marks[q].push_back(set); }); };
  const Acceptance& acc = a.acceptance();
  switch (kind_of(acc)) {
    case AcceptanceKind::buchi:
    case AcceptanceKind::weak:
      mark(kind_of(acc) == AcceptanceKind::buchi ? std::get<Buchi>(acc).accepting : std::get<Weak>(acc).accepting, 0);
      acceptance = "1 Inf(0)";
      name = "Buchi";
      break;
    case AcceptanceKind::cobuchi:
      mark(std::get<CoBuchi>(acc).rejecting, 0);
      acceptance = "1 Fin(0)";
      name = "co-Buchi";
      break;
    case AcceptanceKind::parity: {
      const auto& p = std::get<Parity>(acc).priority;
      const unsigned top = p.empty() ? 0 : *std::max_element(p.begin(), p.end());
      for (StateId q = 0; q < p.size(); ++q) marks[q].push_back(p[q]);
      acceptance = std::to_string(top + 1) + " " + parity_formula(0, top);
      name = "parity min even " + std::to_string(top + 1);
      break;
    }
    case AcceptanceKind::rabin:
    case AcceptanceKind::streett: {
      const bool rabin = kind_of(acc) == AcceptanceKind::rabin;
      const auto& pairs = rabin ? std::get<Rabin>(acc).pairs : std::get<Streett>(acc).pairs;
      std::string f;
      for (unsigned i = 0; i < pairs.size(); ++i) {
        const unsigned x = 2 * i, y = 2 * i + 1;
        if (rabin) {
          mark(pairs[i].bad, x);
          mark(pairs[i].good, y);
          f += (i ? " | " : "") + std::string("(Fin(") + std::to_string(x) + ")&Inf(" + std::to_string(y) + "))";
        } else {
          mark(pairs[i].bad, x);
          mark(pairs[i].good, y);
          f += (i ? " & " : "") + std::string("(Fin(") + std::to_string(x) + ")|Inf(" + std::to_string(y) + "))";
        }
      }
      if (pairs.empty()) f = rabin ? "f" : "t";
      acceptance = std::to_string(2 * pairs.size()) + " " + f;
      name = std::string(rabin ? "Rabin " : "Streett ") + std::to_string(pairs.size());
      break;
    }
  }
  o << "HOA: v1\nname: " << quoted(a.name()) << "\nStates: " << a.num_states() << '\n';
  for (StateId q : a.initial()) o << "Start: " << q << '\n';
  o << "AP: " << aps;
  for (unsigned i = 0; i < aps; ++i) o << " \"p" << i << '"';
  o << "\nacc-name: " << name << "\nAcceptance: " << acceptance << "\nproperties: explicit-labels state-acc\n";
  o << "--BODY--\n";
  for (StateId q = 0; q < a.num_states(); ++q) {
    o << "State: " << q << ' ' << quoted(a.state_name(q));
    if (!marks[q].empty()) {
      std::sort(marks[q].begin(), marks[q].end());
      o << " {";
      for (std::size_t i = 0; i < marks[q].size(); ++i) o << (i ? " " : "") << marks[q][i];
      o << '}';
    }
    o << '\n';
    for (LetterId l = 0; l < k; ++l) {
      std::string label;
      for (unsigned b = 0; b < aps; ++b) label += (b ? "&" : "") + std::string((l >> b) & 1 ? "" : "!") + std::to_string(b);
      if (aps == 0) label = "t";
      for (StateId t : a.successors(q, l)) o << '[' << label << "] " << t << '\n';
    }
  }
  o << "--END--\n";
  return o.str();
}

namespace {

std::string state_mark(const Automaton& a, StateId q) {
  const Acceptance& acc = a.acceptance();
  if (auto* p = std::get_if<Parity>(&acc)) return "\\n" + std::to_string(p->priority[q]);
  return "";
}

bool doubled(const Automaton& a, StateId q) {
  const Acceptance& acc = a.acceptance();
  if (auto* b = std::get_if<Buchi>(&acc)) return b->accepting.contains(q);
  if (auto* w = std::get_if<Weak>(&acc)) return w->accepting.contains(q);
  if (auto* c = std::get_if<CoBuchi>(&acc)) return !c->rejecting.contains(q);
  return false;
}

}  // namespace

std::string to_dot(const Automaton& a) {
  std::ostringstream o;
  o << "digraph " << quoted(a.name()) << " {\n  rankdir=LR;\n";
  for (StateId q = 0; q < a.num_states(); ++q)
    o << "  n" << q << " [label=" << quoted(a.state_name(q), state_mark(a, q))
      << (doubled(a, q) ? ", shape=doublecircle" : ", shape=circle") << "];\n";
  for (std::size_t i = 0; i < a.initial().size(); ++i)
    o << "  i" << i << " [shape=point];\n  i" << i << " -> n" << a.initial()[i] << ";\n";
  for (const auto& t : a.transitions())
    o << "  n" << t.src << " -> n" << t.dst << " [label=" << quoted(a.letter_name(t.letter)) << "];\n";
  o << "}\n";
  return o.str();
}

std::string to_dot(const StrategyTransducer& g, const Automaton& a) {
  std::ostringstream o;
  o << "digraph " << quoted(g.name()) << " {\n  rankdir=LR;\n  node [shape=box];\n";
  for (MemoryId m = 0; m < g.size(); ++m)
    o << "  m" << m << " [label=" << quoted(g.memory_name(m) + "/" + a.state_name(g.output(m))) << "];\n";
  o << "  i [shape=point];\n  i -> m" << g.initial() << ";\n";
  for (const auto& [m, l, t] : g.steps())
    o << "  m" << m << " -> m" << t << " [label=" << quoted(a.letter_name(l)) << "];\n";
  o << "}\n";
  return o.str();
}

}  // namespace gfg
