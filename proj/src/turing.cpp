#include "dblrec/turing.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "dblrec/error.hpp"

namespace dblrec {

char move_char(Move m) {
  switch (m) {
    case Move::L: return 'L';
    case Move::S: return 'S';
    case Move::R: return 'R';
  }
  return '?';
}

TuringMachine::TuringMachine(std::vector<std::string> symbols, std::vector<std::string> states, State start,
                             State halt, std::span<const RuleSpec> rules)
    : symbols_(std::move(symbols)), states_(std::move(states)), start_(start), halt_(halt) {
  if (symbols_.empty()) throw FormatError("machine alphabet is empty");
  if (states_.empty()) throw FormatError("machine has no states");
  if (start_ >= states_.size() || halt_ >= states_.size()) throw FormatError("start/halt state out of range");
  const auto ns = symbols_.size();
  delta_.assign(states_.size() * ns, Transition{});
  std::vector<bool> seen(delta_.size(), false);
  for (const auto& r : rules) {
    if (r.state >= states_.size() || r.read >= ns || r.action.next >= states_.size() || r.action.write >= ns)
      throw FormatError("rule references an unknown state or symbol");
    if (r.state == halt_) throw FormatError("no transition may leave the halt state");
    auto idx = r.state * ns + r.read;
    if (seen[idx]) throw FormatError("duplicate rule for (" + states_[r.state] + ", " + symbols_[r.read] + ")");
    seen[idx] = true;
    delta_[idx] = r.action;
  }
  for (State q = 0; q < states_.size(); ++q) {
    if (q == halt_) continue;
    for (Symbol s = 0; s < ns; ++s)
      if (!seen[q * ns + s]) throw FormatError("missing rule for (" + states_[q] + ", " + symbols_[s] + ")");
  }
}

std::optional<Symbol> TuringMachine::find_symbol(const std::string& name) const {
  auto it = std::find(symbols_.begin(), symbols_.end(), name);
  if (it == symbols_.end()) return std::nullopt;
  return static_cast<Symbol>(it - symbols_.begin());
}

std::optional<State> TuringMachine::find_state(const std::string& name) const {
  auto it = std::find(states_.begin(), states_.end(), name);
  if (it == states_.end()) return std::nullopt;
  return static_cast<State>(it - states_.begin());
}

std::string TuringMachine::to_text() const {
  std::ostringstream out;
  out << "alphabet:";
  for (const auto& s : symbols_) out << ' ' << s;
  out << "\nstates:";
  for (const auto& q : states_) out << ' ' << q;
  out << "\nstart: " << states_[start_] << "\nhalt: " << states_[halt_] << '\n';
  for (State q = 0; q < states_.size(); ++q) {
    if (q == halt_) continue;
    for (Symbol s = 0; s < symbols_.size(); ++s) {
      const auto& t = delta(q, s);
      out << "rule: " << states_[q] << ' ' << symbols_[s] << " -> " << states_[t.next] << ' ' << symbols_[t.write]
          << ' ' << move_char(t.move) << '\n';
    }
  }
  return out.str();
}

TuringMachine parse_machine(std::istream& in) {
  std::vector<std::string> symbols, states;
  std::string start, halt;
  struct RawRule {
    std::string state, read, next, write, move;
    std::size_t line;
  };
  std::vector<RawRule> raw_rules;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string head;
    if (!(ls >> head)) continue;
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    auto where = [&] { return "line " + std::to_string(lineno) + ": "; };
    if (head == "alphabet:") {
      symbols = toks;
    } else if (head == "states:") {
      states = toks;
    } else if (head == "start:" && toks.size() == 1) {
      start = toks[0];
    } else if (head == "halt:" && toks.size() == 1) {
      halt = toks[0];
    } else if (head == "rule:") {
      if (toks.size() != 6 || toks[2] != "->") throw FormatError(where() + "expected 'rule: q s -> q' s' R|L|S'");
      raw_rules.push_back({toks[0], toks[1], toks[3], toks[4], toks[5], lineno});
    } else {
      throw FormatError(where() + "unknown directive '" + head + "'");
    }
  }
  if (symbols.empty() || states.empty() || start.empty() || halt.empty())
    throw FormatError("machine file needs alphabet, states, start and halt");
  auto index_of = [](const std::vector<std::string>& v, const std::string& name, const char* what,
                     std::size_t line) -> std::uint16_t {
    auto it = std::find(v.begin(), v.end(), name);
    if (it == v.end()) throw FormatError("line " + std::to_string(line) + ": unknown " + what + " '" + name + "'");
    return static_cast<std::uint16_t>(it - v.begin());
  };
  std::vector<RuleSpec> rules;
  for (const auto& r : raw_rules) {
    Move mv;
    if (r.move == "L") mv = Move::L;
    else if (r.move == "R") mv = Move::R;
    else if (r.move == "S") mv = Move::S;
    else throw FormatError("line " + std::to_string(r.line) + ": move must be R, L or S");
    rules.push_back({index_of(states, r.state, "state", r.line), index_of(symbols, r.read, "symbol", r.line),
                     {index_of(symbols, r.write, "symbol", r.line), index_of(states, r.next, "state", r.line), mv}});
  }
  return TuringMachine(symbols, states, index_of(states, start, "state", 0), index_of(states, halt, "state", 0), rules);
}

TuringMachine load_machine(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open machine file '" + path.string() + "'");
  try {
    return parse_machine(in);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

std::vector<Symbol> parse_word(const TuringMachine& m, const std::string& text) {
  std::vector<Symbol> w;
  if (text.empty() || text == "-") return w;
  std::vector<std::string> parts;
  if (text.find_first_of(" ,") != std::string::npos) {
    std::string cur;
    for (char c : text) {
      if (c == ' ' || c == ',') {
        if (!cur.empty()) parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) parts.push_back(cur);
  } else {
    for (char c : text) parts.emplace_back(1, c);
  }
  for (const auto& p : parts) {
    auto s = m.find_symbol(p);
    if (!s) throw FormatError("input symbol '" + p + "' is not in the machine alphabet");
    if (*s == kBlank) throw FormatError("input words may not contain the blank");
    w.push_back(*s);
  }
  return w;
}

TuringMachine random_machine(std::mt19937_64& rng, std::size_t symbols, std::size_t states, unsigned halt_bias) {
  std::vector<std::string> sym{"_"}, st;
  for (std::size_t i = 1; i < symbols; ++i) sym.push_back(std::string(1, static_cast<char>('a' + i - 1)));
  for (std::size_t i = 0; i + 1 < states; ++i) st.push_back("q" + std::to_string(i));
  st.push_back("qs");
  const auto halt = static_cast<State>(states - 1);
  std::uniform_int_distribution<std::size_t> pick_sym(0, symbols - 1), pick_move(0, 2);
  std::uniform_int_distribution<std::size_t> pick_state(0, states > 1 ? states - 2 : 0);
  std::uniform_int_distribution<unsigned> halt_roll(0, halt_bias == 0 ? 0 : halt_bias - 1);
  std::vector<RuleSpec> rules;
  for (State q = 0; q < halt; ++q) {
    for (Symbol s = 0; s < symbols; ++s) {
      Transition t;
      t.write = static_cast<Symbol>(pick_sym(rng));
      t.next = halt_roll(rng) == 0 ? halt : static_cast<State>(pick_state(rng));
      t.move = static_cast<Move>(pick_move(rng));
      rules.push_back({q, s, t});
    }
  }
  return TuringMachine(sym, st, 0, halt, rules);
}

// ---------------------------------------------------------------------------

Symbol Configuration::read(std::int64_t cell) const {
  auto it = tape.find(cell);
  return it == tape.end() ? kBlank : it->second;
}

Configuration initial_configuration(const TuringMachine& m, std::span<const Symbol> w) {
  Configuration c;
  c.state = m.start();
  c.head = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != kBlank) c.tape[static_cast<std::int64_t>(i) + 1] = w[i];
  c.touched_min = 0;
  c.touched_max = static_cast<std::int64_t>(w.size());
  return c;
}

std::optional<Configuration> step(const TuringMachine& m, const Configuration& c) {
  if (c.state == m.halt()) return std::nullopt;
  const auto& t = m.delta(c.state, c.read(c.head));
  Configuration next = c;
  if (t.write == kBlank)
    next.tape.erase(c.head);
  else
    next.tape[c.head] = t.write;
  next.state = t.next;
  next.head += t.move == Move::L ? -1 : t.move == Move::R ? 1 : 0;
  next.touched_min = std::min(next.touched_min, next.head);
  next.touched_max = std::max(next.touched_max, next.head);
  return next;
}

Trace run_trace(const TuringMachine& m, std::span<const Symbol> w, std::size_t max_steps) {
  Trace tr;
  tr.configs.push_back(initial_configuration(m, w));
  tr.halted = tr.configs.back().state == m.halt();
  while (!tr.halted && tr.configs.size() <= max_steps) {
    auto next = step(m, tr.configs.back());
    tr.configs.push_back(std::move(*next));
    tr.halted = tr.configs.back().state == m.halt();
  }
  return tr;
}

RunReport classify_trace(const TuringMachine& m, const Trace& trace) {
  RunReport r;
  r.steps = trace.configs.size() - 1;
  for (std::size_t t = 1; t < trace.configs.size(); ++t) {
    const auto& c = trace.configs[t];
    if (c.head < 0 && !r.visited_negative) {
      r.visited_negative = true;
      r.first_negative_move_step = t;
      r.tape_clean_at_first_negative_move = c.tape_clean();
    }
  }
  r.halted = !trace.configs.empty() && trace.configs.back().state == m.halt();
  r.tape_clean_at_halt = r.halted && trace.configs.back().tape_clean();
  return r;
}

RunReport run_classify(const TuringMachine& m, std::span<const Symbol> w, std::size_t max_steps) {
  return classify_trace(m, run_trace(m, w, max_steps));
}

// ---------------------------------------------------------------------------

std::size_t cell_letter_count(const TuringMachine& m) { return m.symbol_count() * (1 + m.state_count()); }

std::size_t cell_index(const TuringMachine& m, CellLetter c) {
  return c.symbol * (1 + m.state_count()) + (c.state ? *c.state + 1 : 0);
}

CellLetter cell_from_index(const TuringMachine& m, std::size_t index) {
  const auto stride = 1 + m.state_count();
  CellLetter c;
  c.symbol = static_cast<Symbol>(index / stride);
  if (auto r = index % stride; r != 0) c.state = static_cast<State>(r - 1);
  return c;
}

std::string cell_name(const TuringMachine& m, CellLetter c) {
  if (!c.state) return m.symbol_name(c.symbol);
  return "(" + m.symbol_name(c.symbol) + "," + m.state_name(*c.state) + ")";
}

}  // namespace dblrec
