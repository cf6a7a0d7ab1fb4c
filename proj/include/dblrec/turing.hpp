#pragma once

// Deterministic single-tape Turing machines on a two-way infinite tape.
//
// Machine file:
//   alphabet: _ a b          first entry is the blank
//   states: q0 q1 qs
//   start: q0
//   halt: qs
//   rule: q0 _ -> q1 a R     one rule per (state, symbol), none from halt
//   # comment

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace dblrec {

using Symbol = std::uint16_t;
using State = std::uint16_t;

inline constexpr Symbol kBlank = 0;

enum class Move : std::uint8_t { L, S, R };

char move_char(Move m);

struct Transition {
  Symbol write = kBlank;
  State next = 0;
  Move move = Move::S;
};

struct RuleSpec {
  State state;
  Symbol read;
  Transition action;
};

class TuringMachine {
 public:
  /// Throws FormatError unless delta is total on symbols x (states - halt)
  /// and undefined on halt.
  TuringMachine(std::vector<std::string> symbols, std::vector<std::string> states, State start, State halt,
                std::span<const RuleSpec> rules);

  std::size_t symbol_count() const { return symbols_.size(); }
  std::size_t state_count() const { return states_.size(); }
  const std::string& symbol_name(Symbol s) const { return symbols_[s]; }
  const std::string& state_name(State q) const { return states_[q]; }
  std::optional<Symbol> find_symbol(const std::string& name) const;
  std::optional<State> find_state(const std::string& name) const;
  State start() const { return start_; }
  State halt() const { return halt_; }

  /// Requires q != halt().
  const Transition& delta(State q, Symbol s) const { return delta_[q * symbols_.size() + s]; }

  std::string to_text() const;

 private:
  std::vector<std::string> symbols_;
  std::vector<std::string> states_;
  State start_, halt_;
  std::vector<Transition> delta_;
};

TuringMachine parse_machine(std::istream& in);
TuringMachine load_machine(const std::filesystem::path& path);

/// Parses an input word: "" or "-" is empty; words containing spaces or
/// commas are split on them; otherwise every character is one symbol.
std::vector<Symbol> parse_word(const TuringMachine& m, const std::string& text);

/// A random machine with the given alphabet and state counts (the last state
/// halts). About one transition in `halt_bias` enters the halt state.
TuringMachine random_machine(std::mt19937_64& rng, std::size_t symbols, std::size_t states, unsigned halt_bias = 4);

struct Configuration {
  std::map<std::int64_t, Symbol> tape;  // non-blank cells only
  std::int64_t head = 0;
  State state = 0;
  std::int64_t touched_min = 0, touched_max = 0;

  Symbol read(std::int64_t cell) const;
  bool tape_clean() const { return tape.empty(); }
  friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// Head on cell 0 in the start state, w on cells 1..|w|.
Configuration initial_configuration(const TuringMachine& m, std::span<const Symbol> w);

/// nullopt when c is already halted.
std::optional<Configuration> step(const TuringMachine& m, const Configuration& c);

struct Trace {
  std::vector<Configuration> configs;  // configs[t] = time t
  bool halted = false;
};

Trace run_trace(const TuringMachine& m, std::span<const Symbol> w, std::size_t max_steps);

struct RunReport {
  bool halted = false;
  std::size_t steps = 0;
  bool tape_clean_at_halt = false;
  bool visited_negative = false;
  std::optional<std::size_t> first_negative_move_step;
  std::optional<bool> tape_clean_at_first_negative_move;  // after that step's write

  bool uw_accept() const { return halted && tape_clean_at_halt; }
  bool suw_accept() const {
    return (halted && tape_clean_at_halt && !visited_negative) ||
           (visited_negative && tape_clean_at_first_negative_move.value_or(false));
  }
  /// The UW outcome is known (the machine halted).
  bool uw_resolved() const { return halted; }
  /// The SUW outcome is known (halted, or crossed to the negative side).
  bool suw_resolved() const { return halted || visited_negative; }
};

RunReport classify_trace(const TuringMachine& m, const Trace& trace);
RunReport run_classify(const TuringMachine& m, std::span<const Symbol> w, std::size_t max_steps);

// ---------------------------------------------------------------------------
// Cell letters: a tape symbol, optionally carrying the head and its state.
// Indexed densely as symbol * (1 + |Q|) + (state ? state + 1 : 0); index 0 is
// the plain blank.

struct CellLetter {
  Symbol symbol = kBlank;
  std::optional<State> state;

  bool is_zero() const { return symbol == kBlank && !state; }
  bool has_head() const { return state.has_value(); }
  friend bool operator==(const CellLetter&, const CellLetter&) = default;
};

std::size_t cell_letter_count(const TuringMachine& m);
std::size_t cell_index(const TuringMachine& m, CellLetter c);
CellLetter cell_from_index(const TuringMachine& m, std::size_t index);
std::string cell_name(const TuringMachine& m, CellLetter c);

}  // namespace dblrec
