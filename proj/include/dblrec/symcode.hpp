#pragma once

// Symmetric codes. Every tape cell c is written as three letters c c' c''
// (tags 0, 1, 2); plain blank cells are 000. Words over these letters are
// folded by sliding unordered pairs: pi_i(w1..wn) = [w1,w2][w2,w3]...[wn-1,wn]
// with [0,0] = 0. Seven folds turn an 8-letter window into one level-7 term.
//
// Terms are interned as canonical nested pairs, so only levels reachable from
// the windows actually fed in are ever materialized.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dblrec/turing.hpp"

namespace dblrec {

/// Tagged level-0 letter: 0 is zero, otherwise 1 + 3 * (cell - 1) + tag for a
/// non-zero cell letter index (see cell_index) and tag in {0, 1, 2}.
using G0Code = std::uint32_t;
using Word = std::vector<G0Code>;

inline G0Code g0_code(std::size_t cell, unsigned tag) { return static_cast<G0Code>(1 + 3 * (cell - 1) + tag); }
inline std::size_t g0_cell(G0Code c) { return c == 0 ? 0 : (c - 1) / 3 + 1; }
inline unsigned g0_tag(G0Code c) { return c == 0 ? 0 : (c - 1) % 3; }
inline std::size_t g0_count(std::size_t cell_letters) { return 1 + 3 * (cell_letters - 1); }

/// {c, c', c''}; the plain blank gives {0, 0, 0}.
std::array<G0Code, 3> encode_cell(std::size_t cell);
std::string g0_name(const TuringMachine& m, G0Code c);

Word sigma(std::span<const G0Code> w);

using TermId = std::uint32_t;
inline constexpr TermId kZeroTerm = 0;
inline constexpr int kMaxLevel = 7;

struct Term {
  int level = -1;  // -1 for zero, which stands for the all-zero term of every level
  TermId first = kZeroTerm, second = kZeroTerm;  // children, first <= second
  G0Code letter = 0;                             // level 0 only
};

/// Not thread-safe while interning or decoding; read-only use can be shared.
class TermInterner {
 public:
  TermInterner();

  TermId leaf(G0Code letter);
  /// [a, b]; zero if both are zero. Throws LevelMismatch on differing levels
  /// or when the result would exceed kMaxLevel.
  TermId upair(TermId a, TermId b);
  std::optional<TermId> find_pair(TermId a, TermId b) const;

  const Term& term(TermId t) const { return terms_[t]; }
  int level(TermId t) const { return terms_[t].level; }
  std::size_t size() const { return terms_.size(); }
  std::size_t count_at_level(int level) const;

  /// Every word of length level+1 over the tagged alphabet whose code is t.
  /// Exact: each fold determines the two child windows up to their order.
  const std::vector<Word>& decode(TermId t, int level) const;

 private:
  static std::uint64_t key(TermId a, TermId b) { return (std::uint64_t{a} << 32) | b; }

  std::vector<Term> terms_;
  std::unordered_map<G0Code, TermId> leaves_;
  std::unordered_map<std::uint64_t, TermId> pairs_;
  mutable std::unordered_map<TermId, std::vector<Word>> decoded_;
  mutable std::vector<std::vector<Word>> zero_words_;
};

std::vector<TermId> leaves(TermInterner& in, std::span<const G0Code> w);
/// Output position k is upair(w_k, w_{k+1}); |w| >= 2.
std::vector<TermId> pi_level(TermInterner& in, std::span<const TermId> w);

/// levels[0] is w as leaves; levels.back() has one entry, the code.
struct CodeLevels {
  std::vector<std::vector<TermId>> levels;
  TermId code() const { return levels.back().front(); }
};
CodeLevels pi_levels(TermInterner& in, std::span<const G0Code> w);

/// Requires |w| = 8.
TermId pi8(TermInterner& in, std::span<const G0Code> w);

/// Generic windows E (length-8 pieces of aa'a''bb'b''cc'c''dd'd'') and
/// central windows S (length-8 pieces of b a''a'a 000 aa'a'' b) for cell
/// letters drawn from a machine with the given symbol and state counts.
struct WindowSets {
  std::size_t cell_letters = 0;
  std::vector<Word> generic;
  std::vector<Word> central;

  std::vector<Word> all() const;  // sorted union
};

WindowSets enum_windows(std::size_t symbols, std::size_t states);

struct SymcodReport {
  std::size_t generic_count = 0, central_count = 0, union_count = 0;
  std::size_t classes = 0, palindromic_classes = 0, pair_classes = 0;
  std::size_t collision_count = 0;
  std::vector<std::pair<Word, Word>> collisions;  // first few only
  std::size_t generic_level_violations = 0;       // successive equal letters that are not zero
  std::size_t central_level_exceptions = 0;
  bool worst_case_ok = false;                     // cc'c''cc'c''cc' pairs only with its reversal
  bool wide_checked = false;
  std::size_t wide_extra_preimages = 0;           // words of the full tagged alphabet sharing a code
  std::size_t terms = 0;
  double seconds = 0;

  bool ok() const { return collision_count == 0 && worst_case_ok && generic_level_violations == 0; }
};

/// Exhaustive check that pi8 is injective up to reversal on E u S. With
/// `wide`, each class is also decoded against every tagged 8-letter word.
SymcodReport check_symcod(std::size_t symbols, std::size_t states, bool wide = true);

/// Same experiment with two copies c c' per cell instead of three: length-3
/// windows whose level-1 words coincide although the windows are neither
/// equal nor reverses of each other.
struct DoubledControl {
  std::size_t windows = 0;
  std::vector<std::pair<Word, Word>> collisions;
  bool aba_bab = false;  // some collision has the shape x y x / y x y
};

DoubledControl doubled_control(std::size_t symbols, std::size_t states);

}  // namespace dblrec
