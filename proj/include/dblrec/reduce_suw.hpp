#pragma once

// Symmetric compilation of (M, w). Configurations live on every eighth
// diagonal (type 0) as tagged letters: cell c is c c' c'' right of the
// diagonal centre and c'' c' c mirrored on the left, around a central 000.
// Diagonal types 1..7 carry the symmetric codes of growing windows; the rule
// on type 7 decodes two overlapping 8-windows and writes the centre letter of
// the next configuration four cells further along both axes.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dblrec/develop.hpp"
#include "dblrec/dynsys.hpp"
#include "dblrec/symcode.hpp"
#include "dblrec/system_io.hpp"
#include "dblrec/turing.hpp"

namespace dblrec {

/// Next-configuration letter at the centre of a 9-letter window of a type-0
/// diagonal. Orientation and triple phase are read from the tags; a centre
/// inside the central 000 stays 0, and a head stepping into it disappears.
/// Throws TagInconsistency (no consistent reading), PhaseError (readings
/// disagree) or TwoHeads.
G0Code suw_window_update(const TuringMachine& m, std::span<const G0Code> window);

struct SuwMeta {
  std::size_t cell_letters = 0;
  std::vector<LetterId> gamma0;        // by G0Code; gamma0[0] = zero
  std::vector<LetterId> term_letter;   // by TermId
  std::vector<int> letter_level;       // by LetterId: code level, -1 zero, -2 outside the simulation
  std::vector<std::vector<LetterId>> bootstrap;  // bootstrap[d][min(k, d-k)]
  std::size_t seed_diagonal = 0;       // dW = 28 + 6 |w|
  std::size_t center_index = 0;        // dW / 2
  std::size_t windows = 0;             // 9-windows enumerated for the type-7 rules
  std::size_t type7_rules = 0;
  std::array<std::size_t, kMaxLevel + 1> level_letters{};

  std::size_t diagonal_type(std::size_t n) const { return (n - seed_diagonal) % 8; }
};

struct SuwSystem {
  DynamicalSystem system;
  SuwMeta meta;
  TermInterner terms;
};

/// Throws ConflictingRule or SymmetryViolation on a construction bug.
SuwSystem compile_suw(const TuringMachine& m, std::span<const Symbol> w);

/// Letters of the seeded configuration diagonal, as tagged codes (walls
/// excluded): 0^9 w_n''w_n'w_n .. d''d'd 000 d d'd'' .. w_n w_n'w_n'' 0^9.
Word suw_seed_word(const TuringMachine& m, std::span<const Symbol> w);

struct SuwVerifyReport {
  std::size_t steps_checked = 0;
  std::vector<bool> step_matches;
  std::optional<std::pair<std::size_t, std::int64_t>> first_mismatch;  // (t, tape cell)
  bool symmetric = true;
  std::optional<std::pair<std::size_t, std::size_t>> asymmetry_at;    // (i, j)
  bool bottom_free = true;
  bool type_discipline = true;
  std::size_t min_margin = 0;  // zeros between the right-most content and the wall
  ZeroVerdict verdict;
  RunReport run;
  bool resolved = false;
  bool agreement = false;

  bool all_match() const { return !first_mismatch; }
  bool ok() const { return all_match() && symmetric && bottom_free && type_discipline && (!resolved || agreement); }
};

/// Requires last >= dW + 8 * steps.
SuwVerifyReport verify_suw(const SuwSystem& compiled, const TuringMachine& m, std::span<const Symbol> w,
                           std::size_t steps, std::size_t last);

MetaEntries suw_meta_entries(const SuwMeta& meta);

}  // namespace dblrec
