#pragma once

// Compiles a Halting instance (M, w) into a system whose development runs M:
// every second diagonal (type 0) holds a configuration as cell letters, the
// diagonals in between (type 1) hold ordered pairs of neighbouring cells.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dblrec/develop.hpp"
#include "dblrec/dynsys.hpp"
#include "dblrec/system_io.hpp"
#include "dblrec/turing.hpp"

namespace dblrec {

/// Next-time content of the centre cell y given its left (x) and right (z)
/// neighbours. Throws TwoHeads when more than one argument carries a state.
CellLetter uw_local_update(const TuringMachine& m, CellLetter x, CellLetter y, CellLetter z);

struct UwMeta {
  std::size_t cell_letters = 0;             // |Gamma0|, plain blank included
  std::vector<LetterId> gamma0;             // by cell index; gamma0[0] = zero
  std::vector<LetterId> pair;               // P(u,v) at u * |Gamma0| + v; pair[0] = zero
  std::vector<std::vector<LetterId>> bootstrap;  // bootstrap[d][k], d = 2..dW-1
  std::size_t seed_diagonal = 0;            // dW = |w| + 6
  std::size_t cell0_index = 3;              // position of tape cell 0 on D_dW

  /// Letter of type-1 pair P(u,v), u being the lower diagonal index.
  LetterId pair_letter(std::size_t u, std::size_t v) const { return pair[u * cell_letters + v]; }
};

struct UwSystem {
  DynamicalSystem system;
  UwMeta meta;
};

/// Throws ConflictingRule on a construction bug.
UwSystem compile_uw(const TuringMachine& m, std::span<const Symbol> w);

struct UwVerifyReport {
  std::size_t steps_checked = 0;
  std::vector<bool> step_matches;
  std::optional<std::pair<std::size_t, std::int64_t>> first_mismatch;  // (t, tape cell)
  bool bottom_free = true;
  bool type_discipline = true;   // pair letters only on type-1 diagonals
  std::size_t min_margin = 0;    // zeros between content and the walls on type-0 diagonals
  bool margin_ok = true;         // min_margin >= 2
  ZeroVerdict verdict;
  RunReport run;
  bool resolved = false;         // the machine halted within the window
  bool agreement = false;        // verdict.certified() == run.uw_accept(), meaningful iff resolved

  bool all_match() const { return !first_mismatch; }
  bool ok() const { return all_match() && bottom_free && type_discipline && margin_ok && (!resolved || agreement); }
};

/// Requires last >= dW + 2 * steps.
UwVerifyReport verify_uw(const UwSystem& compiled, const TuringMachine& m, std::span<const Symbol> w,
                         std::size_t steps, std::size_t last);

MetaEntries uw_meta_entries(const UwMeta& meta);
UwMeta uw_meta_from_entries(const MetaEntries& entries);

}  // namespace dblrec
