#pragma once

// What a compiled system is expected to show on its successive configuration
// diagonals: the machine tape rendered as cell letters, with the conventions
// of the constructions for halting and for crossing to the negative side.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "dblrec/turing.hpp"

namespace dblrec {

enum class SimMode {
  TwoWay,               // plain two-way tape
  HeadDiesOnNegative,   // the head disappears on its first move to cell -1
};

using SimTape = std::map<std::int64_t, CellLetter>;  // non-zero cells only

/// Entry t is the tape expected at time t, for t = 0..steps. A halted head
/// reading a blank is erased one step after halting; on any other symbol it
/// persists unchanged.
std::vector<SimTape> simulated_tapes(const TuringMachine& m, std::span<const Symbol> w, std::size_t steps,
                                     SimMode mode);

}  // namespace dblrec
