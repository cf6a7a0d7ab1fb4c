#include "dblrec/sim_trace.hpp"

namespace dblrec {

std::vector<SimTape> simulated_tapes(const TuringMachine& m, std::span<const Symbol> w, std::size_t steps,
                                     SimMode mode) {
  const auto trace = run_trace(m, w, steps);
  std::vector<SimTape> out;
  out.reserve(steps + 1);
  std::optional<std::size_t> died;
  for (std::size_t t = 0; t <= steps; ++t) {
    const auto& c = trace.configs[std::min(t, trace.configs.size() - 1)];
    SimTape tape;
    for (const auto& [cell, sym] : c.tape) tape[cell] = CellLetter{sym, std::nullopt};
    if (mode == SimMode::HeadDiesOnNegative && !died && c.head < 0) died = t;
    const bool halted_earlier = t >= trace.configs.size() || (t > 0 && trace.configs[t - 1].state == m.halt());
    bool show_head = !died;
    if (show_head && halted_earlier && c.read(c.head) == kBlank) show_head = false;
    if (died && *died < t) {
      // frozen at the moment of death
      out.push_back(out.back());
      continue;
    }
    if (show_head) tape[c.head] = CellLetter{c.read(c.head), c.state};
    out.push_back(std::move(tape));
  }
  return out;
}

}  // namespace dblrec
