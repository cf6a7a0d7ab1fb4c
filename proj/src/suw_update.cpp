#include <algorithm>
#include <set>

#include "dblrec/error.hpp"
#include "dblrec/reduce_suw.hpp"
#include "dblrec/reduce_uw.hpp"

namespace dblrec {

namespace {

enum class Side { Blank, Right, Left };

struct Slot {
  Side side = Side::Blank;
  std::size_t cell = 0;  // cell letter index, 0 for blank
  int start = 0;         // window position of the triple's first letter
};

// One reading of the window with triple boundaries at positions = phase mod 3.
std::optional<G0Code> read_with_phase(const TuringMachine& m, std::span<const G0Code> w, int phase) {
  std::vector<Slot> slots;
  int center = -1;
  for (int s = phase - 3; s <= 8; s += 3) {
    const int lo = std::max(s, 0), hi = std::min(s + 2, 8);
    if (lo > hi) continue;
    bool any_zero = false, any_letter = false;
    for (int p = lo; p <= hi; ++p) (w[p] == 0 ? any_zero : any_letter) = true;
    Slot slot{Side::Blank, 0, s};
    if (any_letter) {
      if (any_zero) return std::nullopt;
      slot.cell = g0_cell(w[lo]);
      bool right = true, left = true;
      for (int p = lo; p <= hi; ++p) {
        if (g0_cell(w[p]) != slot.cell) return std::nullopt;
        const auto tag = static_cast<int>(g0_tag(w[p]));
        right = right && tag == p - s;
        left = left && tag == 2 - (p - s);
      }
      if (right == left) return std::nullopt;
      slot.side = right ? Side::Right : Side::Left;
    }
    if (s <= 4 && 4 <= s + 2) center = static_cast<int>(slots.size());
    slots.push_back(slot);
  }

  int last_left = -1, first_right = -1;
  for (int i = 0; i < static_cast<int>(slots.size()); ++i) {
    if (slots[i].side == Side::Left) last_left = i;
    if (slots[i].side == Side::Right && first_right < 0) first_right = i;
  }
  for (int i = 0; i < static_cast<int>(slots.size()); ++i)
    if (slots[i].side == Side::Left && first_right >= 0 && i > first_right) return std::nullopt;

  Side side;
  if (last_left >= 0 && first_right >= 0) {
    // Both halves visible: the separator sits midway and the halves mirror.
    const int gap = first_right - last_left - 1;
    if (gap < 1 || gap % 2 == 0) return std::nullopt;
    const int sep = (last_left + first_right) / 2;
    for (int d = 1; sep - d >= 0 && sep + d < static_cast<int>(slots.size()); ++d) {
      const auto& l = slots[sep - d];
      const auto& r = slots[sep + d];
      const bool mirrored = (l.side == Side::Blank && r.side == Side::Blank) ||
                            (l.side == Side::Left && r.side == Side::Right && l.cell == r.cell);
      if (!mirrored) return std::nullopt;
    }
    if (center == sep) return 0;
    side = center < sep ? Side::Left : Side::Right;
  } else if (slots[center].side != Side::Blank) {
    side = slots[center].side;
  } else {
    const auto nl = slots[center - 1].side, nr = slots[center + 1].side;
    if (nl == Side::Right || nr == Side::Right) side = Side::Right;
    else if (nl == Side::Left || nr == Side::Left) side = Side::Left;
    else return 0;
  }

  const Slot& mid = slots[center];
  const Slot& tape_left = side == Side::Right ? slots[center - 1] : slots[center + 1];
  const Slot& tape_right = side == Side::Right ? slots[center + 1] : slots[center - 1];
  const Side wrong = side == Side::Right ? Side::Left : Side::Right;
  if (mid.side == wrong || tape_left.side == wrong || tape_right.side == wrong) return std::nullopt;
  const int offset = 4 - mid.start;
  const auto tag = static_cast<unsigned>(side == Side::Right ? offset : 2 - offset);

  const auto next = uw_local_update(m, cell_from_index(m, tape_left.cell), cell_from_index(m, mid.cell),
                                    cell_from_index(m, tape_right.cell));
  const auto idx = cell_index(m, next);
  return idx == 0 ? G0Code{0} : g0_code(idx, tag);
}

}  // namespace

G0Code suw_window_update(const TuringMachine& m, std::span<const G0Code> window) {
  if (window.size() != 9) throw Error("suw_window_update takes 9 letters");
  if (std::all_of(window.begin(), window.end(), [](G0Code c) { return c == 0; })) return 0;
  std::set<G0Code> readings;
  for (int phase = 0; phase < 3; ++phase)
    if (auto r = read_with_phase(m, window, phase)) readings.insert(*r);
  if (readings.empty()) throw TagInconsistency("window admits no consistent triple reading");
  if (readings.size() > 1) throw PhaseError("window readings disagree on the centre letter");
  return *readings.begin();
}

}  // namespace dblrec
