#include "dblrec/reduce_suw.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dblrec/error.hpp"
#include "dblrec/sim_trace.hpp"

namespace dblrec {

namespace {

// 9-windows of zero-padded patterns with at most one head cell: four
// consecutive tape cells (either orientation) and two cells on each side of
// the central 000.
std::vector<Word> rule_windows(const TuringMachine& m) {
  const std::size_t cells = cell_letter_count(m);
  std::vector<char> head(cells);
  for (std::size_t i = 0; i < cells; ++i) head[i] = cell_from_index(m, i).has_head();

  std::set<Word> out;
  auto add_pieces = [&](const Word& pattern) {
    for (std::size_t off = 0; off + 9 <= pattern.size(); ++off) {
      Word w(pattern.begin() + off, pattern.begin() + off + 9);
      out.insert(sigma(w));
      out.insert(std::move(w));
    }
  };
  for (std::size_t a = 0; a < cells; ++a)
    for (std::size_t b = 0; b < cells; ++b)
      for (std::size_t c = 0; c < cells; ++c)
        for (std::size_t d = 0; d < cells; ++d) {
          if (head[a] + head[b] + head[c] + head[d] > 1) continue;
          Word pattern;
          for (auto x : {a, b, c, d})
            for (auto l : encode_cell(x)) pattern.push_back(l);
          add_pieces(pattern);
        }
  for (std::size_t a = 0; a < cells; ++a)
    for (std::size_t b = 0; b < cells; ++b) {
      if (head[a] + head[b] > 1) continue;
      const auto ea = encode_cell(a), eb = encode_cell(b);
      add_pieces(Word{eb[2], eb[1], eb[0], ea[2], ea[1], ea[0], 0, 0, 0, ea[0], ea[1], ea[2], eb[0], eb[1], eb[2]});
    }
  return {out.begin(), out.end()};
}

std::string term_name(const TermInterner& in, TermId t) {
  return "t" + std::to_string(in.level(t)) + ":" + std::to_string(t);
}

}  // namespace

Word suw_seed_word(const TuringMachine& m, std::span<const Symbol> w) {
  std::vector<std::size_t> tape{cell_index(m, {kBlank, m.start()})};
  for (auto s : w) tape.push_back(cell_index(m, {s, std::nullopt}));
  Word right{0, 0, 0};
  for (auto c : tape)
    for (auto l : encode_cell(c)) right.push_back(l);
  right.insert(right.end(), 9, 0);
  // mirror of everything right of the separator
  Word out(right.rbegin(), right.rend() - 3);
  out.insert(out.end(), right.begin(), right.end());
  return out;
}

SuwSystem compile_suw(const TuringMachine& m, std::span<const Symbol> w) {
  for (auto s : w)
    if (s == kBlank || s >= m.symbol_count()) throw FormatError("input word must be blank-free over the alphabet");

  SuwSystem out;
  auto& meta = out.meta;
  auto& in = out.terms;
  SystemBuilder b;

  const std::size_t cells = cell_letter_count(m);
  meta.cell_letters = cells;
  meta.gamma0.assign(g0_count(cells), b.zero());
  for (G0Code c = 1; c < meta.gamma0.size(); ++c) {
    meta.gamma0[c] = b.add("s:" + g0_name(m, c), {RoleKind::Type0});
    in.leaf(c);
  }

  // Pass 1: intern the codes of every 8-window and remember which windows share a code.
  const auto windows = rule_windows(m);
  meta.windows = windows.size();
  std::map<TermId, std::set<Word>> classes;
  std::set<std::pair<TermId, TermId>> type7;
  for (const auto& win : windows) {
    (void)suw_window_update(m, win);
    const std::span<const G0Code> all(win);
    const auto lo = pi8(in, all.first(8));
    const auto hi = pi8(in, all.last(8));
    classes[lo].emplace(win.begin(), win.begin() + 8);
    classes[hi].emplace(win.begin() + 1, win.end());
    type7.insert(std::minmax(lo, hi));
  }
  classes[kZeroTerm].insert(Word(8, 0));

  meta.term_letter.assign(in.size(), b.zero());
  for (TermId t = 1; t < in.size(); ++t) {
    const auto& term = in.term(t);
    meta.term_letter[t] = term.level == 0 ? meta.gamma0[term.letter] : b.add(term_name(in, t), LetterRole::pair(term.level));
    ++meta.level_letters[term.level];
  }

  // Palindromic bootstrap up to the seeded diagonal.
  const auto seed = suw_seed_word(m, w);
  const std::size_t dw = seed.size() + 1;
  meta.seed_diagonal = dw;
  meta.center_index = dw / 2;
  meta.bootstrap.assign(dw, {});
  for (std::size_t d = 2; d < dw; ++d) {
    meta.bootstrap[d].assign(d / 2 + 1, b.one());
    for (std::size_t k = 1; k <= d / 2; ++k)
      meta.bootstrap[d][k] = b.add("u:" + std::to_string(d) + "." + std::to_string(k), {RoleKind::Bootstrap});
  }
  auto bootstrap_cell = [&](std::size_t d, std::size_t k) -> LetterId {
    if (k == 0 || k == d) return b.one();
    return d == dw ? meta.gamma0[seed[k - 1]] : meta.bootstrap[d][std::min(k, d - k)];
  };
  for (std::size_t d = 2; d <= dw; ++d)
    for (std::size_t k = 1; k < d; ++k)
      b.define_symmetric(bootstrap_cell(d - 1, k), bootstrap_cell(d - 1, k - 1), bootstrap_cell(d, k));

  for (LetterId x = 0; x < b.size(); ++x) {
    const auto kind = b.letter(x).role.kind;
    if (kind == RoleKind::Bootstrap || kind == RoleKind::One || kind == RoleKind::Bottom) continue;
    b.define_symmetric(x, b.one(), b.zero());
  }

  // Types 0..6: f(a, b) = [a, b].
  b.define(b.zero(), b.zero(), b.zero());
  for (TermId t = 1; t < in.size(); ++t) {
    const auto& term = in.term(t);
    if (term.level == 0) continue;
    b.define_symmetric(meta.term_letter[term.first], meta.term_letter[term.second], meta.term_letter[t]);
  }

  // Type 7: merge the decoded windows on their overlap and step the centre.
  for (const auto& [alpha, beta] : type7) {
    std::optional<G0Code> image;
    auto consider = [&](const Word& head, const Word& tail) {
      if (!std::equal(head.begin() + 1, head.end(), tail.begin())) return;
      Word merged(head);
      merged.push_back(tail.back());
      G0Code next;
      try {
        next = suw_window_update(m, merged);
      } catch (const TagInconsistency&) {
        return;
      } catch (const PhaseError&) {
        return;
      } catch (const TwoHeads&) {
        return;
      }
      if (image && *image != next)
        throw ConflictingRule(meta.term_letter[alpha], meta.term_letter[beta], meta.gamma0[*image], meta.gamma0[next]);
      image = next;
    };
    for (const auto& x : classes.at(alpha))
      for (const auto& y : classes.at(beta)) {
        consider(x, y);
        consider(y, x);
      }
    if (!image) throw Error("type-7 pair without a consistent window");
    b.define_symmetric(meta.term_letter[alpha], meta.term_letter[beta], meta.gamma0[*image]);
    ++meta.type7_rules;
  }

  meta.letter_level.assign(b.size(), -2);
  meta.letter_level[b.zero()] = -1;
  for (TermId t = 1; t < in.size(); ++t) meta.letter_level[meta.term_letter[t]] = in.level(t);

  out.system = std::move(b).build(true);
  std::pair<LetterId, LetterId> witness;
  if (!table_symmetric(out.system, &witness))
    throw SymmetryViolation("f(" + std::to_string(witness.first) + "," + std::to_string(witness.second) +
                            ") differs from its mirror");
  return out;
}

SuwVerifyReport verify_suw(const SuwSystem& compiled, const TuringMachine& m, std::span<const Symbol> w,
                           std::size_t steps, std::size_t last) {
  const auto& sys = compiled.system;
  const auto& meta = compiled.meta;
  const std::size_t dw = meta.seed_diagonal;
  if (last < dw + 8 * steps) throw Error("verify_suw needs at least dW + 8T diagonals");

  SuwVerifyReport r;
  const auto expected = simulated_tapes(m, w, steps, SimMode::HeadDiesOnNegative);
  r.step_matches.assign(steps + 1, true);
  r.min_margin = last;

  DiagonalStream stream(sys);
  for (;;) {
    const auto& d = stream.current();
    const std::size_t n = d.n;
    for (std::size_t k = 1; k < n; ++k) {
      const auto c = d.cells[k];
      if (!r.asymmetry_at && c != d.cells[n - k]) {
        r.symmetric = false;
        r.asymmetry_at = {{n - k, k}};
      }
      if (sys.bottom && c == *sys.bottom) r.bottom_free = false;
      if (n >= dw && c != sys.zero && meta.letter_level[c] != static_cast<int>(meta.diagonal_type(n)))
        r.type_discipline = false;
    }
    if (n >= dw && meta.diagonal_type(n) == 0 && (n - dw) / 8 <= steps) {
      const std::size_t t = (n - dw) / 8;
      const std::size_t center = n / 2;
      const auto& tape = expected[t];
      bool match = true;
      std::int64_t first_bad = 0;
      auto bad = [&](std::int64_t cell) {
        if (match) first_bad = cell;
        match = false;
      };
      for (std::size_t k = center - 1; k <= center + 1; ++k)
        if (d.cells[k] != sys.zero) bad(-1);
      for (std::size_t k = center + 2; k < n; ++k) {
        const auto cell = static_cast<std::int64_t>((k - center - 2) / 3);
        const auto tag = static_cast<unsigned>((k - center - 2) % 3);
        auto it = tape.find(cell);
        const auto want = it == tape.end() ? sys.zero : meta.gamma0[g0_code(cell_index(m, it->second), tag)];
        if (d.cells[k] != want) bad(cell);
      }
      for (const auto& [cell, letter] : tape)
        if (cell < 0 || center + 2 + 3 * static_cast<std::size_t>(cell) + 2 >= n) bad(cell);
      r.step_matches[t] = match;
      if (!match && !r.first_mismatch) r.first_mismatch = {{t, first_bad}};
      r.steps_checked = t + 1;

      std::size_t lastnz = 0;
      for (std::size_t k = center; k < n; ++k)
        if (d.cells[k] != sys.zero) lastnz = k;
      if (lastnz != 0) r.min_margin = std::min(r.min_margin, n - 1 - lastnz);
    }
    if (n >= last) break;
    stream.advance();
  }

  r.verdict = scan_ultimately_zero(sys, last);
  const std::size_t budget = (last - dw) / 8 >= 1 ? (last - dw) / 8 - 1 : 0;
  r.run = run_classify(m, w, budget);
  r.resolved = r.run.suw_resolved();
  r.agreement = r.verdict.certified() == r.run.suw_accept();
  return r;
}

MetaEntries suw_meta_entries(const SuwMeta& meta) {
  MetaEntries e;
  e.emplace_back("kind", "suw");
  e.emplace_back("cell_letters", std::to_string(meta.cell_letters));
  e.emplace_back("seed_diagonal", std::to_string(meta.seed_diagonal));
  e.emplace_back("center_index", std::to_string(meta.center_index));
  e.emplace_back("windows", std::to_string(meta.windows));
  e.emplace_back("type7_rules", std::to_string(meta.type7_rules));
  for (std::size_t l = 0; l < meta.level_letters.size(); ++l)
    e.emplace_back("level_letters." + std::to_string(l), std::to_string(meta.level_letters[l]));
  for (std::size_t c = 1; c < meta.gamma0.size(); ++c)
    e.emplace_back("gamma0." + std::to_string(c), std::to_string(meta.gamma0[c]));
  for (std::size_t d = 2; d < meta.bootstrap.size(); ++d)
    for (std::size_t k = 1; k < meta.bootstrap[d].size(); ++k)
      e.emplace_back("bootstrap." + std::to_string(d) + "." + std::to_string(k), std::to_string(meta.bootstrap[d][k]));
  return e;
}

}  // namespace dblrec
