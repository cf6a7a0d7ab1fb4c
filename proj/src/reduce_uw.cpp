#include "dblrec/reduce_uw.hpp"

#include <algorithm>

#include "dblrec/error.hpp"
#include "dblrec/sim_trace.hpp"

namespace dblrec {

CellLetter uw_local_update(const TuringMachine& m, CellLetter x, CellLetter y, CellLetter z) {
  if (int(x.has_head()) + int(y.has_head()) + int(z.has_head()) > 1)
    throw TwoHeads("local window carries more than one head");
  if (y.has_head()) {
    if (*y.state == m.halt()) return y.symbol == kBlank ? CellLetter{} : y;
    const auto& t = m.delta(*y.state, y.symbol);
    if (t.move == Move::S) return {t.write, t.next};
    return {t.write, std::nullopt};
  }
  if (x.has_head() && *x.state != m.halt()) {
    const auto& t = m.delta(*x.state, x.symbol);
    if (t.move == Move::R) return {y.symbol, t.next};
  }
  if (z.has_head() && *z.state != m.halt()) {
    const auto& t = m.delta(*z.state, z.symbol);
    if (t.move == Move::L) return {y.symbol, t.next};
  }
  return y;
}

UwSystem compile_uw(const TuringMachine& m, std::span<const Symbol> w) {
  for (auto s : w)
    if (s == kBlank || s >= m.symbol_count()) throw FormatError("input word must be blank-free over the alphabet");

  SystemBuilder b;
  UwMeta meta;
  const std::size_t cells = cell_letter_count(m);
  meta.cell_letters = cells;

  meta.gamma0.assign(cells, b.zero());
  for (std::size_t i = 1; i < cells; ++i)
    meta.gamma0[i] = b.add("g:" + cell_name(m, cell_from_index(m, i)), {RoleKind::Type0});

  meta.pair.assign(cells * cells, b.zero());
  for (std::size_t u = 0; u < cells; ++u)
    for (std::size_t v = 0; v < cells; ++v)
      if (u != 0 || v != 0)
        meta.pair[u * cells + v] =
            b.add("p:" + cell_name(m, cell_from_index(m, u)) + "|" + cell_name(m, cell_from_index(m, v)),
                  LetterRole::pair(1));

  // Seeded configuration diagonal: 1 0 0 (blank,q0) w1 .. wn 0 0 1.
  const std::size_t dw = w.size() + 6;
  meta.seed_diagonal = dw;
  meta.cell0_index = 3;
  std::vector<LetterId> target(dw + 1, b.zero());
  target.front() = target.back() = b.one();
  target[3] = meta.gamma0[cell_index(m, {kBlank, m.start()})];
  for (std::size_t i = 0; i < w.size(); ++i) target[4 + i] = meta.gamma0[cell_index(m, {w[i], std::nullopt})];

  meta.bootstrap.assign(dw, {});
  for (std::size_t d = 2; d < dw; ++d) {
    meta.bootstrap[d].assign(d + 1, b.one());
    for (std::size_t k = 1; k < d; ++k)
      meta.bootstrap[d][k] = b.add("u:" + std::to_string(d) + "." + std::to_string(k), {RoleKind::Bootstrap});
  }
  auto bootstrap_cell = [&](std::size_t d, std::size_t k) -> LetterId {
    if (k == 0 || k == d) return b.one();
    return d == dw ? target[k] : meta.bootstrap[d][k];
  };
  for (std::size_t d = 2; d <= dw; ++d)
    for (std::size_t k = 1; k < d; ++k) b.define(bootstrap_cell(d - 1, k), bootstrap_cell(d - 1, k - 1), bootstrap_cell(d, k));

  // Walls read as zero for every simulation letter.
  for (LetterId x = 0; x < b.size(); ++x) {
    const auto kind = b.letter(x).role.kind;
    if (kind == RoleKind::Bootstrap || kind == RoleKind::One || kind == RoleKind::Bottom) continue;
    b.define(x, b.one(), b.zero());
    b.define(b.one(), x, b.zero());
  }

  // Type 0 -> type 1: f(x_k, x_{k-1}) = P(x_{k-1}, x_k).
  for (std::size_t u = 0; u < cells; ++u)
    for (std::size_t v = 0; v < cells; ++v) b.define(meta.gamma0[v], meta.gamma0[u], meta.pair[u * cells + v]);

  // Type 1 -> type 0: f(P(y,z), P(x,y)) = update(x, y, z).
  for (std::size_t x = 0; x < cells; ++x) {
    for (std::size_t y = 0; y < cells; ++y) {
      for (std::size_t z = 0; z < cells; ++z) {
        CellLetter next;
        try {
          next = uw_local_update(m, cell_from_index(m, x), cell_from_index(m, y), cell_from_index(m, z));
        } catch (const TwoHeads&) {
          continue;
        }
        b.define(meta.pair[y * cells + z], meta.pair[x * cells + y], meta.gamma0[cell_index(m, next)]);
      }
    }
  }

  UwSystem out{std::move(b).build(false), std::move(meta)};
  return out;
}

UwVerifyReport verify_uw(const UwSystem& compiled, const TuringMachine& m, std::span<const Symbol> w,
                         std::size_t steps, std::size_t last) {
  const auto& sys = compiled.system;
  const auto& meta = compiled.meta;
  const std::size_t dw = meta.seed_diagonal;
  if (last < dw + 2 * steps) throw Error("verify_uw needs at least dW + 2T diagonals");

  UwVerifyReport r;
  const auto expected = simulated_tapes(m, w, steps, SimMode::TwoWay);
  r.step_matches.assign(steps + 1, true);
  r.min_margin = last;

  auto expected_letter = [&](const SimTape& tape, std::int64_t cell) {
    auto it = tape.find(cell);
    return it == tape.end() ? sys.zero : meta.gamma0[cell_index(m, it->second)];
  };

  DiagonalStream stream(sys);
  for (;;) {
    const auto& d = stream.current();
    const std::size_t n = d.n;
    for (std::size_t k = 1; k + 1 <= n && k < n; ++k) {
      const auto c = d.cells[k];
      if (sys.bottom && c == *sys.bottom) r.bottom_free = false;
      if (n >= dw && c != sys.zero) {
        const auto kind = sys.letters[c].role.kind;
        const bool even = (n - dw) % 2 == 0;
        if (even ? kind != RoleKind::Type0 : kind != RoleKind::Pair) r.type_discipline = false;
      }
    }
    if (n >= dw && (n - dw) % 2 == 0 && (n - dw) / 2 <= steps) {
      const std::size_t t = (n - dw) / 2;
      const auto origin = static_cast<std::int64_t>(meta.cell0_index + t);
      bool match = true;
      std::int64_t first_bad = 0;
      for (std::size_t k = 1; k < n; ++k) {
        const auto cell = static_cast<std::int64_t>(k) - origin;
        if (d.cells[k] != expected_letter(expected[t], cell)) {
          if (match) first_bad = cell;
          match = false;
        }
      }
      for (const auto& [cell, letter] : expected[t]) {
        const auto k = cell + origin;
        if (k < 1 || k >= static_cast<std::int64_t>(n)) {
          if (match) first_bad = cell;
          match = false;
        }
      }
      r.step_matches[t] = match;
      if (!match && !r.first_mismatch) r.first_mismatch = {{t, first_bad}};
      r.steps_checked = t + 1;

      std::size_t first = 0, lastnz = 0;
      for (std::size_t k = 1; k < n; ++k) {
        if (d.cells[k] == sys.zero) continue;
        if (first == 0) first = k;
        lastnz = k;
      }
      if (first != 0) r.min_margin = std::min({r.min_margin, first - 1, n - 1 - lastnz});
    }
    if (n >= last) break;
    stream.advance();
  }
  r.margin_ok = r.min_margin >= 2;

  r.verdict = scan_ultimately_zero(sys, last);
  const std::size_t budget = (last - dw) / 2 >= 1 ? (last - dw) / 2 - 1 : 0;
  r.run = run_classify(m, w, budget);
  r.resolved = r.run.uw_resolved();
  r.agreement = r.verdict.certified() == r.run.uw_accept();
  return r;
}

MetaEntries uw_meta_entries(const UwMeta& meta) {
  MetaEntries e;
  e.emplace_back("kind", "uw");
  e.emplace_back("cell_letters", std::to_string(meta.cell_letters));
  e.emplace_back("seed_diagonal", std::to_string(meta.seed_diagonal));
  e.emplace_back("cell0_index", std::to_string(meta.cell0_index));
  for (std::size_t i = 0; i < meta.gamma0.size(); ++i) e.emplace_back("gamma0." + std::to_string(i), std::to_string(meta.gamma0[i]));
  for (std::size_t i = 0; i < meta.pair.size(); ++i)
    e.emplace_back("pair." + std::to_string(i / meta.cell_letters) + "." + std::to_string(i % meta.cell_letters),
                   std::to_string(meta.pair[i]));
  for (std::size_t d = 2; d < meta.bootstrap.size(); ++d)
    for (std::size_t k = 1; k < d; ++k)
      e.emplace_back("bootstrap." + std::to_string(d) + "." + std::to_string(k), std::to_string(meta.bootstrap[d][k]));
  return e;
}

UwMeta uw_meta_from_entries(const MetaEntries& entries) {
  UwMeta meta;
  auto num = [](const std::string& s) { return static_cast<std::size_t>(std::stoull(s)); };
  auto field = [](const std::string& key, std::size_t n) {
    std::vector<std::size_t> parts;
    std::size_t pos = key.find('.');
    while (pos != std::string::npos) {
      auto next = key.find('.', pos + 1);
      parts.push_back(std::stoull(key.substr(pos + 1, next == std::string::npos ? next : next - pos - 1)));
      pos = next;
    }
    if (parts.size() != n) throw FormatError("malformed meta key '" + key + "'");
    return parts;
  };
  bool kind_ok = false;
  for (const auto& [k, v] : entries) {
    if (k == "kind") kind_ok = v == "uw";
    else if (k == "cell_letters") meta.cell_letters = num(v);
    else if (k == "seed_diagonal") meta.seed_diagonal = num(v);
    else if (k == "cell0_index") meta.cell0_index = num(v);
  }
  if (!kind_ok || meta.cell_letters == 0 || meta.seed_diagonal < 6) throw FormatError("not a UW meta sidecar");
  const auto cells = meta.cell_letters;
  meta.gamma0.assign(cells, 0);
  meta.pair.assign(cells * cells, 0);
  meta.bootstrap.assign(meta.seed_diagonal, {});
  for (std::size_t d = 2; d < meta.seed_diagonal; ++d) meta.bootstrap[d].assign(d + 1, 0);
  for (const auto& [k, v] : entries) {
    if (k.starts_with("gamma0.")) {
      auto p = field(k, 1);
      if (p[0] >= cells) throw FormatError("meta index out of range: " + k);
      meta.gamma0[p[0]] = static_cast<LetterId>(num(v));
    } else if (k.starts_with("pair.")) {
      auto p = field(k, 2);
      if (p[0] >= cells || p[1] >= cells) throw FormatError("meta index out of range: " + k);
      meta.pair[p[0] * cells + p[1]] = static_cast<LetterId>(num(v));
    } else if (k.starts_with("bootstrap.")) {
      auto p = field(k, 2);
      if (p[0] < 2 || p[0] >= meta.seed_diagonal || p[1] == 0 || p[1] >= p[0]) throw FormatError("meta index out of range: " + k);
      meta.bootstrap[p[0]][p[1]] = static_cast<LetterId>(num(v));
    }
  }
  return meta;
}

}  // namespace dblrec
