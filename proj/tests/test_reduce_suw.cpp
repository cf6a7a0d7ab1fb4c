#include <doctest.h>

#include <random>
#include <set>

#include "dblrec/error.hpp"
#include "dblrec/reduce_suw.hpp"
#include "dblrec/reduce_uw.hpp"
#include "support.hpp"

using namespace dblrec;

namespace {

const std::vector<Symbol> kEmpty;

// A run of tagged letters cut from a known tape layout, with the letter the
// next configuration must show at each position (when the layout determines it).
struct Layout {
  Word letters;
  std::vector<std::optional<G0Code>> next;
};

G0Code expected_code(const TuringMachine& m, std::size_t left, std::size_t mid, std::size_t right, unsigned tag) {
  const auto c = uw_local_update(m, cell_from_index(m, left), cell_from_index(m, mid), cell_from_index(m, right));
  const auto idx = cell_index(m, c);
  return idx == 0 ? 0 : g0_code(idx, tag);
}

// Consecutive cells read left to right.
Layout tape_layout(const TuringMachine& m, const std::vector<std::size_t>& cells) {
  Layout l;
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (unsigned tag = 0; tag < 3; ++tag) {
      l.letters.push_back(encode_cell(cells[i])[tag]);
      if (i == 0 || i + 1 == cells.size()) l.next.push_back(std::nullopt);
      else l.next.push_back(expected_code(m, cells[i - 1], cells[i], cells[i + 1], tag));
    }
  return l;
}

// Mirror of the cells around the central 000; cells[0] is tape cell 0, which
// has no left neighbour on the tape.
Layout central_layout(const TuringMachine& m, const std::vector<std::size_t>& cells) {
  Layout right;
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (unsigned tag = 0; tag < 3; ++tag) {
      right.letters.push_back(encode_cell(cells[i])[tag]);
      if (i + 1 == cells.size()) right.next.push_back(std::nullopt);
      else right.next.push_back(expected_code(m, i == 0 ? 0 : cells[i - 1], cells[i], cells[i + 1], tag));
    }
  Layout l;
  l.letters.assign(right.letters.rbegin(), right.letters.rend());
  l.next.assign(right.next.rbegin(), right.next.rend());
  for (int i = 0; i < 3; ++i) {
    l.letters.push_back(0);
    l.next.push_back(G0Code{0});
  }
  l.letters.insert(l.letters.end(), right.letters.begin(), right.letters.end());
  l.next.insert(l.next.end(), right.next.begin(), right.next.end());
  return l;
}

Layout reversed(const Layout& l) {
  return {Word(l.letters.rbegin(), l.letters.rend()), {l.next.rbegin(), l.next.rend()}};
}

// Checks every 9-window of the layout whose centre is determined.
std::size_t check_layout(const TuringMachine& m, const Layout& l) {
  std::size_t checked = 0;
  for (std::size_t off = 0; off + 9 <= l.letters.size(); ++off) {
    if (!l.next[off + 4]) continue;
    const std::span<const G0Code> w(l.letters.data() + off, 9);
    const auto got = suw_window_update(m, w);
    if (got != *l.next[off + 4]) {
      std::string text;
      for (auto c : w) text += g0_name(m, c) + " ";
      FAIL_CHECK("window " << text << "gave " << g0_name(m, got) << " expected " << g0_name(m, *l.next[off + 4]));
    }
    ++checked;
  }
  return checked;
}

std::size_t count_heads(const TuringMachine& m, const std::vector<std::size_t>& cells) {
  std::size_t h = 0;
  for (auto c : cells) h += cell_from_index(m, c).has_head();
  return h;
}

void exhaustive_window_oracle(const TuringMachine& m) {
  const std::size_t n = cell_letter_count(m);
  std::size_t checked = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
          const std::vector<std::size_t> cells{a, b, c, d};
          if (count_heads(m, cells) > 1) continue;
          const auto l = tape_layout(m, cells);
          checked += check_layout(m, l) + check_layout(m, reversed(l));
        }
        const std::vector<std::size_t> cells{a, b, c};
        if (count_heads(m, cells) > 1) continue;
        checked += check_layout(m, central_layout(m, cells));
      }
  CHECK(checked > 0);
}

}  // namespace

TEST_CASE("window update against layouts with known cells") {
  for (const auto& name : testing::sample_names()) {
    CAPTURE(name);
    exhaustive_window_oracle(testing::sample(name));
  }
  std::mt19937_64 rng(41);
  for (int i = 0; i < 3; ++i) exhaustive_window_oracle(random_machine(rng, 2, 3));
}

TEST_CASE("window update: worked cases") {
  const auto m = testing::machine_from(
      "alphabet: _ a e\nstates: q r qs\nstart: q\nhalt: qs\n"
      "rule: q _ -> qs _ S\nrule: q a -> r e R\nrule: q e -> qs e S\n"
      "rule: r _ -> qs _ S\nrule: r a -> qs a S\nrule: r e -> qs e S\n");
  const auto c = cell_index(m, {1, std::nullopt});
  const auto e = encode_cell(c);
  CHECK(suw_window_update(m, Word{0, 0, 0, e[0], e[1], e[2], 0, 0, 0}) == e[1]);
  CHECK(suw_window_update(m, Word(9, 0)) == 0);

  // head at cell 0 reading a, writing e and moving right: cell 0 becomes e
  const auto delta = encode_cell(cell_index(m, {1, State{0}}));
  const auto after = encode_cell(cell_index(m, {2, std::nullopt}));
  const Word central{delta[2], delta[1], delta[0], 0, 0, 0, delta[0], delta[1], delta[2]};
  CHECK(suw_window_update(m, central) == 0);  // centre of the separator
  const Word mirrored{delta[2], delta[1], delta[0], 0, 0, 0, delta[0], delta[1], delta[2], 0, 0, 0};
  for (std::size_t off = 0; off + 9 <= mirrored.size(); ++off) {
    const std::span<const G0Code> w(mirrored.data() + off, 9);
    const auto pos = off + 4;
    if (pos >= 6 && pos <= 8) CHECK(suw_window_update(m, w) == after[pos - 6]);
  }

  // halted head on blank: the triple disappears
  const auto halt = encode_cell(cell_index(m, {0, m.halt()}));
  CHECK(suw_window_update(m, Word{0, 0, 0, halt[0], halt[1], halt[2], 0, 0, 0}) == 0);

  CHECK_THROWS_AS(suw_window_update(m, Word{0, 0, 0, e[1], e[0], e[2], 0, 0, 0}), TagInconsistency);
  CHECK_THROWS_AS(suw_window_update(m, Word{0, 0, 0, e[0], e[1], 0, 0, 0, 0}), TagInconsistency);
}

TEST_CASE("keeping the original letter on a left move at cell 0 is not a local rule") {
  // (_, q0) writes a and moves left. Around tape cell 0 the window centred on
  // its last letter reads 0 0 | d d' d'' | x x' x'' | y; the same window
  // arises for a head on any cell whose left neighbour is blank.
  const auto m = testing::machine_from(
      "alphabet: _ a\nstates: q0 qs\nstart: q0\nhalt: qs\nrule: q0 _ -> qs a L\nrule: q0 a -> qs a L\n");
  const auto head = cell_index(m, {0, State{0}});
  const auto x = cell_index(m, {1, std::nullopt});
  const auto at_cell0 = central_layout(m, {head, x, x});
  const auto inside = tape_layout(m, {0, head, x, x});
  const Word w0(at_cell0.letters.begin() + 10, at_cell0.letters.begin() + 19);
  const Word w1(inside.letters.begin() + 1, inside.letters.begin() + 10);
  REQUIRE(w0 == w1);
  // inside the tape the written symbol must appear; the only local rule is to write it at cell 0 too
  const auto written = g0_code(cell_index(m, {1, std::nullopt}), 2);
  CHECK(suw_window_update(m, w1) == written);
  CHECK(written != 0);  // the original letter (blank) would have given 0
}

TEST_CASE("seeded diagonal is the mirrored initial configuration") {
  const auto m = testing::sample("dirty");
  const auto c = compile_suw(m, kEmpty);
  CHECK(c.meta.seed_diagonal == 28);
  CHECK(c.meta.center_index == 14);
  const auto ds = develop(c.system, 28);
  const auto& d = ds[28].cells;
  REQUIRE(d.size() == 29);
  const auto delta = encode_cell(cell_index(m, {0, m.start()}));
  std::vector<LetterId> want(29, c.system.zero);
  want.front() = want.back() = c.system.one;
  for (int t = 0; t < 3; ++t) {
    want[12 - t] = c.meta.gamma0[delta[t]];
    want[16 + t] = c.meta.gamma0[delta[t]];
  }
  CHECK(d == want);
  CHECK(std::equal(d.begin(), d.end(), d.rbegin()));

  const std::vector<Symbol> w{1, 1, 1};
  CHECK(suw_seed_word(m, w).size() + 1 == 28 + 6 * w.size());
  const auto seed = suw_seed_word(m, w);
  CHECK(sigma(seed) == seed);
}

TEST_CASE("compiled tables are symmetric on every pair") {
  const auto m = testing::sample("clean");
  const auto c = compile_suw(m, std::vector<Symbol>{1});
  CHECK(c.system.symmetric);
  CHECK(table_symmetric(c.system));
  const auto n = static_cast<LetterId>(c.system.size());
  std::size_t asym = 0;
  for (LetterId a = 0; a < n; ++a)
    for (LetterId b = a + 1; b < n; ++b) asym += c.system.rule(a, b) != c.system.rule(b, a);
  CHECK(asym == 0);
  CHECK(c.meta.type7_rules > 0);
  CHECK(c.meta.level_letters[7] > 0);
  // three disjoint tagged copies per non-blank cell letter
  std::set<LetterId> copies(c.meta.gamma0.begin() + 1, c.meta.gamma0.end());
  CHECK(copies.size() == 3 * (c.meta.cell_letters - 1));
  CHECK_FALSE(copies.count(c.system.zero));
}

TEST_CASE("sample machines on the symmetric construction") {
  struct Expect {
    std::string name;
    bool certified;
  };
  for (const auto& [name, certified] :
       {Expect{"clean", true}, {"negclean", true}, {"dirty", false}, {"right", false}, {"negdirty", false}}) {
    CAPTURE(name);
    const auto m = testing::sample(name);
    const auto c = compile_suw(m, kEmpty);
    const auto r = verify_suw(c, m, kEmpty, 40, 400);
    CHECK(r.all_match());
    CHECK(r.symmetric);
    CHECK(r.bottom_free);
    CHECK(r.type_discipline);
    CHECK(r.min_margin >= 9);
    CHECK(r.verdict.certified() == certified);
    if (!certified) CHECK(r.verdict.kind == VerdictKind::NotZeroWithin);
    CHECK(r.run.suw_accept() == certified);
    if (r.resolved) CHECK(r.agreement);
    CHECK(r.ok());
  }
  const auto neg = testing::sample("negclean");
  const auto r = verify_suw(compile_suw(neg, kEmpty), neg, kEmpty, 2, 28 + 40);
  CHECK(r.verdict.certified());
  CHECK(r.verdict.diagonal == 28 + 8);
}

TEST_CASE("type-0 diagonals grow by eight per step") {
  const auto m = testing::sample("right");
  const auto c = compile_suw(m, kEmpty);
  CHECK(c.meta.diagonal_type(28) == 0);
  CHECK(c.meta.diagonal_type(36) == 0);
  CHECK(c.meta.diagonal_type(43) == 7);
  const auto ds = develop(c.system, 28 + 8 * 6);
  for (std::size_t t = 0; t <= 6; ++t) {
    const auto& d = ds[28 + 8 * t];
    CHECK(d.cells.size() == 29 + 8 * t);
    for (auto l : d.cells)
      if (l != c.system.zero && l != c.system.one) CHECK(c.system.letters[l].role.kind == RoleKind::Type0);
  }
}

TEST_CASE("property: random machines on the symmetric construction") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = random_machine(rng, 2 + rng() % 2, 2 + rng() % 3);
    const auto w = testing::random_word(rng, m, 3);
    CAPTURE(m.to_text());
    const auto c = compile_suw(m, w);
    const std::size_t steps = 25;
    const auto r = verify_suw(c, m, w, steps, c.meta.seed_diagonal + 8 * steps + 16);
    REQUIRE(r.all_match());
    CHECK(r.symmetric);
    CHECK(r.bottom_free);
    CHECK(r.type_discipline);
    if (r.resolved) CHECK(r.agreement);
  }
}

TEST_CASE("symmetric meta sidecar and errors") {
  const auto m = testing::sample("dirty");
  const auto c = compile_suw(m, kEmpty);
  const auto e = suw_meta_entries(c.meta);
  REQUIRE_FALSE(e.empty());
  CHECK(e.front() == std::pair<std::string, std::string>{"kind", "suw"});
  CHECK_THROWS_AS(verify_suw(c, m, kEmpty, 10, 40), Error);
  CHECK_THROWS_AS(compile_suw(m, std::vector<Symbol>{0}), FormatError);
}
