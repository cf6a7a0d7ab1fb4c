#include "dblrec/symcode.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "dblrec/error.hpp"

namespace dblrec {

std::array<G0Code, 3> encode_cell(std::size_t cell) {
  if (cell == 0) return {0, 0, 0};
  return {g0_code(cell, 0), g0_code(cell, 1), g0_code(cell, 2)};
}

std::string g0_name(const TuringMachine& m, G0Code c) {
  if (c == 0) return "0";
  static constexpr const char* primes[] = {"", "'", "''"};
  return cell_name(m, cell_from_index(m, g0_cell(c))) + primes[g0_tag(c)];
}

Word sigma(std::span<const G0Code> w) { return Word(w.rbegin(), w.rend()); }

// ---------------------------------------------------------------------------

TermInterner::TermInterner() : zero_words_(kMaxLevel + 1) {
  terms_.push_back(Term{});  // kZeroTerm
  leaves_.emplace(0, kZeroTerm);
}

TermId TermInterner::leaf(G0Code letter) {
  auto [it, inserted] = leaves_.emplace(letter, static_cast<TermId>(terms_.size()));
  if (inserted) terms_.push_back(Term{0, kZeroTerm, kZeroTerm, letter});
  return it->second;
}

TermId TermInterner::upair(TermId a, TermId b) {
  if (a == kZeroTerm && b == kZeroTerm) return kZeroTerm;
  const int la = terms_[a].level, lb = terms_[b].level;
  if (la >= 0 && lb >= 0 && la != lb)
    throw LevelMismatch("unordered pair of levels " + std::to_string(la) + " and " + std::to_string(lb));
  const int level = std::max(la, lb) + 1;
  if (level > kMaxLevel) throw LevelMismatch("code level above " + std::to_string(kMaxLevel));
  if (a > b) std::swap(a, b);
  auto [it, inserted] = pairs_.emplace(key(a, b), static_cast<TermId>(terms_.size()));
  if (inserted) terms_.push_back(Term{level, a, b, 0});
  return it->second;
}

std::optional<TermId> TermInterner::find_pair(TermId a, TermId b) const {
  if (a == kZeroTerm && b == kZeroTerm) return kZeroTerm;
  if (a > b) std::swap(a, b);
  auto it = pairs_.find(key(a, b));
  if (it == pairs_.end()) return std::nullopt;
  return it->second;
}

std::size_t TermInterner::count_at_level(int level) const {
  return static_cast<std::size_t>(std::count_if(terms_.begin(), terms_.end(), [level](const Term& t) { return t.level == level; }));
}

const std::vector<Word>& TermInterner::decode(TermId t, int level) const {
  if (level < 0 || level > kMaxLevel) throw LevelMismatch("decode level out of range");
  if (t == kZeroTerm) {
    auto& z = zero_words_[level];
    if (z.empty()) z.push_back(Word(level + 1, 0));
    return z;
  }
  const auto& term = terms_[t];
  if (term.level != level) throw LevelMismatch("decode at the wrong level");
  if (auto it = decoded_.find(t); it != decoded_.end()) return it->second;

  std::vector<Word> out;
  if (level == 0) {
    out.push_back(Word{term.letter});
  } else {
    const auto& xs = decode(term.first, level - 1);
    const auto& ys = decode(term.second, level - 1);
    std::set<Word> found;
    auto join = [&](const Word& head, const Word& tail) {
      // head covers positions 0..level-1, tail covers 1..level
      if (!std::equal(head.begin() + 1, head.end(), tail.begin())) return;
      Word w = head;
      w.push_back(tail.back());
      found.insert(std::move(w));
    };
    for (const auto& x : xs)
      for (const auto& y : ys) {
        join(x, y);
        join(y, x);
      }
    out.assign(found.begin(), found.end());
  }
  return decoded_.emplace(t, std::move(out)).first->second;
}

std::vector<TermId> leaves(TermInterner& in, std::span<const G0Code> w) {
  std::vector<TermId> out;
  out.reserve(w.size());
  for (auto c : w) out.push_back(in.leaf(c));
  return out;
}

std::vector<TermId> pi_level(TermInterner& in, std::span<const TermId> w) {
  if (w.size() < 2) throw LevelMismatch("pi_level needs at least two letters");
  std::vector<TermId> out;
  out.reserve(w.size() - 1);
  for (std::size_t k = 0; k + 1 < w.size(); ++k) out.push_back(in.upair(w[k], w[k + 1]));
  return out;
}

CodeLevels pi_levels(TermInterner& in, std::span<const G0Code> w) {
  CodeLevels c;
  c.levels.push_back(leaves(in, w));
  while (c.levels.back().size() > 1) c.levels.push_back(pi_level(in, c.levels.back()));
  return c;
}

TermId pi8(TermInterner& in, std::span<const G0Code> w) {
  if (w.size() != 8) throw LevelMismatch("pi8 takes exactly 8 letters");
  std::array<TermId, 8> buf;
  for (std::size_t k = 0; k < 8; ++k) buf[k] = in.leaf(w[k]);
  for (std::size_t len = 8; len > 1; --len)
    for (std::size_t k = 0; k + 1 < len; ++k) buf[k] = in.upair(buf[k], buf[k + 1]);
  return buf[0];
}

// ---------------------------------------------------------------------------

std::vector<Word> WindowSets::all() const {
  std::vector<Word> u(generic);
  u.insert(u.end(), central.begin(), central.end());
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  return u;
}

WindowSets enum_windows(std::size_t symbols, std::size_t states) {
  WindowSets ws;
  const std::size_t cells = symbols * (1 + states);
  ws.cell_letters = cells;
  for (std::size_t a = 0; a < cells; ++a)
    for (std::size_t b = 0; b < cells; ++b)
      for (std::size_t c = 0; c < cells; ++c)
        for (std::size_t d = 0; d < cells; ++d) {
          Word pattern;
          for (auto x : {a, b, c, d})
            for (auto l : encode_cell(x)) pattern.push_back(l);
          for (std::size_t off = 0; off + 8 <= pattern.size(); ++off)
            ws.generic.emplace_back(pattern.begin() + off, pattern.begin() + off + 8);
        }
  for (std::size_t a = 0; a < cells; ++a)
    for (std::size_t b = 0; b < cells; ++b) {
      const auto ea = encode_cell(a);
      const auto eb = encode_cell(b);
      Word pattern{eb[0], ea[2], ea[1], ea[0], 0, 0, 0, ea[0], ea[1], ea[2], eb[0]};
      for (std::size_t off = 0; off + 8 <= pattern.size(); ++off)
        ws.central.emplace_back(pattern.begin() + off, pattern.begin() + off + 8);
    }
  for (auto* v : {&ws.generic, &ws.central}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  return ws;
}

namespace {

std::size_t level_violations(const CodeLevels& c) {
  std::size_t bad = 0;
  for (const auto& lvl : c.levels)
    for (std::size_t k = 0; k + 1 < lvl.size(); ++k)
      if (lvl[k] == lvl[k + 1] && lvl[k] != kZeroTerm) ++bad;
  return bad;
}

}  // namespace

SymcodReport check_symcod(std::size_t symbols, std::size_t states, bool wide) {
  const auto t0 = std::chrono::steady_clock::now();
  SymcodReport r;
  const auto ws = enum_windows(symbols, states);
  r.generic_count = ws.generic.size();
  r.central_count = ws.central.size();

  TermInterner in;
  std::map<TermId, std::vector<Word>> groups;
  for (const auto& v : ws.generic) {
    auto levels = pi_levels(in, v);
    r.generic_level_violations += level_violations(levels) != 0;
    groups[levels.code()].push_back(v);
  }
  for (const auto& v : ws.central) {
    auto levels = pi_levels(in, v);
    r.central_level_exceptions += level_violations(levels) != 0;
    groups[levels.code()].push_back(v);
  }
  for (auto& [code, members] : groups) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    r.union_count += members.size();
    ++r.classes;
    const Word& v = members.front();
    const Word rv = sigma(v);
    for (std::size_t i = 1; i < members.size(); ++i) {
      if (members[i] == rv) continue;
      ++r.collision_count;
      if (r.collisions.size() < 16) r.collisions.emplace_back(v, members[i]);
    }
    if (v == rv) ++r.palindromic_classes;
    else if (members.size() == 2 && members[1] == rv) ++r.pair_classes;
    if (wide) {
      const auto& pre = in.decode(code, kMaxLevel);
      for (const auto& w : pre)
        if (w != v && w != rv) ++r.wide_extra_preimages;
    }
  }
  r.wide_checked = wide;

  // cc'c''cc'c''cc' with c the first non-blank plain symbol.
  if (symbols >= 2) {
    const std::size_t c = 1 + states;  // cell index of symbol 1 without head
    const auto e = encode_cell(c);
    const Word worst{e[0], e[1], e[2], e[0], e[1], e[2], e[0], e[1]};
    const auto code = pi8(in, worst);
    auto it = groups.find(code);
    r.worst_case_ok = it != groups.end();
    if (r.worst_case_ok)
      for (const auto& m : it->second) r.worst_case_ok = r.worst_case_ok && (m == worst || m == sigma(worst));
  }
  r.terms = in.size();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

DoubledControl doubled_control(std::size_t symbols, std::size_t states) {
  DoubledControl out;
  const std::size_t cells = symbols * (1 + states);
  auto doubled = [](std::size_t cell) -> std::array<G0Code, 2> {
    if (cell == 0) return {0, 0};
    return {g0_code(cell, 0), g0_code(cell, 1)};
  };
  TermInterner in;
  std::map<std::vector<TermId>, std::vector<Word>> groups;
  for (std::size_t a = 0; a < cells; ++a)
    for (std::size_t b = 0; b < cells; ++b) {
      const auto da = doubled(a), db = doubled(b);
      const Word pattern{da[0], da[1], db[0], db[1]};
      for (std::size_t off = 0; off + 3 <= pattern.size(); ++off) {
        Word w(pattern.begin() + off, pattern.begin() + off + 3);
        auto lv = leaves(in, w);
        groups[pi_level(in, lv)].push_back(std::move(w));
      }
    }
  for (auto& [code, members] : groups) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    out.windows += members.size();
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (members[j] == sigma(members[i])) continue;
        const auto& u = members[i];
        const auto& v = members[j];
        if (u[0] == u[2] && v[0] == v[2] && u[0] == v[1] && v[0] == u[1]) out.aba_bab = true;
        out.collisions.emplace_back(u, v);
      }
  }
  return out;
}

}  // namespace dblrec
