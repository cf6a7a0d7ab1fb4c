#include "dblrec/dynsys.hpp"

#include <algorithm>
#include <unordered_set>

#include "dblrec/develop.hpp"
#include "dblrec/error.hpp"

namespace dblrec {

std::string role_name(LetterRole role) {
  switch (role.kind) {
    case RoleKind::One: return "one";
    case RoleKind::Zero: return "zero";
    case RoleKind::Bottom: return "bottom";
    case RoleKind::Bootstrap: return "bootstrap";
    case RoleKind::Type0: return "type0";
    case RoleKind::Pair: return "pair" + std::to_string(role.level);
  }
  return "type0";
}

std::optional<LetterRole> parse_role(const std::string& text) {
  if (text == "one") return LetterRole{RoleKind::One};
  if (text == "zero") return LetterRole{RoleKind::Zero};
  if (text == "bottom") return LetterRole{RoleKind::Bottom};
  if (text == "bootstrap") return LetterRole{RoleKind::Bootstrap};
  if (text == "type0") return LetterRole{RoleKind::Type0};
  if (text.starts_with("pair") && text.size() > 4) {
    int level = 0;
    for (char c : text.substr(4)) {
      if (c < '0' || c > '9') return std::nullopt;
      level = level * 10 + (c - '0');
    }
    return LetterRole::pair(level);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

RuleTable::RuleTable(std::size_t size, std::optional<LetterId> fallback)
    : size_(size), fallback_(fallback) {}

void RuleTable::set_fallback(std::optional<LetterId> fallback) {
  fallback_ = fallback;
  dense_.clear();
}

void RuleTable::resize(std::size_t size) {
  size_ = size;
  dense_.clear();
}

std::optional<LetterId> RuleTable::defined(LetterId a, LetterId b) const {
  auto it = entries_.find(key(a, b));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void RuleTable::define(LetterId a, LetterId b, LetterId c) {
  entries_[key(a, b)] = c;
  dense_.clear();
}

bool RuleTable::total() const { return fallback_.has_value() || entries_.size() == size_ * size_; }

void RuleTable::compact() {
  dense_.clear();
  if (size_ == 0 || size_ > kDenseLimit || !total()) return;
  std::vector<LetterId> dense(size_ * size_, fallback_.value_or(0));
  for (const auto& [k, v] : entries_) dense[static_cast<std::size_t>(k >> 32) * size_ + (k & 0xffffffffu)] = v;
  dense_ = std::move(dense);
}

std::optional<LetterId> DynamicalSystem::find(const std::string& name) const {
  for (const auto& l : letters)
    if (l.name == name) return l.id;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

SystemBuilder::SystemBuilder() {
  one_ = add("1", {RoleKind::One});
  zero_ = add("0", {RoleKind::Zero});
  bottom_ = add("_bot", {RoleKind::Bottom});
}

LetterId SystemBuilder::add(std::string name, LetterRole role) {
  auto id = static_cast<LetterId>(letters_.size());
  letters_.push_back({id, std::move(name), role});
  return id;
}

void SystemBuilder::define(LetterId north, LetterId west, LetterId image) {
  auto key = (std::uint64_t{north} << 32) | west;
  auto [it, inserted] = rules_.emplace(key, image);
  if (!inserted && it->second != image) throw ConflictingRule(north, west, it->second, image);
}

void SystemBuilder::define_symmetric(LetterId a, LetterId b, LetterId image) {
  define(a, b, image);
  if (a != b) define(b, a, image);
}

std::optional<LetterId> SystemBuilder::defined(LetterId a, LetterId b) const {
  auto it = rules_.find((std::uint64_t{a} << 32) | b);
  if (it == rules_.end()) return std::nullopt;
  return it->second;
}

DynamicalSystem SystemBuilder::build(bool symmetric) && {
  DynamicalSystem sys;
  sys.letters = std::move(letters_);
  sys.one = one_;
  sys.zero = zero_;
  sys.bottom = bottom_;
  sys.symmetric = symmetric;
  sys.table = RuleTable(sys.letters.size(), bottom_);
  for (const auto& [k, v] : rules_) sys.table.define(static_cast<LetterId>(k >> 32), static_cast<LetterId>(k), v);
  rules_.clear();
  sys.table.compact();
  return sys;
}

// ---------------------------------------------------------------------------

void check_structure(const DynamicalSystem& sys) {
  const auto n = sys.size();
  if (sys.table.size() != n) throw FormatError("rule table size differs from letter count");
  std::unordered_set<std::string> names;
  std::size_t ones = 0, zeros = 0, bottoms = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& l = sys.letters[i];
    if (l.id != i) throw FormatError("letter ids are not contiguous at " + std::to_string(i));
    if (!names.insert(l.name).second) throw FormatError("duplicate letter name '" + l.name + "'");
    ones += l.role.kind == RoleKind::One;
    zeros += l.role.kind == RoleKind::Zero;
    bottoms += l.role.kind == RoleKind::Bottom;
  }
  if (ones != 1 || zeros != 1 || bottoms > 1) throw FormatError("need exactly one 'one', one 'zero', at most one 'bottom'");
  auto in_range = [n](LetterId id) { return id < n; };
  if (!in_range(sys.one) || !in_range(sys.zero)) throw FormatError("one/zero id out of range");
  if (sys.one == sys.zero) throw FormatError("one and zero must differ");
  if (sys.letters[sys.one].role.kind != RoleKind::One || sys.letters[sys.zero].role.kind != RoleKind::Zero)
    throw FormatError("one/zero declarations disagree with letter roles");
  if (sys.bottom) {
    if (!in_range(*sys.bottom) || *sys.bottom == sys.one || *sys.bottom == sys.zero)
      throw FormatError("bottom must be a third letter");
    if (sys.letters[*sys.bottom].role.kind != RoleKind::Bottom) throw FormatError("bottom declaration disagrees with role");
  } else if (bottoms != 0) {
    throw FormatError("letter with role bottom but no bottom declaration");
  }
  if (auto fb = sys.table.fallback(); fb && !in_range(*fb)) throw FormatError("fallback letter out of range");
  sys.table.for_each_defined([&](LetterId a, LetterId b, LetterId c) {
    if (!in_range(a) || !in_range(b) || !in_range(c))
      throw FormatError("dangling id in rule (" + std::to_string(a) + "," + std::to_string(b) + ")");
  });
}

bool table_symmetric(const DynamicalSystem& sys, std::pair<LetterId, LetterId>* witness) {
  // Any asymmetric pair has at least one explicitly defined side.
  bool ok = true;
  sys.table.for_each_defined([&](LetterId a, LetterId b, LetterId c) {
    if (!ok) return;
    auto other = sys.table.defined(b, a);
    LetterId mirrored = other ? *other : sys.table.fallback().value_or(c + 1);
    if (mirrored != c) {
      ok = false;
      if (witness) *witness = {a, b};
    }
  });
  return ok;
}

ValidationReport validate_system(const DynamicalSystem& sys, std::size_t probe) {
  check_structure(sys);
  ValidationReport r;
  r.total = sys.table.total();
  r.defined_pairs = sys.table.defined_count();
  r.declared_symmetric = sys.symmetric;
  std::pair<LetterId, LetterId> witness;
  r.actually_symmetric = table_symmetric(sys, &witness);
  if (!r.actually_symmetric) r.asymmetric_pair = witness;
  if (!r.total) return r;
  r.zero_fixed = sys.rule(sys.zero, sys.zero) == sys.zero;

  DiagonalStream stream(sys);
  r.probe_diagonals = probe;
  for (;;) {
    const auto& d = stream.current();
    for (std::size_t k = 0; k <= d.n; ++k) {
      const auto c = d.cells[k];
      if (sys.bottom && c == *sys.bottom && !r.bottom_at) r.bottom_at = {{d.n, k}};
      if (c == sys.one && k != 0 && k != d.n && !r.one_inside) r.one_inside = {{d.n, k}};
    }
    if (d.n >= probe || (r.bottom_at && r.one_inside)) break;
    stream.advance();
  }
  return r;
}

DynamicalSystem restrict_to(const DynamicalSystem& sys, std::span<const LetterId> keep) {
  std::vector<LetterId> order(keep.begin(), keep.end());
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  if (!std::binary_search(order.begin(), order.end(), sys.zero) || !std::binary_search(order.begin(), order.end(), sys.one))
    throw Error("restriction must keep zero and one");
  std::vector<std::optional<LetterId>> remap(sys.size());
  DynamicalSystem out;
  for (auto id : order) {
    if (sys.bottom && id == *sys.bottom) continue;
    auto nid = static_cast<LetterId>(out.letters.size());
    remap[id] = nid;
    out.letters.push_back({nid, sys.letters[id].name, sys.letters[id].role});
  }
  out.one = *remap[sys.one];
  out.zero = *remap[sys.zero];
  out.symmetric = sys.symmetric;
  out.table = RuleTable(out.letters.size());
  for (auto a : order) {
    if (!remap[a]) continue;
    for (auto b : order) {
      if (!remap[b]) continue;
      auto img = sys.rule(a, b);
      out.table.define(*remap[a], *remap[b], remap[img] ? *remap[img] : out.zero);
    }
  }
  out.table.compact();
  return out;
}

}  // namespace dblrec
