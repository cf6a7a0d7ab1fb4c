#pragma once

// Dynamical systems with double recursion: a finite alphabet, a total binary
// rule table, and the distinguished start (one) and white (zero) letters.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dblrec {

using LetterId = std::uint32_t;

enum class RoleKind : std::uint8_t { One, Zero, Bottom, Bootstrap, Type0, Pair };

struct LetterRole {
  RoleKind kind = RoleKind::Type0;
  int level = 0;  // pair level, only meaningful for RoleKind::Pair

  static LetterRole pair(int level) { return {RoleKind::Pair, level}; }
  friend bool operator==(const LetterRole&, const LetterRole&) = default;
};

std::string role_name(LetterRole role);
std::optional<LetterRole> parse_role(const std::string& text);

struct Letter {
  LetterId id = 0;
  std::string name;
  LetterRole role;
};

/// Binary rule table over letter ids. Pairs are either explicitly defined or
/// fall back to a default letter (the absorbing Bottom for compiled systems).
/// Small alphabets are mirrored into a dense array by compact().
class RuleTable {
 public:
  RuleTable() = default;
  explicit RuleTable(std::size_t size, std::optional<LetterId> fallback = std::nullopt);

  std::size_t size() const { return size_; }
  std::optional<LetterId> fallback() const { return fallback_; }
  void set_fallback(std::optional<LetterId> fallback);
  void resize(std::size_t size);

  /// Image of (north, west). Requires the pair to be defined or a fallback.
  LetterId at(LetterId north, LetterId west) const {
    if (!dense_.empty()) return dense_[static_cast<std::size_t>(north) * size_ + west];
    auto it = entries_.find(key(north, west));
    return it != entries_.end() ? it->second : *fallback_;
  }

  std::optional<LetterId> defined(LetterId a, LetterId b) const;
  bool is_defined(LetterId a, LetterId b) const { return defined(a, b).has_value(); }
  void define(LetterId a, LetterId b, LetterId c);

  std::size_t defined_count() const { return entries_.size(); }
  bool total() const;

  template <class F>
  void for_each_defined(F&& fn) const {
    for (const auto& [k, v] : entries_) fn(static_cast<LetterId>(k >> 32), static_cast<LetterId>(k), v);
  }

  /// Builds the dense lookup array when the alphabet is small enough.
  void compact();
  bool dense() const { return !dense_.empty(); }

  static constexpr std::size_t kDenseLimit = 2048;

 private:
  static std::uint64_t key(LetterId a, LetterId b) { return (std::uint64_t{a} << 32) | b; }

  std::size_t size_ = 0;
  std::optional<LetterId> fallback_;
  std::unordered_map<std::uint64_t, LetterId> entries_;
  std::vector<LetterId> dense_;
};

struct DynamicalSystem {
  std::vector<Letter> letters;
  RuleTable table;
  LetterId one = 0;
  LetterId zero = 0;
  std::optional<LetterId> bottom;
  bool symmetric = false;

  std::size_t size() const { return letters.size(); }
  LetterId rule(LetterId north, LetterId west) const { return table.at(north, west); }
  std::optional<LetterId> find(const std::string& name) const;
};

/// Incremental construction with conflict detection. Any pair left undefined
/// maps to a freshly added absorbing Bottom letter.
class SystemBuilder {
 public:
  SystemBuilder();

  LetterId add(std::string name, LetterRole role);
  LetterId one() const { return one_; }
  LetterId zero() const { return zero_; }
  LetterId bottom() const { return bottom_; }
  std::size_t size() const { return letters_.size(); }
  const Letter& letter(LetterId id) const { return letters_[id]; }

  /// Throws ConflictingRule if (a,b) already maps elsewhere.
  void define(LetterId north, LetterId west, LetterId image);
  void define_symmetric(LetterId a, LetterId b, LetterId image);
  std::optional<LetterId> defined(LetterId a, LetterId b) const;

  DynamicalSystem build(bool symmetric) &&;

 private:
  std::vector<Letter> letters_;
  std::unordered_map<std::uint64_t, LetterId> rules_;
  LetterId one_, zero_, bottom_;
};

/// Structural checks; throws FormatError on dangling ids or bad roles.
void check_structure(const DynamicalSystem& sys);

struct ValidationReport {
  bool total = false;
  std::size_t defined_pairs = 0;
  bool declared_symmetric = false;
  bool actually_symmetric = false;
  std::optional<std::pair<LetterId, LetterId>> asymmetric_pair;
  std::size_t probe_diagonals = 0;
  std::optional<std::pair<std::size_t, std::size_t>> bottom_at;   // (n, k)
  std::optional<std::pair<std::size_t, std::size_t>> one_inside;  // (n, k)
  bool zero_fixed = false;  // f(0,0) = 0

  bool symmetry_consistent() const { return declared_symmetric == actually_symmetric; }
  bool clean() const { return total && symmetry_consistent() && !bottom_at && !one_inside; }
};

bool table_symmetric(const DynamicalSystem& sys, std::pair<LetterId, LetterId>* witness = nullptr);

/// Property report over diagonals D_0..D_N. Violations are reported, only
/// structural errors throw.
ValidationReport validate_system(const DynamicalSystem& sys, std::size_t probe);

/// Sub-system on the given letters (which must include zero and one). Images
/// falling outside the subset are sent to zero.
DynamicalSystem restrict_to(const DynamicalSystem& sys, std::span<const LetterId> keep);

}  // namespace dblrec
