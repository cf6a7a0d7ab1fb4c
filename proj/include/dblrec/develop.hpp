#pragma once

// Diagonal-by-diagonal development of a system. Entry k of D_n is the cell
// a(n-k, k); its North parent is D_{n-1}[k] and its West parent D_{n-1}[k-1].

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dblrec/dynsys.hpp"

namespace dblrec {

struct Diagonal {
  std::size_t n = 0;
  std::vector<LetterId> cells;  // n + 1 entries

  bool interior_all(LetterId letter) const;
  friend bool operator==(const Diagonal&, const Diagonal&) = default;
};

/// out.size() must be prev.size() + 1. Interior cells are independent of each
/// other and are computed in parallel when OpenMP is enabled.
void next_diagonal(const RuleTable& table, LetterId one, std::span<const LetterId> prev,
                   std::span<LetterId> out);

/// Reference kernel: same contract, plain loop.
void next_diagonal_serial(const RuleTable& table, LetterId one, std::span<const LetterId> prev,
                          std::span<LetterId> out);

/// Streams D_0, D_1, ... holding only the current diagonal and one scratch
/// buffer. The system must outlive the stream.
class DiagonalStream {
 public:
  explicit DiagonalStream(const DynamicalSystem& sys, bool parallel = true);

  const Diagonal& current() const { return current_; }
  std::size_t index() const { return current_.n; }
  void advance();
  /// Cells currently held in memory (current diagonal plus scratch).
  std::size_t live_cells() const { return current_.cells.capacity() + scratch_.capacity(); }

 private:
  const DynamicalSystem* sys_;
  bool parallel_;
  Diagonal current_;
  std::vector<LetterId> scratch_;
};

/// D_0 .. D_N materialized.
std::vector<Diagonal> develop(const DynamicalSystem& sys, std::size_t last);
std::vector<Diagonal> develop_serial(const DynamicalSystem& sys, std::size_t last);

enum class VerdictKind { ZeroCertifiedFrom, NotZeroWithin, InteriorZeroButUncertified };

struct ZeroVerdict {
  VerdictKind kind = VerdictKind::NotZeroWithin;
  std::size_t diagonal = 0;  // certifying or first uncertified diagonal
  std::size_t bound = 0;
  bool closure = false;      // f(0,0) = f(0,1) = f(1,0) = 0
  std::vector<std::size_t> uncertified_zero;  // scan log

  bool certified() const { return kind == VerdictKind::ZeroCertifiedFrom; }
};

std::string describe(const ZeroVerdict& verdict);

bool zero_closure(const DynamicalSystem& sys);

/// Scans D_2..D_N. ZeroCertifiedFrom(n) is a proof: D_n has an all-zero
/// interior and zero is closed under f next to the walls, so every later
/// interior cell has parents in {0, 1-wall}. A trailing run of at least two
/// zero-interior diagonals without closure yields InteriorZeroButUncertified.
ZeroVerdict scan_ultimately_zero(const DynamicalSystem& sys, std::size_t bound);

}  // namespace dblrec
