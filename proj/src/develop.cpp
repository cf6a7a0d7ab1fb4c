#include "dblrec/develop.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>

namespace dblrec {

namespace {
// Below this many interior cells the fork/join cost dominates.
constexpr std::size_t kParallelThreshold = 4096;
}  // namespace

bool Diagonal::interior_all(LetterId letter) const {
  if (cells.size() < 3) return false;
  return std::all_of(cells.begin() + 1, cells.end() - 1, [letter](LetterId c) { return c == letter; });
}

void next_diagonal_serial(const RuleTable& table, LetterId one, std::span<const LetterId> prev,
                          std::span<LetterId> out) {
  assert(out.size() == prev.size() + 1);
  const std::size_t n = prev.size();
  out[0] = one;
  out[n] = one;
  for (std::size_t k = 1; k < n; ++k) out[k] = table.at(prev[k], prev[k - 1]);
}

void next_diagonal(const RuleTable& table, LetterId one, std::span<const LetterId> prev,
                   std::span<LetterId> out) {
  assert(out.size() == prev.size() + 1);
  const std::size_t n = prev.size();
  out[0] = one;
  out[n] = one;
  const auto interior = static_cast<std::int64_t>(n) - 1;
#if defined(DBLREC_HAVE_OPENMP)
#pragma omp parallel for schedule(static) if (static_cast<std::size_t>(interior) >= kParallelThreshold)
#endif
  for (std::int64_t k = 1; k <= interior; ++k) {
    const auto i = static_cast<std::size_t>(k);
    out[i] = table.at(prev[i], prev[i - 1]);
  }
}

DiagonalStream::DiagonalStream(const DynamicalSystem& sys, bool parallel) : sys_(&sys), parallel_(parallel) {
  current_.n = 0;
  current_.cells = {sys.one};
}

void DiagonalStream::advance() {
  const std::size_t n = current_.n + 1;
  if (scratch_.capacity() < n + 1) scratch_.reserve(n + 17 + n / 1024);
  scratch_.resize(n + 1);
  if (parallel_)
    next_diagonal(sys_->table, sys_->one, current_.cells, scratch_);
  else
    next_diagonal_serial(sys_->table, sys_->one, current_.cells, scratch_);
  std::swap(current_.cells, scratch_);
  current_.n = n;
}

namespace {
std::vector<Diagonal> develop_impl(const DynamicalSystem& sys, std::size_t last, bool parallel) {
  std::vector<Diagonal> out;
  out.reserve(last + 1);
  DiagonalStream stream(sys, parallel);
  out.push_back(stream.current());
  while (stream.index() < last) {
    stream.advance();
    out.push_back(stream.current());
  }
  return out;
}
}  // namespace

std::vector<Diagonal> develop(const DynamicalSystem& sys, std::size_t last) { return develop_impl(sys, last, true); }

std::vector<Diagonal> develop_serial(const DynamicalSystem& sys, std::size_t last) {
  return develop_impl(sys, last, false);
}

bool zero_closure(const DynamicalSystem& sys) {
  const auto z = sys.zero, o = sys.one;
  return sys.rule(z, z) == z && sys.rule(z, o) == z && sys.rule(o, z) == z;
}

std::string describe(const ZeroVerdict& v) {
  switch (v.kind) {
    case VerdictKind::ZeroCertifiedFrom: return "ZeroCertifiedFrom(" + std::to_string(v.diagonal) + ")";
    case VerdictKind::InteriorZeroButUncertified:
      return "InteriorZeroButUncertified(" + std::to_string(v.diagonal) + ")";
    case VerdictKind::NotZeroWithin: return "NotZeroWithin(" + std::to_string(v.bound) + ")";
  }
  return {};
}

ZeroVerdict scan_ultimately_zero(const DynamicalSystem& sys, std::size_t bound) {
  ZeroVerdict v;
  v.bound = bound;
  v.closure = zero_closure(sys);
  DiagonalStream stream(sys);
  std::size_t run_start = 0, run_length = 0;
  while (stream.index() < bound) {
    stream.advance();
    const auto& d = stream.current();
    if (d.n < 2) continue;
    if (!d.interior_all(sys.zero)) {
      run_length = 0;
      continue;
    }
    if (v.closure) {
      v.kind = VerdictKind::ZeroCertifiedFrom;
      v.diagonal = d.n;
      return v;
    }
    v.uncertified_zero.push_back(d.n);
    if (run_length++ == 0) run_start = d.n;
  }
  if (run_length >= 2) {
    v.kind = VerdictKind::InteriorZeroButUncertified;
    v.diagonal = run_start;
  }
  return v;
}

}  // namespace dblrec
