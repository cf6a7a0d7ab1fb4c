// Streaming development, OpenMP kernel against the serial reference.

#include <benchmark/benchmark.h>

#include <random>

#include "dblrec/develop.hpp"
#include "dblrec/reduce_suw.hpp"
#include "dblrec/reduce_uw.hpp"

using namespace dblrec;

namespace {

const DynamicalSystem& uw_right() {
  static const auto sys = [] {
    const auto m = load_machine(std::string(DBLREC_DATA_DIR) + "/machines/right.tm");
    return compile_uw(m, std::vector<Symbol>{}).system;
  }();
  return sys;
}

const DynamicalSystem& suw_right() {
  static const auto sys = [] {
    const auto m = load_machine(std::string(DBLREC_DATA_DIR) + "/machines/right.tm");
    return compile_suw(m, std::vector<Symbol>{}).system;
  }();
  return sys;
}

void stream(benchmark::State& state, const DynamicalSystem& sys, bool parallel) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    DiagonalStream s(sys, parallel);
    while (s.index() < n) s.advance();
    benchmark::DoNotOptimize(s.current().cells.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * (n + 1) * (n + 2) / 2));
}

void BM_UwSerial(benchmark::State& s) { stream(s, uw_right(), false); }
void BM_UwParallel(benchmark::State& s) { stream(s, uw_right(), true); }
void BM_SuwSerial(benchmark::State& s) { stream(s, suw_right(), false); }
void BM_SuwParallel(benchmark::State& s) { stream(s, suw_right(), true); }

void BM_KernelSerial(benchmark::State& state) {
  const auto& sys = uw_right();
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<LetterId> prev(n, sys.zero), out(n + 1);
  prev.front() = prev.back() = sys.one;
  for (auto _ : state) {
    next_diagonal_serial(sys.table, sys.one, prev, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

void BM_KernelParallel(benchmark::State& state) {
  const auto& sys = uw_right();
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<LetterId> prev(n, sys.zero), out(n + 1);
  prev.front() = prev.back() = sys.one;
  for (auto _ : state) {
    next_diagonal(sys.table, sys.one, prev, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

}  // namespace

BENCHMARK(BM_UwSerial)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UwParallel)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuwSerial)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuwParallel)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelSerial)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_KernelParallel)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20);

BENCHMARK_MAIN();
