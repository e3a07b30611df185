// Serial vs OpenMP sweeps, with the brute-force references for scale.
// Arguments are (m, n).

#include <benchmark/benchmark.h>

#include <map>

#include "mang/sweeps.hpp"

using namespace mang;

namespace {

const FinitePoset& poset(int m, int n) {
  static std::map<std::pair<int, int>, FinitePoset> cache;
  auto it = cache.find({m, n});
  if (it == cache.end()) it = cache.emplace(std::pair{m, n}, build_poset(m, n)).first;
  return it->second;
}

template <class F>
void run(benchmark::State& state, F&& sweep) {
  const FinitePoset& p = poset(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  std::uint64_t checked = 0;
  for (auto _ : state) {
    SweepResult r = sweep(p);
    if (!r.pass) state.SkipWithError(r.detail.c_str());
    checked = r.checked;
    benchmark::DoNotOptimize(r);
  }
  state.counters["checked"] = static_cast<double>(checked);
}

void BM_IntervalSerial(benchmark::State& s) { run(s, [](const auto& p) { return interval_sweep(p, Exec::Serial); }); }
void BM_IntervalParallel(benchmark::State& s) {
  run(s, [](const auto& p) { return interval_sweep(p, Exec::Parallel); });
}
void BM_IntervalReference(benchmark::State& s) { run(s, [](const auto& p) { return interval_sweep_reference(p); }); }

void BM_DivisibilitySerial(benchmark::State& s) {
  run(s, [](const auto& p) { return divisibility_sweep(p, Exec::Serial); });
}
void BM_DivisibilityParallel(benchmark::State& s) {
  run(s, [](const auto& p) { return divisibility_sweep(p, Exec::Parallel); });
}
void BM_DivisibilityReference(benchmark::State& s) {
  run(s, [](const auto& p) { return divisibility_sweep_reference(p); });
}

void BM_BijectionSerial(benchmark::State& s) {
  run(s, [](const auto& p) { return bijection_sweep(p.m, p.n, Exec::Serial); });
}
void BM_BijectionParallel(benchmark::State& s) {
  run(s, [](const auto& p) { return bijection_sweep(p.m, p.n, Exec::Parallel); });
}

void BM_UpperIdealSerial(benchmark::State& s) {
  run(s, [](const auto& p) { return upper_ideal_sweep(p, Exec::Serial); });
}
void BM_UpperIdealParallel(benchmark::State& s) {
  run(s, [](const auto& p) { return upper_ideal_sweep(p, Exec::Parallel); });
}

}  // namespace

BENCHMARK(BM_IntervalSerial)->Args({2, 4})->Args({1, 8})->Args({2, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntervalParallel)->Args({2, 4})->Args({1, 8})->Args({2, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntervalReference)->Args({2, 4})->Args({1, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DivisibilitySerial)->Args({1, 8})->Args({2, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DivisibilityParallel)->Args({1, 8})->Args({2, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DivisibilityReference)->Args({1, 8})->Args({2, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BijectionSerial)->Args({2, 5})->Args({3, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BijectionParallel)->Args({2, 5})->Args({3, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UpperIdealSerial)->Args({2, 5})->Args({1, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UpperIdealParallel)->Args({2, 5})->Args({1, 8})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
