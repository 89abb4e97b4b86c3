// Serial reference kernels against their OpenMP counterparts.
//
//   ./build/bench/invsum_bench --benchmark_filter=ShiftOr

#include <benchmark/benchmark.h>

#include <random>

#include "invsum/kernels.hpp"
#include "invsum/progressions.hpp"
#include "invsum/sumset.hpp"
#include "invsum/verify.hpp"

using namespace invsum;

namespace {

IntSet random_set(Value span, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(density);
  std::vector<Value> v{0};
  for (Value x = 1; x < span; ++x) {
    if (keep(rng)) v.push_back(x);
  }
  v.push_back(span);
  return IntSet::from_values(v);
}

void shift_or_args(benchmark::internal::Benchmark* b) {
  for (Value span : {1 << 14, 1 << 17, 1 << 20}) b->Args({span, 64});
}

void BM_ShiftOrSerial(benchmark::State& state) {
  const auto big = random_set(state.range(0), 0.5, 1);
  const auto small = random_set(state.range(1), 0.5, 2);
  const std::vector<Value> shifts(small.begin(), small.end());
  const auto bits = kernels::DenseBits::from_set(big, 0);
  kernels::DenseBits out(static_cast<std::size_t>(big.max() + small.max() + 1));
  for (auto _ : state) {
    kernels::shift_or_serial(shifts, bits, out);
    benchmark::DoNotOptimize(out.words().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(shifts.size()) *
                          static_cast<std::int64_t>(bits.word_count()));
}
BENCHMARK(BM_ShiftOrSerial)->Apply(shift_or_args)->Unit(benchmark::kMicrosecond);

void BM_ShiftOrParallel(benchmark::State& state) {
  const auto big = random_set(state.range(0), 0.5, 1);
  const auto small = random_set(state.range(1), 0.5, 2);
  const std::vector<Value> shifts(small.begin(), small.end());
  const auto bits = kernels::DenseBits::from_set(big, 0);
  kernels::DenseBits out(static_cast<std::size_t>(big.max() + small.max() + 1));
  for (auto _ : state) {
    kernels::shift_or_parallel(shifts, bits, out);
    benchmark::DoNotOptimize(out.words().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(shifts.size()) *
                          static_cast<std::int64_t>(bits.word_count()));
}
BENCHMARK(BM_ShiftOrParallel)->Apply(shift_or_args)->Unit(benchmark::kMicrosecond)->UseRealTime();

void BM_Sumset(benchmark::State& state) {
  const auto engine = static_cast<SumsetEngine>(state.range(2));
  const auto a = random_set(state.range(0), 1.0 / static_cast<double>(state.range(1)), 3);
  SumsetConfig cfg;
  cfg.engine = engine;
  for (auto _ : state) benchmark::DoNotOptimize(sumset(a, a, cfg));
  state.SetLabel(to_string(engine) + " k=" + std::to_string(a.size()));
}
BENCHMARK(BM_Sumset)
    ->Args({1 << 12, 2, static_cast<int>(SumsetEngine::sparse)})
    ->Args({1 << 12, 2, static_cast<int>(SumsetEngine::bitset)})
    ->Args({1 << 12, 2, static_cast<int>(SumsetEngine::fft)})
    ->Args({1 << 16, 512, static_cast<int>(SumsetEngine::sparse)})
    ->Args({1 << 16, 512, static_cast<int>(SumsetEngine::bitset)})
    ->Args({1 << 16, 512, static_cast<int>(SumsetEngine::fft)})
    ->Args({1'000'000, 2, static_cast<int>(SumsetEngine::fft)})
    ->Args({1'000'000, 2, static_cast<int>(SumsetEngine::automatic)})
    ->Unit(benchmark::kMillisecond);

void BM_BpCover(benchmark::State& state) {
  const auto a = random_set(state.range(0), 0.3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(bp_cover(a));
}
BENCHMARK(BM_BpCover)->Arg(1 << 10)->Arg(1 << 13)->Arg(1 << 15)->Unit(benchmark::kMillisecond);

void BM_SweepSerial(benchmark::State& state) {
  SweepOptions opts;
  opts.max_span = state.range(0);
  opts.claims = all_claims();
  for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(opts));
}
BENCHMARK(BM_SweepSerial)->Arg(12)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state) {
  SweepOptions opts;
  opts.max_span = state.range(0);
  opts.claims = all_claims();
  opts.workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(opts));
}
BENCHMARK(BM_SweepParallel)
    ->Args({12, 4})
    ->Args({15, 4})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
