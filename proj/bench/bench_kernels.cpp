#include <benchmark/benchmark.h>

#include "chaintrace/candidates.hpp"
#include "chaintrace/kernels.hpp"

using namespace chaintrace;

namespace {

PointSet ring(std::size_t n) {
  PointSet set{Metric::Torus, {}};
  for (std::size_t t = 0; t < n; ++t) {
    const double u = static_cast<double>(t) / n;
    set.points.push_back({u, 0.5 + 0.25 * (u < 0.5 ? u : 1.0 - u)});
  }
  return set;
}

void BM_sample_serial(benchmark::State& st) {
  const auto cand = builtin_circle_candidate("shorter-arc-midpoint");
  for (auto _ : st) benchmark::DoNotOptimize(serial::sample_coloring(static_cast<int>(st.range(0)), cand));
}

void BM_sample_parallel(benchmark::State& st) {
  const auto cand = builtin_circle_candidate("shorter-arc-midpoint");
  for (auto _ : st) benchmark::DoNotOptimize(parallel::sample_coloring(static_cast<int>(st.range(0)), cand));
}

void BM_scan_serial(benchmark::State& st) {
  const auto cand = builtin_circle_candidate("lift-average");
  for (auto _ : st) benchmark::DoNotOptimize(serial::scan_mean_candidate(cand, static_cast<int>(st.range(0))));
}

void BM_scan_parallel(benchmark::State& st) {
  const auto cand = builtin_circle_candidate("lift-average");
  for (auto _ : st) benchmark::DoNotOptimize(parallel::scan_mean_candidate(cand, static_cast<int>(st.range(0))));
}

void BM_dilation_serial(benchmark::State& st) {
  const auto set = ring(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(serial::dilation_mask(set, 0.03, 256));
}

void BM_dilation_parallel(benchmark::State& st) {
  const auto set = ring(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(parallel::dilation_mask(set, 0.03, 256));
}

void BM_lemma_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(serial::verify_lemma_exhaustive(3, {0, 0}, {3, 3}));
}

void BM_lemma_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(parallel::verify_lemma_exhaustive(3, {0, 0}, {3, 3}));
}

void BM_sweep_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(serial::sweep_random_colorings(25, 100, 1));
}

void BM_sweep_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(parallel::sweep_random_colorings(25, 100, 1));
}

}  // namespace

BENCHMARK(BM_sample_serial)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sample_parallel)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_scan_serial)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_scan_parallel)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dilation_serial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dilation_parallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_lemma_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_lemma_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
