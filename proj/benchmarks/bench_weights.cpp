#include <benchmark/benchmark.h>

#include "approxop/weights.hpp"

using namespace approxop;

static void BM_LogWeightSmallK(benchmark::State& state) {
    const BetaParam beta(0.3);
    std::uint64_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(log_weight(k % 64, 5.0, beta, WeightKind::NewFamily));
        ++k;
    }
}
BENCHMARK(BM_LogWeightSmallK);

static void BM_LogWeightLargeK(benchmark::State& state) {
    const BetaParam beta(0.3);
    std::uint64_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            log_weight(900'000 + (k % 4096), 700'000.0, beta, WeightKind::NewFamily));
        ++k;
    }
}
BENCHMARK(BM_LogWeightLargeK);

static void BM_NormalizationSum(benchmark::State& state) {
    const double alpha = static_cast<double>(state.range(0));
    const BetaParam beta(0.5);
    const TruncationPolicy policy;
    for (auto _ : state) {
        benchmark::DoNotOptimize(series_sum([](std::uint64_t) { return 1.0; }, alpha, beta,
                                            WeightKind::NewFamily, policy));
    }
}
BENCHMARK(BM_NormalizationSum)->Arg(10)->Arg(1000)->Arg(100000);
