#include <benchmark/benchmark.h>

#include "approxop/functions.hpp"
#include "approxop/moments.hpp"
#include "approxop/operators.hpp"

using namespace approxop;

static void BM_ApplyP(benchmark::State& state) {
    const ScalarFunction f = make_scalar_function("exp-decay");
    const OperatorParams params(state.range(0), BetaParam(0.1));
    const TruncationPolicy policy;
    for (auto _ : state)
        benchmark::DoNotOptimize(apply_p(f, params, 1.0, policy));
}
BENCHMARK(BM_ApplyP)->Arg(10)->Arg(1000)->Arg(100000);

static void BM_CentralMomentSeries(benchmark::State& state) {
    const OperatorParams params(50, BetaParam(0.5));
    const TruncationPolicy policy;
    for (auto _ : state)
        benchmark::DoNotOptimize(central_moment_series(4, params, 2.0, policy));
}
BENCHMARK(BM_CentralMomentSeries);

static void BM_RawMomentClosed(benchmark::State& state) {
    const OperatorParams params(50, BetaParam(0.5));
    for (auto _ : state)
        benchmark::DoNotOptimize(raw_moment(4, params, 2.0));
}
BENCHMARK(BM_RawMomentClosed);
