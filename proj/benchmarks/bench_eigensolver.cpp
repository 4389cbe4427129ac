#include <benchmark/benchmark.h>

#include "warpspec/classifier.hpp"
#include "warpspec/eigensolver.hpp"
#include "warpspec/ess_bottom.hpp"
#include "warpspec/grid.hpp"

using namespace warpspec;

namespace {

const WarpedMetric& critical() {
    static const WarpedMetric m = WarpedMetric::exponential(-1, -1);
    return m;
}

}  // namespace

static void BM_CountBelowScalar(benchmark::State& state) {
    const auto op = discretize(build_type1(critical(), DegreePair(3, 0), 2), Grid(1.0, 21.0, state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(count_below(op, 1.5));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CountBelowScalar)->RangeMultiplier(4)->Range(256, 65536)->Complexity(benchmark::oN);

static void BM_CountBelowCoupled(benchmark::State& state) {
    const auto op = discretize(build_type3(critical(), DegreePair(3, 1), 4), Grid(1.0, 21.0, state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(count_below(op, 1.5));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CountBelowCoupled)->RangeMultiplier(4)->Range(256, 65536)->Complexity(benchmark::oN);

static void BM_LowestEigenvalues(benchmark::State& state) {
    const auto op = discretize(build_type1(critical(), DegreePair(4, 1), 6), Grid(1.0, 41.0, 4000));
    for (auto _ : state) benchmark::DoNotOptimize(lowest_eigenvalues(op, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LowestEigenvalues)->Arg(1)->Arg(6)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_TruncationSweep(benchmark::State& state) {
    const auto potential = build_type1(critical(), DegreePair(3, 0), 2);
    SweepPolicy policy;
    policy.sweeps = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ess_bottom(potential, policy));
}
BENCHMARK(BM_TruncationSweep)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_ClassifySphere(benchmark::State& state) {
    const auto sphere = BoundaryData::sphere(6);
    for (auto _ : state)
        for (int p = 0; p <= 6; ++p)
            benchmark::DoNotOptimize(classify_rotsym(critical(), DegreePair(6, p), sphere));
}
BENCHMARK(BM_ClassifySphere);

BENCHMARK_MAIN();
