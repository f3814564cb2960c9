#include <benchmark/benchmark.h>

#include "tauclock/kernels.hpp"
#include "tauclock/params.hpp"

namespace {

void BM_KernelShapeCsl(benchmark::State& state) {
    double u = 0.0;
    for (auto _ : state) {
        u += 1e-6;
        benchmark::DoNotOptimize(tauclock::kernel_shape(tauclock::ModelKind::Csl, u));
    }
}
BENCHMARK(BM_KernelShapeCsl);

void BM_KernelShapeDpSeries(benchmark::State& state) {
    double u = 0.0;
    for (auto _ : state) {
        u = u > 5e-4 ? 0.0 : u + 1e-9;
        benchmark::DoNotOptimize(tauclock::kernel_shape(tauclock::ModelKind::Dp, u));
    }
}
BENCHMARK(BM_KernelShapeDpSeries);

void BM_KernelShapeDpErf(benchmark::State& state) {
    double u = 1.0;
    for (auto _ : state) {
        u += 1e-6;
        benchmark::DoNotOptimize(tauclock::kernel_shape(tauclock::ModelKind::Dp, u));
    }
}
BENCHMARK(BM_KernelShapeDpErf);

void BM_KernelSmeared(benchmark::State& state) {
    const auto params = tauclock::standard_params(tauclock::ModelKind::Dp);
    double r = 1e-9;
    for (auto _ : state) {
        r += 1e-15;
        benchmark::DoNotOptimize(tauclock::kernel_smeared(params, r));
    }
}
BENCHMARK(BM_KernelSmeared);

}  // namespace

BENCHMARK_MAIN();
