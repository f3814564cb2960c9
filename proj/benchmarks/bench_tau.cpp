#include <benchmark/benchmark.h>

#include "tauclock/params.hpp"
#include "tauclock/tau.hpp"

namespace {

void BM_TauQuadrature(benchmark::State& state) {
    const auto kind = state.range(0) == 0 ? tauclock::ModelKind::Csl
                                          : tauclock::ModelKind::Dp;
    const auto params = tauclock::standard_params(kind);
    const double rho = static_cast<double>(state.range(1));
    const auto geom = tauclock::ClockGeometry::sphere(rho * params.sigma_m);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tauclock::tau_quadrature(params, geom).tau_s);
    }
}
BENCHMARK(BM_TauQuadrature)
    ->ArgsProduct({{0, 1}, {1, 10, 100, 1000}})
    ->ArgNames({"model", "rho"});

void BM_TauMonteCarlo(benchmark::State& state) {
    const auto params = tauclock::standard_params(tauclock::ModelKind::Csl);
    const auto geom = tauclock::ClockGeometry::sphere(params.sigma_m);
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(tauclock::tau_monte_carlo(params, geom, n, 1u).tau_s);
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(n));
}
BENCHMARK(BM_TauMonteCarlo)->Arg(10000)->Arg(100000)->ArgNames({"n"});

void BM_ShapeIntegral(benchmark::State& state) {
    const double rho = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            tauclock::tau_shape_integral(tauclock::ModelKind::Dp, rho));
    }
}
BENCHMARK(BM_ShapeIntegral)->Arg(1)->Arg(100)->ArgNames({"rho"});

}  // namespace

BENCHMARK_MAIN();
