#include <benchmark/benchmark.h>

#include "tauclock/noise.hpp"
#include "tauclock/params.hpp"
#include "tauclock/rng.hpp"

namespace {

void BM_PhiloxBlock(benchmark::State& state) {
    const tauclock::PhiloxStream stream(42u, 0u);
    std::uint64_t index = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(stream.block(index++));
    }
    state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) * 16);
}
BENCHMARK(BM_PhiloxBlock);

void BM_NormalPair(benchmark::State& state) {
    const tauclock::PhiloxStream stream(42u, 0u);
    std::uint64_t index = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(stream.normal_pair(index++));
    }
}
BENCHMARK(BM_NormalPair);

void BM_SampleDrift(benchmark::State& state) {
    const auto steps = static_cast<std::size_t>(state.range(0));
    std::vector<double> grid(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) grid[i] = static_cast<double>(i);
    std::uint64_t realization = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            tauclock::sample_drift(1e-60, grid, 7u, realization++).delta_t_s.back());
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(steps));
}
BENCHMARK(BM_SampleDrift)->Arg(100)->Arg(10000)->ArgNames({"steps"});

void BM_FieldSamplerDraw(benchmark::State& state) {
    const auto n_points = static_cast<std::size_t>(state.range(0));
    const auto params = tauclock::standard_params(tauclock::ModelKind::Csl);
    std::vector<tauclock::Vec3> points(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        points[i] = {static_cast<double>(i) * params.sigma_m, 0.0, 0.0};
    }
    tauclock::GaussianFieldSampler sampler(points, params, 1.0);
    std::uint64_t realization = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sampler.draw_values(7u, realization++).back());
    }
}
BENCHMARK(BM_FieldSamplerDraw)->Arg(2)->Arg(16)->Arg(64)->ArgNames({"points"});

}  // namespace

BENCHMARK_MAIN();
