#include <benchmark/benchmark.h>

#include "panelopt/bench_sweep.hpp"
#include "panelopt/panel_core.hpp"

using namespace panelopt;

static void BM_Influence(benchmark::State& state) {
    const auto pan = make_panel({0.0, 0.0}, {0.01, 0.002});
    Point2 x{0.3, 0.1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(influence(x, pan));
        x.x += 1e-12;
    }
}
BENCHMARK(BM_Influence);

static void BM_Assemble(benchmark::State& state) {
    const auto af = naca4("2412", static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(assemble(af, FlowCondition{}));
}
BENCHMARK(BM_Assemble)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMicrosecond);

static void BM_LuSolve(benchmark::State& state) {
    const auto sys = assemble(naca4("2412", static_cast<std::size_t>(state.range(0))), FlowCondition{});
    for (auto _ : state) benchmark::DoNotOptimize(lu_solve(sys));
}
BENCHMARK(BM_LuSolve)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMicrosecond);

static void BM_Analyze(benchmark::State& state) {
    const auto af = naca4("2412", static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(analyze(af, FlowCondition{}, 1e6));
}
BENCHMARK(BM_Analyze)->Arg(200)->Unit(benchmark::kMicrosecond);

static void BM_Pipeline(benchmark::State& state) {
    const auto workload = jittered_naca_workload(100, 100, 1);
    PipelineConfig cfg;
    cfg.num_slices = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_pipelined(workload, cfg));
}
BENCHMARK(BM_Pipeline)->Arg(1)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
