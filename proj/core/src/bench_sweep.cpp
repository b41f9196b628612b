#include "panelopt/bench_sweep.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <string>

namespace panelopt {

namespace {

TimingReport median_run(std::size_t repetitions, const std::function<TimingReport()>& once) {
    std::vector<TimingReport> runs;
    runs.reserve(repetitions);
    for (std::size_t r = 0; r < repetitions; ++r) runs.push_back(once());
    std::sort(runs.begin(), runs.end(), [](const auto& a, const auto& b) { return a.wall < b.wall; });
    return runs[(runs.size() - 1) / 2];
}

}  // namespace

Workload jittered_naca_workload(std::size_t m, std::size_t n, std::uint64_t seed, double reynolds) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> camber(0.0, 0.04);
    std::uniform_real_distribution<double> position(0.3, 0.5);
    std::uniform_real_distribution<double> thickness(0.09, 0.15);
    std::uniform_real_distribution<double> alpha_deg(-2.0, 4.0);
    Workload out;
    out.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        Naca4Params p;
        p.max_camber = camber(rng);
        p.camber_position = position(rng);
        p.thickness = thickness(rng);
        const double alpha = alpha_deg(rng) * std::numbers::pi / 180.0;
        out.push_back(Problem{naca4(p, n, Spacing::Cosine, "variant-" + std::to_string(k)),
                              FlowCondition{1.0, alpha}, reynolds});
    }
    return out;
}

BenchRow to_row(const TimingReport& report, double baseline_wall) {
    BenchRow row;
    row.mode = report.mode;
    row.slices = report.slices;
    row.split = report.split;
    row.wall = report.wall;
    row.assembly = report.assembly;
    row.solve = report.solve;
    row.overhead = report.overhead;
    row.speedup = report.wall > 0.0 ? baseline_wall / report.wall : 0.0;
    return row;
}

std::vector<BenchRow> bench_sweep(const Workload& workload, std::span<const std::size_t> slice_list,
                                  std::span<const double> split_list, std::size_t repetitions,
                                  const PipelineConfig& base) {
    PANELOPT_REQUIRE(!workload.empty(), ErrorCode::EmptyWorkload, "workload has no problems");
    PANELOPT_REQUIRE(!slice_list.empty() || !split_list.empty(), ErrorCode::InvalidArgument,
                     "sweep needs at least one slice count or split fraction");
    PANELOPT_REQUIRE(repetitions >= 1, ErrorCode::InvalidArgument, "repetitions must be >= 1");

    std::vector<BenchRow> rows;
    const TimingReport baseline =
        median_run(repetitions, [&] { return run_sequential(workload, base.solver_workers).timing; });
    rows.push_back(to_row(baseline, baseline.wall));

    for (std::size_t slices : slice_list) {
        PipelineConfig cfg = base;
        cfg.num_slices = slices;
        cfg.split_fraction = 1.0;
        rows.push_back(to_row(median_run(repetitions, [&] { return run_pipelined(workload, cfg).timing; }),
                              baseline.wall));
    }
    for (double split : split_list) {
        PipelineConfig cfg = base;
        cfg.split_fraction = split;
        rows.push_back(
            to_row(median_run(repetitions, [&] { return run_split(workload, cfg).timing; }), baseline.wall));
    }
    return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << kBenchCsvHeader << '\n';
    char buf[256];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%s,%zu,%.2f,%.6f,%.6f,%.6f,%.6f,%.4f\n", r.mode.c_str(), r.slices, r.split,
                      r.wall, r.assembly, r.solve, r.overhead, r.speedup);
        out << buf;
    }
}

std::string format_bench_table(const std::vector<BenchRow>& rows) {
    std::string out;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-11s %6s %6s %9s %9s %9s %9s %8s\n", "mode", "slices", "split", "W", "A", "L",
                  "O", "speedup");
    out += buf;
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%-11s %6zu %6.2f %9.3f %9.3f %9.3f %9.3f %8.2f\n", r.mode.c_str(), r.slices,
                      r.split, r.wall, r.assembly, r.solve, r.overhead, r.speedup);
        out += buf;
    }
    out += "O = W - max(stage busy time); A/L are summed stage busy times in seconds.\n";
    return out;
}

}  // namespace panelopt
