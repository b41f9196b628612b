#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "panelopt/batch_pipeline.hpp"

namespace panelopt {

/// m NACA 4-digit sections with randomly perturbed camber, camber position,
/// thickness and incidence (within -2..4 degrees). Deterministic in `seed`.
Workload jittered_naca_workload(std::size_t m, std::size_t n, std::uint64_t seed, double reynolds = 1e6);

/// One row of a timing table: W, A, L, O in seconds.
struct BenchRow {
    std::string mode;
    std::size_t slices = 1;
    double split = 1.0;
    double wall = 0.0;
    double assembly = 0.0;
    double solve = 0.0;
    double overhead = 0.0;
    double speedup = 1.0;  // W(sequential) / W
};

inline constexpr const char* kBenchCsvHeader = "mode,slices,split,W_s,A_s,L_s,O_s,speedup";

/// Sequential baseline (solver_workers threads), then one pipelined row per
/// slice count, then one split row per fraction using base.num_slices.
/// Each row reports the repetition with the median wall time.
std::vector<BenchRow> bench_sweep(const Workload& workload, std::span<const std::size_t> slice_list,
                                  std::span<const double> split_list, std::size_t repetitions,
                                  const PipelineConfig& base);

BenchRow to_row(const TimingReport& report, double baseline_wall);

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);
std::string format_bench_table(const std::vector<BenchRow>& rows);

}  // namespace panelopt
