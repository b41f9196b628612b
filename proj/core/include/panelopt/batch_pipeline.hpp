#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "panelopt/analysis.hpp"
#include "panelopt/error.hpp"
#include "panelopt/geometry.hpp"
#include "panelopt/panel_core.hpp"

namespace panelopt {

struct Problem {
    Airfoil airfoil;
    FlowCondition flow;
    double reynolds = 1e6;
};

using Workload = std::vector<Problem>;

/// Outcome for one problem. Failures are captured here and never abort a batch.
struct ProblemResult {
    ErrorCode status = ErrorCode::Ok;
    std::string message;
    std::optional<Analysis> analysis;

    [[nodiscard]] bool ok() const noexcept { return status == ErrorCode::Ok; }
    friend bool operator==(const ProblemResult&, const ProblemResult&) = default;
};

struct PipelineConfig {
    std::size_t num_slices = 10;
    std::size_t assembly_workers = 1;
    std::size_t solver_workers = 1;
    std::size_t secondary_workers = 1;  // end-to-end pool used by run_split
    double split_fraction = 1.0;        // share kept on the pipelined path
    double transfer_bytes_per_sec = 0.0;  // 0 = infinite
    std::size_t queue_capacity = 2;

    /// Throws InvalidArgument; EmptyWorkload when workload_size == 0.
    void validate(std::size_t workload_size) const;
};

/// Overrides worker counts from PANELOPT_ASSEMBLY_WORKERS,
/// PANELOPT_SOLVER_WORKERS and PANELOPT_SECONDARY_WORKERS when set.
PipelineConfig apply_environment(PipelineConfig config);

struct SliceRange {
    std::size_t first = 0;
    std::size_t count = 0;
};

/// Contiguous partition into `slices` ranges whose sizes differ by at most one.
std::vector<SliceRange> partition(std::size_t problems, std::size_t slices);

/// Stage timestamps of one slice, seconds since the start of the run.
struct SliceTiming {
    std::size_t index = 0;
    SliceRange range;
    double assembly_start = 0.0;
    double assembled_at = 0.0;
    double transfer_start = 0.0;
    double transferred_at = 0.0;
    double solve_start = 0.0;
    double solved_at = 0.0;
};

/// Wall time W, stage busy times A (assembly), T (modeled transfer),
/// L (solve + post-processing), S (secondary pool) and overhead
/// O = W - max(A, T, L, S). A stage handles one slice at a time, so its busy
/// time is its critical path.
struct TimingReport {
    std::string mode;
    std::size_t slices = 1;
    double split = 1.0;
    double wall = 0.0;
    double assembly = 0.0;
    double transfer = 0.0;
    double solve = 0.0;
    double secondary = 0.0;
    double overhead = 0.0;
    std::vector<SliceTiming> slice_log;

    [[nodiscard]] double critical_path() const noexcept;
};

struct BatchRun {
    std::vector<ProblemResult> results;
    TimingReport timing;
};

/// Per-problem stage kernels shared by every execution mode.
struct AssembledProblem {
    ErrorCode status = ErrorCode::Ok;
    std::string message;
    std::optional<PanelSystem> system;
};
AssembledProblem assemble_problem(const Problem& problem);
ProblemResult solve_problem(const Problem& problem, AssembledProblem assembled);

/// Assemble everything, then solve everything; each phase is a parallel-for
/// over `threads` workers.
BatchRun run_sequential(const Workload& workload, std::size_t threads);

/// Three-stage slice pipeline: assembly pool -> modeled transfer -> solver pool.
BatchRun run_pipelined(const Workload& workload, const PipelineConfig& config);

/// The first round(split_fraction * m) problems take the pipelined path, the
/// rest run end-to-end on the secondary pool at the same time.
BatchRun run_split(const Workload& workload, const PipelineConfig& config);

}  // namespace panelopt
