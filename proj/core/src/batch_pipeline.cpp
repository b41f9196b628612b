#include "panelopt/batch_pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>

#include "panelopt/worker_pool.hpp"

namespace panelopt {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point origin) {
    return std::chrono::duration<double>(Clock::now() - origin).count();
}

struct SliceBatch {
    std::size_t index = 0;
    SliceRange range;
    std::vector<AssembledProblem> problems;
};

std::size_t bytes_of(const AssembledProblem& p) {
    if (!p.system) return 0;
    return (p.system->a.data().size() + p.system->b.size()) * sizeof(double);
}

// Device-to-host copy of one slice. The copy is real; the bus is modeled by
// holding the stage until bytes / bandwidth has elapsed.
SliceBatch transfer_slice(const SliceBatch& device, double bytes_per_sec) {
    const auto start = Clock::now();
    SliceBatch host;
    host.index = device.index;
    host.range = device.range;
    host.problems.reserve(device.problems.size());
    std::size_t bytes = 0;
    for (const auto& p : device.problems) {
        host.problems.push_back(p);
        bytes += bytes_of(p);
    }
    if (bytes_per_sec > 0.0) {
        const auto budget = std::chrono::duration<double>(static_cast<double>(bytes) / bytes_per_sec);
        std::this_thread::sleep_until(start + std::chrono::duration_cast<Clock::duration>(budget));
    }
    return host;
}

// Runs the three-stage pipeline over problems [first, first + count) and
// accumulates stage busy times into `report`.
void pipeline_range(const Workload& workload, std::size_t first, std::size_t count, const PipelineConfig& config,
                    WorkerPool& assembly_pool, WorkerPool& solver_pool, Clock::time_point origin,
                    std::vector<ProblemResult>& results, TimingReport& report) {
    auto ranges = partition(count, std::min(config.num_slices, count));
    for (auto& r : ranges) r.first += first;
    report.slices = ranges.size();
    report.slice_log.assign(ranges.size(), SliceTiming{});
    for (std::size_t k = 0; k < ranges.size(); ++k) {
        report.slice_log[k].index = k;
        report.slice_log[k].range = ranges[k];
    }

    BoundedQueue<SliceBatch> assembled(config.queue_capacity);
    BoundedQueue<SliceBatch> transferred(config.queue_capacity);
    std::exception_ptr assembly_error, transfer_error;

    std::thread assembly_stage([&] {
        try {
            for (std::size_t k = 0; k < ranges.size(); ++k) {
                SliceBatch batch;
                batch.index = k;
                batch.range = ranges[k];
                batch.problems.resize(ranges[k].count);
                report.slice_log[k].assembly_start = seconds_since(origin);
                assembly_pool.parallel_for(ranges[k].count, [&](std::size_t i) {
                    batch.problems[i] = assemble_problem(workload[ranges[k].first + i]);
                });
                report.slice_log[k].assembled_at = seconds_since(origin);
                if (!assembled.push(std::move(batch))) break;
            }
        } catch (...) {
            assembly_error = std::current_exception();
        }
        assembled.close();
    });

    std::thread transfer_stage([&] {
        try {
            while (auto batch = assembled.pop()) {
                auto& log = report.slice_log[batch->index];
                log.transfer_start = seconds_since(origin);
                SliceBatch host = transfer_slice(*batch, config.transfer_bytes_per_sec);
                batch.reset();
                log.transferred_at = seconds_since(origin);
                if (!transferred.push(std::move(host))) break;
            }
        } catch (...) {
            transfer_error = std::current_exception();
            assembled.close();
        }
        transferred.close();
    });

    std::exception_ptr solve_error;
    try {
        while (auto batch = transferred.pop()) {
            auto& log = report.slice_log[batch->index];
            log.solve_start = seconds_since(origin);
            solver_pool.parallel_for(batch->range.count, [&](std::size_t i) {
                const std::size_t idx = batch->range.first + i;
                results[idx] = solve_problem(workload[idx], std::move(batch->problems[i]));
            });
            log.solved_at = seconds_since(origin);
        }
    } catch (...) {
        solve_error = std::current_exception();
        transferred.close();
        assembled.close();
    }
    assembly_stage.join();
    transfer_stage.join();
    for (const auto& e : {assembly_error, transfer_error, solve_error}) {
        if (e) std::rethrow_exception(e);
    }

    for (const auto& s : report.slice_log) {
        report.assembly += s.assembled_at - s.assembly_start;
        report.transfer += s.transferred_at - s.transfer_start;
        report.solve += s.solved_at - s.solve_start;
    }
}

void finish(TimingReport& report, Clock::time_point origin) {
    report.wall = seconds_since(origin);
    report.overhead = std::max(0.0, report.wall - report.critical_path());
}

std::size_t env_count(const char* name, std::size_t fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    PANELOPT_REQUIRE(end != raw && *end == '\0' && v >= 1, ErrorCode::InvalidArgument,
                     std::string(name) + " must be a positive integer");
    return static_cast<std::size_t>(v);
}

}  // namespace

void PipelineConfig::validate(std::size_t workload_size) const {
    PANELOPT_REQUIRE(workload_size >= 1, ErrorCode::EmptyWorkload, "workload has no problems");
    PANELOPT_REQUIRE(num_slices >= 1 && num_slices <= workload_size, ErrorCode::InvalidArgument,
                     "num_slices must lie in [1, workload size]");
    PANELOPT_REQUIRE(assembly_workers >= 1 && solver_workers >= 1 && secondary_workers >= 1,
                     ErrorCode::InvalidArgument, "worker counts must be >= 1");
    PANELOPT_REQUIRE(split_fraction >= 0.0 && split_fraction <= 1.0, ErrorCode::InvalidArgument,
                     "split_fraction must lie in [0, 1]");
    PANELOPT_REQUIRE(std::isfinite(transfer_bytes_per_sec) && transfer_bytes_per_sec >= 0.0,
                     ErrorCode::InvalidArgument, "transfer bandwidth must be >= 0");
    PANELOPT_REQUIRE(queue_capacity >= 1, ErrorCode::InvalidArgument, "queue capacity must be >= 1");
}

PipelineConfig apply_environment(PipelineConfig config) {
    config.assembly_workers = env_count("PANELOPT_ASSEMBLY_WORKERS", config.assembly_workers);
    config.solver_workers = env_count("PANELOPT_SOLVER_WORKERS", config.solver_workers);
    config.secondary_workers = env_count("PANELOPT_SECONDARY_WORKERS", config.secondary_workers);
    return config;
}

std::vector<SliceRange> partition(std::size_t problems, std::size_t slices) {
    PANELOPT_REQUIRE(slices >= 1, ErrorCode::InvalidArgument, "need at least one slice");
    std::vector<SliceRange> out(slices);
    const std::size_t base = problems / slices;
    const std::size_t extra = problems % slices;
    std::size_t first = 0;
    for (std::size_t k = 0; k < slices; ++k) {
        out[k].first = first;
        out[k].count = base + (k < extra ? 1 : 0);
        first += out[k].count;
    }
    return out;
}

double TimingReport::critical_path() const noexcept {
    return std::max({assembly, transfer, solve, secondary});
}

AssembledProblem assemble_problem(const Problem& problem) {
    AssembledProblem out;
    try {
        out.system = assemble(problem.airfoil, problem.flow);
    } catch (const Error& e) {
        out.status = e.code();
        out.message = e.what();
    }
    return out;
}

ProblemResult solve_problem(const Problem& problem, AssembledProblem assembled) {
    ProblemResult r;
    if (!assembled.system) {
        r.status = assembled.status;
        r.message = std::move(assembled.message);
        return r;
    }
    try {
        r.analysis = post_process(lu_solve(std::move(*assembled.system)), problem.airfoil, problem.flow,
                                  problem.reynolds);
    } catch (const Error& e) {
        r.status = e.code();
        r.message = e.what();
    }
    return r;
}

BatchRun run_sequential(const Workload& workload, std::size_t threads) {
    PANELOPT_REQUIRE(!workload.empty(), ErrorCode::EmptyWorkload, "workload has no problems");
    PANELOPT_REQUIRE(threads >= 1, ErrorCode::InvalidArgument, "need at least one thread");
    WorkerPool pool(threads);
    const std::size_t m = workload.size();

    BatchRun run;
    run.results.resize(m);
    run.timing.mode = "sequential";
    std::vector<AssembledProblem> systems(m);

    const auto origin = Clock::now();
    pool.parallel_for(m, [&](std::size_t i) { systems[i] = assemble_problem(workload[i]); });
    const double assembled = seconds_since(origin);
    pool.parallel_for(m, [&](std::size_t i) { run.results[i] = solve_problem(workload[i], std::move(systems[i])); });
    const double solved = seconds_since(origin);

    run.timing.assembly = assembled;
    run.timing.solve = solved - assembled;
    finish(run.timing, origin);
    return run;
}

BatchRun run_pipelined(const Workload& workload, const PipelineConfig& config) {
    config.validate(workload.size());
    WorkerPool assembly_pool(config.assembly_workers);
    WorkerPool solver_pool(config.solver_workers);

    BatchRun run;
    run.results.resize(workload.size());
    run.timing.mode = "pipelined";
    const auto origin = Clock::now();
    pipeline_range(workload, 0, workload.size(), config, assembly_pool, solver_pool, origin, run.results, run.timing);
    finish(run.timing, origin);
    return run;
}

BatchRun run_split(const Workload& workload, const PipelineConfig& config) {
    config.validate(workload.size());
    PANELOPT_REQUIRE(config.split_fraction > 0.0, ErrorCode::InvalidArgument, "split_fraction must be > 0");
    const std::size_t m = workload.size();
    const auto main_count =
        std::min(m, static_cast<std::size_t>(std::llround(config.split_fraction * static_cast<double>(m))));

    if (main_count == m) {
        BatchRun run = run_pipelined(workload, config);
        run.timing.mode = "split";
        return run;
    }

    WorkerPool assembly_pool(config.assembly_workers);
    WorkerPool solver_pool(config.solver_workers);
    WorkerPool secondary_pool(config.secondary_workers);

    BatchRun run;
    run.results.resize(m);
    run.timing.mode = "split";
    run.timing.split = config.split_fraction;

    const auto origin = Clock::now();
    std::exception_ptr secondary_error;
    std::thread secondary([&] {
        try {
            const std::size_t first = main_count;
            secondary_pool.parallel_for(m - first, [&](std::size_t i) {
                const std::size_t idx = first + i;
                run.results[idx] = solve_problem(workload[idx], assemble_problem(workload[idx]));
            });
            run.timing.secondary = seconds_since(origin);
        } catch (...) {
            secondary_error = std::current_exception();
        }
    });
    try {
        if (main_count > 0) {
            pipeline_range(workload, 0, main_count, config, assembly_pool, solver_pool, origin, run.results,
                           run.timing);
        }
    } catch (...) {
        secondary.join();
        throw;
    }
    secondary.join();
    if (secondary_error) std::rethrow_exception(secondary_error);
    finish(run.timing, origin);
    return run;
}

}  // namespace panelopt
