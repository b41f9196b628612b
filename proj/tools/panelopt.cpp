#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "panelopt/bench_sweep.hpp"
#include "panelopt/config_file.hpp"
#include "panelopt/csv_export.hpp"
#include "panelopt/dat_io.hpp"
#include "panelopt/optimizer.hpp"
#include "panelopt/svg.hpp"

namespace fs = std::filesystem;
using namespace panelopt;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitFileError = 2;

// Raised for missing or unwritable files so main can map it to exit status 2.
struct FileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileError("cannot write " + path.string());
    out << text;
    if (!out) throw FileError("failed writing " + path.string());
}

fs::path prepare_out_dir(const std::string& dir) {
    const fs::path out(dir);
    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec) throw FileError("cannot create output directory " + out.string() + ": " + ec.message());
    return out;
}

void write_manifest(const fs::path& out, const std::string& subcommand, nlohmann::ordered_json config,
                    std::uint64_t seed, std::vector<std::string> inputs, std::vector<std::string> outputs,
                    nlohmann::ordered_json extra = nlohmann::ordered_json::object()) {
    nlohmann::ordered_json m;
    m["tool"] = "panelopt";
    m["version"] = PANELOPT_VERSION;
    m["subcommand"] = subcommand;
    m["seed"] = seed;
    m["config"] = std::move(config);
    m["inputs"] = std::move(inputs);
    m["outputs"] = std::move(outputs);
    for (auto& [k, v] : extra.items()) m[k] = v;
    write_text(out / "manifest.json", m.dump(2) + "\n");
}

template <typename Fn>
std::string to_string_via(Fn&& fn) {
    std::ostringstream s;
    fn(s);
    return s.str();
}

struct SolveArgs {
    std::string naca;
    std::string dat;
    double alpha_deg = 0.0;
    double reynolds = 1e6;
    std::size_t panels = 200;
    std::string out = "solve_out";
    std::uint64_t seed = 0;
};

int cmd_solve(const SolveArgs& a) {
    Airfoil airfoil = [&] {
        if (!a.dat.empty()) {
            if (!fs::exists(a.dat)) throw FileError("input file not found: " + a.dat);
            return read_dat_file(a.dat);
        }
        return naca4(a.naca, a.panels);
    }();
    const FlowCondition flow{1.0, a.alpha_deg * std::numbers::pi / 180.0};
    const Analysis result = analyze(airfoil, flow, a.reynolds);

    const fs::path out = prepare_out_dir(a.out);
    write_text(out / "cp.csv", to_string_via([&](auto& s) { write_cp_csv(s, airfoil, result); }));
    write_text(out / "bl_upper.csv", to_string_via([&](auto& s) {
                   write_boundary_layer_csv(s, result.viscous.upper_edge, result.viscous.upper);
               }));
    write_text(out / "bl_lower.csv", to_string_via([&](auto& s) {
                   write_boundary_layer_csv(s, result.viscous.lower_edge, result.viscous.lower);
               }));
    const std::string summary =
        to_string_via([&](auto& s) { write_summary_csv(s, airfoil, flow, a.reynolds, result); });
    write_text(out / "summary.csv", summary);
    write_text(out / "airfoil.svg", airfoil_svg(airfoil));

    nlohmann::ordered_json cfg;
    cfg["naca"] = a.naca;
    cfg["dat"] = a.dat;
    cfg["alpha_deg"] = a.alpha_deg;
    cfg["re"] = a.reynolds;
    cfg["n"] = a.panels;
    write_manifest(out, "solve", cfg, a.seed, a.dat.empty() ? std::vector<std::string>{} : std::vector{a.dat},
                   {"cp.csv", "bl_upper.csv", "bl_lower.csv", "summary.csv", "airfoil.svg"});
    std::cout << summary;
    return 0;
}

struct BenchArgs {
    std::size_t m = 4000;
    std::size_t panels = 200;
    std::vector<std::size_t> slices{1, 5, 10, 20};
    std::vector<double> splits{0.7, 0.75, 0.8};
    std::size_t assembly_workers = 1;
    std::size_t solver_workers = 1;
    std::size_t secondary_workers = 1;
    std::size_t split_slices = 10;
    double bandwidth = 0.0;
    std::size_t reps = 3;
    std::uint64_t seed = 1;
    std::string out = "bench_out";
};

int cmd_bench(const BenchArgs& a) {
    for (std::size_t s : a.slices) {
        PANELOPT_REQUIRE(s >= 1 && s <= a.m, ErrorCode::InvalidArgument,
                         "slice count " + std::to_string(s) + " must lie in [1, m]");
    }
    for (double f : a.splits) {
        PANELOPT_REQUIRE(f > 0.0 && f <= 1.0, ErrorCode::InvalidArgument, "split fractions must lie in (0, 1]");
    }
    const fs::path out = prepare_out_dir(a.out);
    PipelineConfig base;
    base.assembly_workers = a.assembly_workers;
    base.solver_workers = a.solver_workers;
    base.secondary_workers = a.secondary_workers;
    base.transfer_bytes_per_sec = a.bandwidth;
    base.num_slices = std::min(a.split_slices, a.m);
    base = apply_environment(base);

    const Workload workload = jittered_naca_workload(a.m, a.panels, a.seed);
    const auto rows = bench_sweep(workload, a.slices, a.splits, a.reps, base);
    write_text(out / "bench.csv", to_string_via([&](auto& s) { write_bench_csv(s, rows); }));
    std::cout << format_bench_table(rows);

    nlohmann::ordered_json cfg;
    cfg["m"] = a.m;
    cfg["n"] = a.panels;
    cfg["slices"] = a.slices;
    cfg["splits"] = a.splits;
    cfg["assembly_workers"] = base.assembly_workers;
    cfg["solver_workers"] = base.solver_workers;
    cfg["secondary_workers"] = base.secondary_workers;
    cfg["split_slices"] = base.num_slices;
    cfg["bandwidth"] = a.bandwidth;
    cfg["reps"] = a.reps;
    write_manifest(out, "bench", cfg, a.seed, {}, {"bench.csv"});
    return 0;
}

GaConfig load_ga_config(const fs::path& path) {
    if (!fs::exists(path)) throw FileError("config file not found: " + path.string());
    const auto file = ConfigFile::load(path);
    file.require_known({"population_size", "generations", "tournament_size", "mutation_sigma", "mutation_rate",
                        "elite_count", "seed", "panels_per_airfoil", "coefficients_per_surface", "reynolds",
                        "invalid_fitness_penalty", "num_slices", "assembly_workers", "solver_workers",
                        "transfer_bytes_per_sec"});
    GaConfig c;
    c.population_size = file.get_size("population_size", c.population_size);
    c.generations = file.get_size("generations", c.generations);
    c.tournament_size = file.get_size("tournament_size", c.tournament_size);
    c.mutation_sigma = file.get_double("mutation_sigma", c.mutation_sigma);
    c.mutation_rate = file.get_double("mutation_rate", c.mutation_rate);
    c.elite_count = file.get_size("elite_count", c.elite_count);
    c.rng_seed = file.get_u64("seed", c.rng_seed);
    c.panels_per_airfoil = file.get_size("panels_per_airfoil", c.panels_per_airfoil);
    c.coefficients_per_surface = file.get_size("coefficients_per_surface", c.coefficients_per_surface);
    c.reynolds = file.get_double("reynolds", c.reynolds);
    c.invalid_fitness_penalty = file.get_double("invalid_fitness_penalty", c.invalid_fitness_penalty);
    c.pipeline.num_slices = file.get_size("num_slices", c.pipeline.num_slices);
    c.pipeline.assembly_workers = file.get_size("assembly_workers", c.pipeline.assembly_workers);
    c.pipeline.solver_workers = file.get_size("solver_workers", c.pipeline.solver_workers);
    c.pipeline.transfer_bytes_per_sec = file.get_double("transfer_bytes_per_sec", c.pipeline.transfer_bytes_per_sec);
    return c;
}

struct OptimizeArgs {
    std::string config;
    std::string out = "optimize_out";
    std::optional<std::uint64_t> seed;
};

int run_optimize(GaConfig cfg, const std::string& config_path, const std::string& out_dir) {
    cfg.pipeline = apply_environment(cfg.pipeline);
    cfg.validate();
    const fs::path out = prepare_out_dir(out_dir);

    const EvolveResult result = evolve(cfg);
    std::vector<std::string> outputs;
    auto emit = [&](const GenerationLog& g) {
        char stem[32];
        std::snprintf(stem, sizeof stem, "gen_%03zu", g.generation);
        char name[64];
        std::snprintf(name, sizeof name, "best %s L/D %.4g", stem, g.best_fitness);
        const Airfoil best = from_bspline(g.best_genome, cfg.panels_per_airfoil, name);
        write_dat_file(out / (std::string(stem) + ".dat"), best);
        write_text(out / (std::string(stem) + ".svg"), airfoil_svg(best));
        outputs.push_back(std::string(stem) + ".dat");
        outputs.push_back(std::string(stem) + ".svg");
    };
    emit(result.initial);
    for (const auto& g : result.logs) emit(g);

    write_text(out / "generations.csv", to_string_via([&](auto& s) { write_generation_csv(s, result.logs); }));
    write_text(out / "timing.csv", to_string_via([&](auto& s) { write_generation_timing_csv(s, result.logs); }));
    outputs.push_back("generations.csv");
    outputs.push_back("timing.csv");

    nlohmann::ordered_json c;
    c["population_size"] = cfg.population_size;
    c["generations"] = cfg.generations;
    c["tournament_size"] = cfg.tournament_size;
    c["mutation_sigma"] = cfg.mutation_sigma;
    c["mutation_rate"] = cfg.mutation_rate;
    c["elite_count"] = cfg.elite_count;
    c["panels_per_airfoil"] = cfg.panels_per_airfoil;
    c["coefficients_per_surface"] = cfg.coefficients_per_surface;
    c["reynolds"] = cfg.reynolds;
    c["invalid_fitness_penalty"] = cfg.invalid_fitness_penalty;
    c["num_slices"] = cfg.pipeline.num_slices;
    c["assembly_workers"] = cfg.pipeline.assembly_workers;
    c["solver_workers"] = cfg.pipeline.solver_workers;
    c["transfer_bytes_per_sec"] = cfg.pipeline.transfer_bytes_per_sec;
    nlohmann::ordered_json extra;
    extra["initial_best_fitness"] = result.initial.best_fitness;
    extra["final_best_fitness"] = *result.best.fitness;
    write_manifest(out, "optimize", c, cfg.rng_seed, {config_path}, outputs, extra);

    std::printf("generation 0: best L/D %.6g\n", result.initial.best_fitness);
    for (const auto& g : result.logs) {
        std::printf("generation %zu: best L/D %.6g (cl %.4f, cd %.5f), %zu penalized\n", g.generation, g.best_fitness,
                    g.best_cl, g.best_cd, g.penalized);
    }
    return 0;
}

int cmd_optimize(const OptimizeArgs& a) {
    GaConfig cfg = load_ga_config(a.config);
    if (a.seed) cfg.rng_seed = *a.seed;
    return run_optimize(cfg, a.config, a.out);
}

// Re-runs a subcommand from the resolved values recorded in its manifest.
int cmd_replay(const std::string& manifest_path, const std::string& out_dir) {
    std::ifstream in(manifest_path);
    if (!in) throw FileError("manifest not found: " + manifest_path);
    nlohmann::json m;
    try {
        m = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ConfigParse, std::string("manifest is not valid JSON: ") + e.what());
    }
    const auto& c = m.at("config");
    const std::string sub = m.at("subcommand");
    if (sub == "solve") {
        SolveArgs a;
        a.naca = c.at("naca");
        a.dat = c.at("dat");
        a.alpha_deg = c.at("alpha_deg");
        a.reynolds = c.at("re");
        a.panels = c.at("n");
        a.seed = m.at("seed");
        a.out = out_dir;
        return cmd_solve(a);
    }
    if (sub == "bench") {
        BenchArgs a;
        a.m = c.at("m");
        a.panels = c.at("n");
        a.slices = c.at("slices").get<std::vector<std::size_t>>();
        a.splits = c.at("splits").get<std::vector<double>>();
        a.assembly_workers = c.at("assembly_workers");
        a.solver_workers = c.at("solver_workers");
        a.secondary_workers = c.at("secondary_workers");
        a.split_slices = c.at("split_slices");
        a.bandwidth = c.at("bandwidth");
        a.reps = c.at("reps");
        a.seed = m.at("seed");
        a.out = out_dir;
        return cmd_bench(a);
    }
    if (sub == "optimize") {
        GaConfig g;
        g.population_size = c.at("population_size");
        g.generations = c.at("generations");
        g.tournament_size = c.at("tournament_size");
        g.mutation_sigma = c.at("mutation_sigma");
        g.mutation_rate = c.at("mutation_rate");
        g.elite_count = c.at("elite_count");
        g.panels_per_airfoil = c.at("panels_per_airfoil");
        g.coefficients_per_surface = c.at("coefficients_per_surface");
        g.reynolds = c.at("reynolds");
        g.invalid_fitness_penalty = c.at("invalid_fitness_penalty");
        g.pipeline.num_slices = c.at("num_slices");
        g.pipeline.assembly_workers = c.at("assembly_workers");
        g.pipeline.solver_workers = c.at("solver_workers");
        g.pipeline.transfer_bytes_per_sec = c.at("transfer_bytes_per_sec");
        g.rng_seed = m.at("seed");
        return run_optimize(g, manifest_path, out_dir);
    }
    throw Error(ErrorCode::ConfigParse, "manifest names unknown subcommand '" + sub + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vortex panel airfoil analysis, batch pipeline benchmarks and GA shape optimization", "panelopt"};
    app.set_version_flag("--version", std::string(PANELOPT_VERSION));
    app.require_subcommand(1);

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "Analyse one airfoil");
    auto* naca = s->add_option("--naca", solve.naca, "NACA 4-digit code");
    auto* dat = s->add_option("--dat", solve.dat, "Selig .dat coordinate file");
    naca->excludes(dat);
    s->add_option("--alpha", solve.alpha_deg, "Angle of attack in degrees")->capture_default_str();
    s->add_option("--re", solve.reynolds, "Reynolds number")->capture_default_str();
    s->add_option("--n", solve.panels, "Panel count for NACA sections")->capture_default_str();
    s->add_option("--out", solve.out, "Output directory")->capture_default_str();
    s->add_option("--seed", solve.seed, "Recorded in the manifest; the analysis is deterministic");

    BenchArgs bench;
    auto* b = app.add_subcommand("bench", "Time sequential, pipelined and split batch execution");
    b->add_option("--m", bench.m, "Number of problems")->capture_default_str();
    b->add_option("--n", bench.panels, "Panels per airfoil")->capture_default_str();
    b->add_option("--slices", bench.slices, "Slice counts to sweep")->delimiter(',')->capture_default_str();
    b->add_option("--splits", bench.splits, "Split fractions to sweep")->delimiter(',')->capture_default_str();
    b->add_option("--split-slices", bench.split_slices, "Slices used on the pipelined share of split runs")
        ->capture_default_str();
    b->add_option("--assembly-workers", bench.assembly_workers)->capture_default_str();
    b->add_option("--solver-workers", bench.solver_workers)->capture_default_str();
    b->add_option("--secondary-workers", bench.secondary_workers)->capture_default_str();
    b->add_option("--bandwidth", bench.bandwidth, "Modeled transfer bandwidth in bytes/s (0 = infinite)")
        ->capture_default_str();
    b->add_option("--reps", bench.reps, "Repetitions per row; the median wall time is reported")
        ->capture_default_str();
    b->add_option("--seed", bench.seed, "Workload seed")->capture_default_str();
    b->add_option("--out", bench.out, "Output directory")->capture_default_str();

    OptimizeArgs opt;
    auto* o = app.add_subcommand("optimize", "Run the genetic shape optimizer");
    o->add_option("config", opt.config, "key = value configuration file")->required();
    o->add_option("--out", opt.out, "Output directory")->capture_default_str();
    o->add_option("--seed", opt.seed, "Overrides the seed in the config file");

    std::string replay_manifest;
    std::string replay_out = "replay_out";
    auto* r = app.add_subcommand("replay", "Re-run a subcommand from its manifest.json");
    r->add_option("manifest", replay_manifest, "manifest.json written by an earlier run")->required();
    r->add_option("--out", replay_out, "Output directory")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (s->parsed()) {
            if (solve.naca.empty() && solve.dat.empty()) {
                std::cerr << "error: solve needs --naca or --dat\n";
                return kExitFailure;
            }
            return cmd_solve(solve);
        }
        if (b->parsed()) return cmd_bench(bench);
        if (o->parsed()) return cmd_optimize(opt);
        if (r->parsed()) return cmd_replay(replay_manifest, replay_out);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed manifest: " << e.what() << '\n';
        return kExitFailure;
    } catch (const FileError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFileError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitFailure;
}
