#include "panelopt/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "panelopt/error.hpp"

namespace panelopt {

namespace {

Individual penalize(Individual ind, const GaConfig& config) {
    ind.fitness = config.invalid_fitness_penalty;
    ind.penalized = true;
    ind.cl = 0.0;
    ind.cd = 0.0;
    return ind;
}

std::optional<Airfoil> build_airfoil(const Individual& ind, const GaConfig& config) {
    try {
        return from_bspline(ind.genome, config.panels_per_airfoil, "ga");
    } catch (const Error& e) {
        if (e.code() == ErrorCode::InvalidGeometry) return std::nullopt;
        throw;
    }
}

// Evaluates every individual without a fitness as one batch.
TimingReport evaluate_population(std::vector<Individual>& population, const GaConfig& config,
                                 std::size_t& evaluated) {
    Workload workload;
    std::vector<std::size_t> owners;
    evaluated = 0;
    for (std::size_t i = 0; i < population.size(); ++i) {
        auto& ind = population[i];
        if (ind.fitness) continue;
        ++evaluated;
        auto airfoil = build_airfoil(ind, config);
        if (!airfoil) {
            ind = penalize(std::move(ind), config);
            continue;
        }
        workload.push_back(Problem{std::move(*airfoil), FlowCondition{1.0, 0.0}, config.reynolds});
        owners.push_back(i);
    }
    if (workload.empty()) return TimingReport{};

    PipelineConfig pipe = config.pipeline;
    pipe.num_slices = std::min(pipe.num_slices, workload.size());
    BatchRun run = run_pipelined(workload, pipe);
    for (std::size_t k = 0; k < owners.size(); ++k) {
        auto& ind = population[owners[k]];
        ind = score(std::move(ind), run.results[k], config);
    }
    return run.timing;
}

GenerationLog summarize(std::size_t generation, const std::vector<Individual>& population, std::size_t evaluated,
                        TimingReport timing) {
    GenerationLog log;
    log.generation = generation;
    log.evaluated = evaluated;
    log.timing = std::move(timing);

    std::vector<double> values;
    values.reserve(population.size());
    const Individual* best = &population.front();
    for (const auto& ind : population) {
        values.push_back(*ind.fitness);
        if (*ind.fitness > *best->fitness) best = &ind;
        if (ind.penalized) ++log.penalized;
    }
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    log.median_fitness = n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
    log.best_fitness = *best->fitness;
    log.best_cl = best->cl;
    log.best_cd = best->cd;
    log.best_genome = best->genome;
    return log;
}

}  // namespace

void GaConfig::validate() const {
    PANELOPT_REQUIRE(population_size >= 4, ErrorCode::InvalidArgument, "population_size must be >= 4");
    PANELOPT_REQUIRE(elite_count < population_size, ErrorCode::InvalidArgument,
                     "elite_count must be smaller than population_size");
    PANELOPT_REQUIRE(tournament_size >= 2, ErrorCode::InvalidArgument, "tournament_size must be >= 2");
    PANELOPT_REQUIRE(generations >= 1, ErrorCode::InvalidArgument, "generations must be >= 1");
    PANELOPT_REQUIRE(mutation_rate >= 0.0 && mutation_rate <= 1.0, ErrorCode::InvalidArgument,
                     "mutation_rate must lie in [0, 1]");
    PANELOPT_REQUIRE(mutation_sigma >= 0.0 && std::isfinite(mutation_sigma), ErrorCode::InvalidArgument,
                     "mutation_sigma must be >= 0");
    PANELOPT_REQUIRE(panels_per_airfoil >= 8 && panels_per_airfoil % 2 == 0, ErrorCode::InvalidArgument,
                     "panels_per_airfoil must be even and >= 8");
    PANELOPT_REQUIRE(coefficients_per_surface >= kBsplineDegree + 1, ErrorCode::InvalidArgument,
                     "coefficients_per_surface must be >= 4");
    PANELOPT_REQUIRE(reynolds > 0.0, ErrorCode::InvalidArgument, "reynolds must be > 0");
    PANELOPT_REQUIRE(invalid_fitness_penalty < 0.0, ErrorCode::InvalidArgument,
                     "invalid_fitness_penalty must be negative");
}

Individual score(Individual individual, const ProblemResult& result, const GaConfig& config) {
    if (!result.ok() || !result.analysis) return penalize(std::move(individual), config);
    const double cl = result.analysis->cl();
    const double cd = result.analysis->cd();
    if (!std::isfinite(cl) || !std::isfinite(cd) || cd <= 0.0) return penalize(std::move(individual), config);
    individual.cl = cl;
    individual.cd = cd;
    individual.fitness = cl / cd;
    individual.penalized = false;
    return individual;
}

double fitness(const Individual& individual, const GaConfig& config) {
    const auto airfoil = build_airfoil(individual, config);
    if (!airfoil) return config.invalid_fitness_penalty;
    const Problem problem{*airfoil, FlowCondition{1.0, 0.0}, config.reynolds};
    return *score(individual, solve_problem(problem, assemble_problem(problem)), config).fitness;
}

const Individual& tournament_select(std::span<const Individual> population, std::size_t k, Rng& rng) {
    PANELOPT_REQUIRE(!population.empty() && k >= 1, ErrorCode::InvalidArgument, "empty tournament");
    std::uniform_int_distribution<std::size_t> pick(0, population.size() - 1);
    const Individual* winner = &population[pick(rng)];
    for (std::size_t draw = 1; draw < k; ++draw) {
        const Individual& challenger = population[pick(rng)];
        if (challenger.fitness.value_or(-INFINITY) > winner->fitness.value_or(-INFINITY)) winner = &challenger;
    }
    return *winner;
}

std::pair<Individual, Individual> one_point_crossover_at(const Individual& a, const Individual& b, std::size_t cut) {
    PANELOPT_REQUIRE(a.genome.upper_coeffs.size() == b.genome.upper_coeffs.size() &&
                         a.genome.lower_coeffs.size() == b.genome.lower_coeffs.size(),
                     ErrorCode::ShapeMismatch, "parents have different coefficient counts");
    const auto fa = a.genome.flatten();
    const auto fb = b.genome.flatten();
    PANELOPT_REQUIRE(cut <= fa.size(), ErrorCode::InvalidArgument, "crossover cut out of range");

    std::vector<double> c1(fa.begin(), fa.begin() + static_cast<std::ptrdiff_t>(cut));
    std::vector<double> c2(fb.begin(), fb.begin() + static_cast<std::ptrdiff_t>(cut));
    c1.insert(c1.end(), fb.begin() + static_cast<std::ptrdiff_t>(cut), fb.end());
    c2.insert(c2.end(), fa.begin() + static_cast<std::ptrdiff_t>(cut), fa.end());

    const std::size_t nu = a.genome.upper_coeffs.size();
    Individual child1, child2;
    child1.genome = BsplineGenome::unflatten(c1, nu);
    child2.genome = BsplineGenome::unflatten(c2, nu);
    child1.genome.pin();
    child2.genome.pin();
    return {std::move(child1), std::move(child2)};
}

std::pair<Individual, Individual> one_point_crossover(const Individual& a, const Individual& b, Rng& rng) {
    PANELOPT_REQUIRE(a.genome.size() == b.genome.size() && a.genome.size() > 0, ErrorCode::ShapeMismatch,
                     "parents have different coefficient counts");
    std::uniform_int_distribution<std::size_t> pick(0, a.genome.size() - 1);
    return one_point_crossover_at(a, b, pick(rng));
}

Individual mutate(Individual individual, const GaConfig& config, Rng& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    if (!(coin(rng) < config.mutation_rate)) return individual;

    auto flat = individual.genome.flatten();
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < flat.size(); ++i) {
        if (!individual.genome.is_pinned(i)) free.push_back(i);
    }
    if (free.empty()) return individual;
    std::uniform_int_distribution<std::size_t> pick(0, free.size() - 1);
    std::normal_distribution<double> step(0.0, config.mutation_sigma);
    const std::size_t target = free[pick(rng)];
    flat[target] += step(rng);

    Individual out;
    out.genome = BsplineGenome::unflatten(flat, individual.genome.upper_coeffs.size());
    out.genome.degree = individual.genome.degree;
    return out;
}

BsplineGenome base_genome(std::size_t coefficients_per_surface) {
    auto fitted = fit_genome(naca4("0012", 200), coefficients_per_surface);
    return BsplineGenome::symmetric(std::move(fitted.upper_coeffs));
}

EvolveResult evolve(const GaConfig& config) {
    config.validate();
    Rng rng(config.rng_seed);
    std::normal_distribution<double> jitter(0.0, config.mutation_sigma);

    const BsplineGenome base = base_genome(config.coefficients_per_surface);
    std::vector<Individual> population(config.population_size);
    for (auto& ind : population) {
        auto flat = base.flatten();
        for (std::size_t i = 0; i < flat.size(); ++i) {
            if (!base.is_pinned(i)) flat[i] += jitter(rng);
        }
        ind.genome = BsplineGenome::unflatten(flat, base.upper_coeffs.size());
    }

    EvolveResult result;
    auto track_best = [&result](const std::vector<Individual>& pop) {
        for (const auto& ind : pop) {
            if (!result.best.fitness || *ind.fitness > *result.best.fitness) result.best = ind;
        }
    };

    std::size_t evaluated = 0;
    TimingReport timing = evaluate_population(population, config, evaluated);
    track_best(population);
    result.initial = summarize(0, population, evaluated, std::move(timing));

    std::vector<std::size_t> order(population.size());
    for (std::size_t gen = 1; gen <= config.generations; ++gen) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return *population[a].fitness > *population[b].fitness;
        });

        std::vector<Individual> next;
        next.reserve(population.size());
        for (std::size_t e = 0; e < config.elite_count; ++e) next.push_back(population[order[e]]);
        while (next.size() < population.size()) {
            const Individual& p1 = tournament_select(population, config.tournament_size, rng);
            const Individual& p2 = tournament_select(population, config.tournament_size, rng);
            auto [c1, c2] = one_point_crossover(p1, p2, rng);
            next.push_back(mutate(std::move(c1), config, rng));
            if (next.size() < population.size()) next.push_back(mutate(std::move(c2), config, rng));
        }
        population = std::move(next);

        timing = evaluate_population(population, config, evaluated);
        track_best(population);
        result.logs.push_back(summarize(gen, population, evaluated, std::move(timing)));
    }
    return result;
}

void write_generation_csv(std::ostream& out, const std::vector<GenerationLog>& logs) {
    out << kGenerationCsvHeader << '\n';
    char buf[256];
    for (const auto& g : logs) {
        std::snprintf(buf, sizeof buf, "%zu,%.10g,%.10g,%.10g,%.10g,%zu,%zu\n", g.generation, g.best_fitness,
                      g.median_fitness, g.best_cl, g.best_cd, g.evaluated, g.penalized);
        out << buf;
    }
}

void write_generation_timing_csv(std::ostream& out, const std::vector<GenerationLog>& logs) {
    out << "generation,slices,W_s,A_s,L_s,O_s\n";
    char buf[256];
    for (const auto& g : logs) {
        std::snprintf(buf, sizeof buf, "%zu,%zu,%.6f,%.6f,%.6f,%.6f\n", g.generation, g.timing.slices, g.timing.wall,
                      g.timing.assembly, g.timing.solve, g.timing.overhead);
        out << buf;
    }
}

}  // namespace panelopt
