#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "panelopt/batch_pipeline.hpp"
#include "panelopt/bspline.hpp"

namespace panelopt {

using Rng = std::mt19937_64;

struct GaConfig {
    std::size_t population_size = 1000;
    std::size_t generations = 10;
    std::size_t tournament_size = 3;
    double mutation_sigma = 0.01;  // chord fractions
    double mutation_rate = 0.9;
    std::size_t elite_count = 2;
    std::uint64_t rng_seed = 1;
    std::size_t panels_per_airfoil = 200;
    std::size_t coefficients_per_surface = 8;
    double reynolds = 1e6;
    double invalid_fitness_penalty = -1e6;
    PipelineConfig pipeline;  // evaluation engine; num_slices is clamped to the batch size

    void validate() const;
};

struct Individual {
    BsplineGenome genome;
    std::optional<double> fitness;
    double cl = 0.0;
    double cd = 0.0;
    bool penalized = false;
};

struct GenerationLog {
    std::size_t generation = 0;
    double best_fitness = 0.0;
    double median_fitness = 0.0;
    double best_cl = 0.0;
    double best_cd = 0.0;
    std::size_t evaluated = 0;
    std::size_t penalized = 0;
    BsplineGenome best_genome;
    TimingReport timing;
};

struct EvolveResult {
    Individual best;                   // best ever seen
    GenerationLog initial;             // generation 0, the seeded population
    std::vector<GenerationLog> logs;   // generations 1..G
};

/// Scores one analysed problem: Cl/Cd, or the penalty when the problem failed
/// or produced a non-positive drag.
Individual score(Individual individual, const ProblemResult& result, const GaConfig& config);

/// Lift-to-drag ratio at zero incidence; failures map to the penalty.
double fitness(const Individual& individual, const GaConfig& config);

/// Best of k uniform draws with replacement; the first drawn wins ties.
const Individual& tournament_select(std::span<const Individual> population, std::size_t k, Rng& rng);

/// Children swap coefficient tails after `cut` in the flattened upper+lower vector.
std::pair<Individual, Individual> one_point_crossover_at(const Individual& a, const Individual& b, std::size_t cut);
std::pair<Individual, Individual> one_point_crossover(const Individual& a, const Individual& b, Rng& rng);

/// With probability mutation_rate perturbs exactly one free coefficient.
Individual mutate(Individual individual, const GaConfig& config, Rng& rng);

/// Symmetric genome fitted to NACA 0012.
BsplineGenome base_genome(std::size_t coefficients_per_surface);

EvolveResult evolve(const GaConfig& config);

inline constexpr const char* kGenerationCsvHeader =
    "generation,best_fitness,median_fitness,best_cl,best_cd,evaluated,penalized";
void write_generation_csv(std::ostream& out, const std::vector<GenerationLog>& logs);
void write_generation_timing_csv(std::ostream& out, const std::vector<GenerationLog>& logs);

}  // namespace panelopt
