#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rlv/assembly.hpp"
#include "rlv/genome.hpp"
#include "rlv/staging.hpp"

namespace rlv {

inline constexpr double kPenaltyBase = 1.0e7;  // kg

struct GAConfig {
    int population = 5000;
    int generations = 50;
    int tournament_size = 3;
    double mating_prob = 0.3;
    double mutation_prob = 0.1;
    double gene_crossover_prob = 0.7;
    double gene_mutation_prob = 0.5;
    std::uint64_t seed = 1;
    double penalty_base = kPenaltyBase;
    int threads = 0;  // 0: hardware concurrency

    static GAConfig paper() { return {}; }
    static GAConfig desk() {
        GAConfig c;
        c.population = 200;
        c.generations = 30;
        return c;
    }

    /// Throws ConfigError on sizes < 1 or probabilities outside [0, 1].
    void validate() const;
};

/// Everything a fitness evaluation depends on besides the genome.
struct FitnessContext {
    MissionSpec mission{};
    ComboPair combos{};
    ObjectiveSpec objective{};
    AssemblyOptions options{};
    const Calibration* calibration = nullptr;  // shipped calibration if null

    const Calibration& cal() const { return calibration ? *calibration : shipped_calibration(); }
};

struct Evaluation {
    double fitness = 0.0;  // kg
    bool feasible = false;
    std::string constraint;  // failing constraint when infeasible
};

/// assemble_vehicle followed by objective_value. Never throws for model
/// failures: infeasible designs score penalty_base * (1 + violation).
Evaluation evaluate(const Genome& genome, const FitnessContext& ctx,
                    double penalty_base = kPenaltyBase);

double fitness(const Genome& genome, const FitnessContext& ctx, double penalty_base = kPenaltyBase);

struct GenerationStats {
    int generation = 0;
    double best = 0.0;   // best-ever fitness
    double mean = 0.0;   // population mean
    double feasible_fraction = 0.0;
};

struct OptimizationResult {
    GeneVector best_genes{};
    Genome best{};
    Evaluation best_evaluation{};
    VehicleDesign design{};
    std::vector<GenerationStats> history;
    std::uint64_t seed = 0;
    std::size_t evaluations = 0;  // distinct genomes assembled
};

struct RunOptions {
    /// Gene held at a fixed value in every individual (allocation sweeps).
    std::optional<std::pair<Gene, double>> frozen;
    /// Seeds the first individuals of the initial population.
    std::vector<GeneVector> initial_population;
    std::function<void(const GenerationStats&)> progress;
};

/// Generational GA: tournament selection, uniform crossover and per-gene
/// resampling mutation on the offspring, no elitism besides the best-ever
/// record. Throws NoFeasibleIndividual when the final population holds only
/// penalized individuals.
OptimizationResult run_ga(const FitnessContext& ctx, const GAConfig& config,
                          const RunOptions& run = {});

struct SweepPoint {
    double dv_stage1_ascent = 0.0;  // m/s
    bool feasible = false;
    double objective = 0.0;         // kg
    std::optional<OptimizationResult> result;
    std::string error;
};

/// One GA per grid point with the first-stage delta-v gene frozen. Failures
/// are recorded per point.
std::vector<SweepPoint> sweep_allocation(const FitnessContext& ctx, const std::vector<double>& grid,
                                         const GAConfig& config);

}  // namespace rlv
