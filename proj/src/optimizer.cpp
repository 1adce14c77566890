#include "rlv/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <random>
#include <thread>

#include "rlv/errors.hpp"

namespace rlv {

void GAConfig::validate() const {
    if (population < 1 || generations < 0 || tournament_size < 1) {
        throw ConfigError("GA population and tournament size must be >= 1, generations >= 0");
    }
    for (double p : {mating_prob, mutation_prob, gene_crossover_prob, gene_mutation_prob}) {
        if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("GA probabilities must lie in [0, 1]");
    }
    if (!(penalty_base > 0.0)) throw ConfigError("penalty base must be > 0");
}

Evaluation evaluate(const Genome& genome, const FitnessContext& ctx, double penalty_base) {
    try {
        const VehicleDesign d = assemble_vehicle(genome, ctx.combos, ctx.mission, ctx.options, ctx.cal());
        return {objective_value(d.masses(), ctx.objective), true, {}};
    } catch (const InfeasibleDesign& e) {
        return {penalty_base * (1.0 + std::max(0.0, e.violation())), false, e.constraint()};
    } catch (const Error& e) {
        return {penalty_base * 2.0, false, "model_error"};
    }
}

double fitness(const Genome& genome, const FitnessContext& ctx, double penalty_base) {
    return evaluate(genome, ctx, penalty_base).fitness;
}

namespace {

struct Individual {
    GeneVector genes{};
    Evaluation eval{};
    bool valid = false;
};

// Evaluates every invalid individual once per distinct genome, in parallel.
// Results only depend on the genomes, not on the number of workers.
class Evaluator {
public:
    Evaluator(const FitnessContext& ctx, const GAConfig& cfg) : ctx_(ctx), cfg_(cfg) {}

    void run(std::vector<Individual>& pop) {
        std::vector<GeneVector> todo;
        for (const auto& ind : pop) {
            if (!ind.valid && !cache_.count(ind.genes) &&
                std::find(todo.begin(), todo.end(), ind.genes) == todo.end()) {
                todo.push_back(ind.genes);
            }
        }
        std::vector<Evaluation> out(todo.size());
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t i; (i = next++) < todo.size();) {
                out[i] = evaluate(from_genes(todo[i]), ctx_, cfg_.penalty_base);
            }
        };
        const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
        const auto n = static_cast<std::size_t>(cfg_.threads > 0 ? cfg_.threads : static_cast<int>(hw));
        std::vector<std::thread> workers;
        for (std::size_t t = 1; t < std::min(n, todo.size()); ++t) workers.emplace_back(work);
        work();
        for (auto& w : workers) w.join();

        for (std::size_t i = 0; i < todo.size(); ++i) cache_.emplace(todo[i], out[i]);
        evaluations_ += todo.size();
        for (auto& ind : pop) {
            if (!ind.valid) {
                ind.eval = cache_.at(ind.genes);
                ind.valid = true;
            }
        }
    }

    std::size_t evaluations() const { return evaluations_; }

private:
    const FitnessContext& ctx_;
    const GAConfig& cfg_;
    std::map<GeneVector, Evaluation> cache_;
    std::size_t evaluations_ = 0;
};

}  // namespace

OptimizationResult run_ga(const FitnessContext& ctx, const GAConfig& cfg, const RunOptions& run) {
    cfg.validate();
    std::mt19937_64 rng(cfg.seed);
    const ComboPair& combos = ctx.combos;

    auto freeze = [&](GeneVector v) {
        if (run.frozen) {
            v[run.frozen->first] = run.frozen->second;
            const Interval r2 = radius2_bounds(v[kRadius1]);
            v[kRadius2] = std::clamp(v[kRadius2], r2.lo, r2.hi);
        }
        return v;
    };

    std::vector<Individual> pop(static_cast<std::size_t>(cfg.population));
    for (std::size_t i = 0; i < pop.size(); ++i) {
        pop[i].genes = freeze(i < run.initial_population.size()
                                  ? run.initial_population[i]
                                  : random_genes(combos, rng));
    }

    Evaluator evaluator(ctx, cfg);
    evaluator.run(pop);

    Individual best = *std::min_element(pop.begin(), pop.end(), [](const auto& a, const auto& b) {
        return a.eval.fitness < b.eval.fitness;
    });

    OptimizationResult result;
    result.seed = cfg.seed;

    std::uniform_int_distribution<std::size_t> pick(0, pop.size() - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    for (int gen = 1; gen <= cfg.generations; ++gen) {
        std::vector<Individual> off(pop.size());
        for (auto& o : off) {
            std::size_t winner = pick(rng);
            for (int k = 1; k < cfg.tournament_size; ++k) {
                const std::size_t c = pick(rng);
                if (pop[c].eval.fitness < pop[winner].eval.fitness) winner = c;
            }
            o = pop[winner];
        }
        for (std::size_t i = 1; i < off.size(); i += 2) {
            if (unit(rng) < cfg.mating_prob) {
                auto [a, b] = crossover(off[i - 1].genes, off[i].genes, combos,
                                        cfg.gene_crossover_prob, rng);
                a = freeze(a);
                b = freeze(b);
                if (a != off[i - 1].genes) off[i - 1] = {a, {}, false};
                if (b != off[i].genes) off[i] = {b, {}, false};
            }
        }
        for (auto& o : off) {
            if (unit(rng) < cfg.mutation_prob) {
                const GeneVector m = freeze(mutate(o.genes, combos, cfg.gene_mutation_prob, rng));
                if (m != o.genes) o = {m, {}, false};
            }
        }
        evaluator.run(off);
        pop = std::move(off);

        GenerationStats s;
        s.generation = gen;
        double sum = 0.0;
        int feasible = 0;
        for (const auto& ind : pop) {
            sum += ind.eval.fitness;
            feasible += ind.eval.feasible ? 1 : 0;
            if (ind.eval.fitness < best.eval.fitness) best = ind;
        }
        s.best = best.eval.fitness;
        s.mean = sum / static_cast<double>(pop.size());
        s.feasible_fraction = static_cast<double>(feasible) / static_cast<double>(pop.size());
        result.history.push_back(s);
        if (run.progress) run.progress(s);
    }

    const bool any_feasible =
        std::any_of(pop.begin(), pop.end(), [](const auto& ind) { return ind.eval.feasible; });
    if (!any_feasible || !best.eval.feasible) {
        throw NoFeasibleIndividual("no feasible design in the final population (best constraint: " +
                                   (best.eval.constraint.empty() ? "none" : best.eval.constraint) + ")");
    }
    result.best_genes = best.genes;
    result.best = from_genes(best.genes);
    result.best_evaluation = best.eval;
    result.design = assemble_vehicle(result.best, combos, ctx.mission, ctx.options, ctx.cal());
    result.evaluations = evaluator.evaluations();
    return result;
}

std::vector<SweepPoint> sweep_allocation(const FitnessContext& ctx, const std::vector<double>& grid,
                                         const GAConfig& config) {
    std::vector<SweepPoint> out;
    for (double dv1 : grid) {
        SweepPoint p;
        p.dv_stage1_ascent = dv1;
        RunOptions run;
        run.frozen = std::make_pair(kDv1, dv1);
        try {
            p.result = run_ga(ctx, config, run);
            p.feasible = true;
            p.objective = p.result->best_evaluation.fitness;
        } catch (const Error& e) {
            p.error = e.what();
        }
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace rlv
