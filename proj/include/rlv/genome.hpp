#pragma once

#include <array>
#include <random>
#include <string>
#include <string_view>

#include "rlv/propellants.hpp"

namespace rlv {

/// Design variables of one stage. SI units throughout.
struct StageGenes {
    double radius = 0.0;           // m
    double throat_diameter = 0.0;  // m
    double p_c = 0.0;              // Pa
    double expansion_ratio = 0.0;
    double rof = 0.0;
};

struct Genome {
    double dv_stage1_ascent = 0.0;  // m/s
    StageGenes first{};
    StageGenes upper{};
};

/// Fuel per stage, e.g. {RP1, LH2}.
struct ComboPair {
    Fuel first = Fuel::LH2;
    Fuel upper = Fuel::LH2;
};

std::string to_string(const ComboPair& combos);
/// "LH2/LH2", "RP1/LH2", or a single fuel for both stages.
ComboPair parse_combo_pair(std::string_view text);

enum Gene : std::size_t {
    kDv1,
    kRadius1,
    kRadius2,
    kThroat1,
    kThroat2,
    kPc1,
    kPc2,
    kEps1,
    kEps2,
    kRof1,
    kRof2,
    kGeneCount
};

using GeneVector = std::array<double, kGeneCount>;

struct GeneSpec {
    std::string_view name;   // human-readable, used in diagnostics
    std::string_view key;    // config key
    double lo = 0.0;
    double hi = 0.0;
    double step = 0.0;       // 0 for continuous genes
};

/// Static bounds of every gene. The upper radius is further limited to
/// [0.75, 1.0] x first radius, see radius2_bounds().
std::array<GeneSpec, kGeneCount> gene_specs(const ComboPair& combos);

Interval radius2_bounds(double radius1);

GeneVector to_genes(const Genome& g);
Genome from_genes(const GeneVector& v);

/// Throws ConfigError naming the first out-of-bounds gene, e.g.
/// "chamber pressure (first stage) 45 bar outside [50, 200] bar".
void check_bounds(const Genome& g, const ComboPair& combos);

/// Name and normalized distance outside bounds (0 when inside).
struct BoundsViolation {
    std::string gene;
    double violation = 0.0;
};
BoundsViolation bounds_violation(const Genome& g, const ComboPair& combos);

/// Snaps discrete genes to their lattice, clamps every gene into bounds and
/// moves the upper radius into its dependent interval.
GeneVector repair(GeneVector v, const ComboPair& combos);

/// Uniform draw on each gene's lattice (continuous genes uniform in range).
GeneVector random_genes(const ComboPair& combos, std::mt19937_64& rng);

/// Resamples each gene with probability `gene_prob`.
GeneVector mutate(const GeneVector& v, const ComboPair& combos, double gene_prob,
                  std::mt19937_64& rng);

/// Uniform crossover: swaps each gene pair with probability `gene_prob`,
/// then repairs both children.
std::pair<GeneVector, GeneVector> crossover(const GeneVector& a, const GeneVector& b,
                                            const ComboPair& combos, double gene_prob,
                                            std::mt19937_64& rng);

}  // namespace rlv
