#include "rlv/genome.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rlv/errors.hpp"

namespace rlv {

std::string to_string(const ComboPair& c) {
    return std::string(to_string(c.first)) + "/" + std::string(to_string(c.upper));
}

ComboPair parse_combo_pair(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            const Fuel f = parse_fuel(text);
            return {f, f};
        }
        return {parse_fuel(text.substr(0, slash)), parse_fuel(text.substr(slash + 1))};
    } catch (const Error& e) {
        throw ConfigError("propellant combination '" + std::string(text) + "': " + e.what());
    }
}

std::array<GeneSpec, kGeneCount> gene_specs(const ComboPair& c) {
    const Interval rof1 = rof_bounds(c.first);
    const Interval rof2 = rof_bounds(c.upper);
    return {{
        {"first-stage delta-v", "dv_stage1_ascent_mps", 2000.0, 5500.0, 100.0},
        {"stage radius (first stage)", "radius_m", 1.5, 4.0, 0.1},
        {"stage radius (upper stage)", "radius_m", 1.5, 4.0, 0.1},
        {"throat diameter (first stage)", "throat_diameter_m", 0.1, 1.0, 0.0},
        {"throat diameter (upper stage)", "throat_diameter_m", 0.1, 1.0, 0.0},
        {"chamber pressure (first stage)", "chamber_pressure_bar", 50.0 * kBar, 200.0 * kBar, 5.0 * kBar},
        {"chamber pressure (upper stage)", "chamber_pressure_bar", 20.0 * kBar, 200.0 * kBar, 5.0 * kBar},
        {"expansion ratio (first stage)", "expansion_ratio", 10.0, 90.0, 5.0},
        {"expansion ratio (upper stage)", "expansion_ratio", 80.0, 200.0, 5.0},
        {"mixture ratio (first stage)", "mixture_ratio", rof1.lo, rof1.hi, 0.1},
        {"mixture ratio (upper stage)", "mixture_ratio", rof2.lo, rof2.hi, 0.1},
    }};
}

Interval radius2_bounds(double radius1) {
    // on the 0.1 m lattice; 1e-9 absorbs representation error of r1
    const double lo = std::ceil(std::max(1.5, 0.75 * radius1) * 10.0 - 1e-9) / 10.0;
    return {lo, std::max(lo, radius1)};
}

GeneVector to_genes(const Genome& g) {
    return {g.dv_stage1_ascent,      g.first.radius,          g.upper.radius,
            g.first.throat_diameter, g.upper.throat_diameter, g.first.p_c,
            g.upper.p_c,             g.first.expansion_ratio, g.upper.expansion_ratio,
            g.first.rof,             g.upper.rof};
}

Genome from_genes(const GeneVector& v) {
    Genome g;
    g.dv_stage1_ascent = v[kDv1];
    g.first = {v[kRadius1], v[kThroat1], v[kPc1], v[kEps1], v[kRof1]};
    g.upper = {v[kRadius2], v[kThroat2], v[kPc2], v[kEps2], v[kRof2]};
    return g;
}

namespace {

std::string describe(const GeneSpec& s, double value) {
    const bool pressure = s.key == "chamber_pressure_bar";
    const double scale = pressure ? kBar : 1.0;
    const char* unit = pressure ? " bar" : s.key == "radius_m" || s.key == "throat_diameter_m" ? " m"
                                       : s.key == "dv_stage1_ascent_mps"                        ? " m/s"
                                                                                                : "";
    std::ostringstream os;
    os << s.name << " " << value / scale << unit << " outside [" << s.lo / scale << ", "
       << s.hi / scale << "]" << unit;
    return os.str();
}

// relative slack for values that went through unit conversions
constexpr double kSlack = 1e-9;

}  // namespace

BoundsViolation bounds_violation(const Genome& g, const ComboPair& combos) {
    const auto specs = gene_specs(combos);
    const GeneVector v = to_genes(g);
    BoundsViolation out;
    for (std::size_t i = 0; i < kGeneCount; ++i) {
        Interval b{specs[i].lo, specs[i].hi};
        if (i == kRadius2) {
            const double lo = std::max(1.5, 0.75 * v[kRadius1]);
            b = {lo, std::min(4.0, std::max(lo, v[kRadius1]))};
        }
        const double tol = kSlack * std::max(std::abs(b.lo), std::abs(b.hi));
        double d = 0.0;
        if (!(v[i] >= b.lo - tol)) d = (b.lo - v[i]) / specs[i].hi;
        if (!(v[i] <= b.hi + tol)) d = (v[i] - b.hi) / specs[i].hi;
        if (std::isnan(v[i])) d = 1.0;
        if (d > 0.0) {
            if (out.gene.empty()) out.gene = describe(specs[i], v[i]);
            out.violation += d;
        }
    }
    return out;
}

void check_bounds(const Genome& g, const ComboPair& combos) {
    const auto v = bounds_violation(g, combos);
    if (!v.gene.empty()) throw ConfigError(v.gene);
}

GeneVector repair(GeneVector v, const ComboPair& combos) {
    const auto specs = gene_specs(combos);
    for (std::size_t i = 0; i < kGeneCount; ++i) {
        const auto& s = specs[i];
        double x = std::clamp(v[i], s.lo, s.hi);
        if (s.step > 0.0) {
            x = s.lo + std::round((x - s.lo) / s.step) * s.step;
            x = std::clamp(x, s.lo, s.hi);
        }
        v[i] = x;
    }
    const Interval r2 = radius2_bounds(v[kRadius1]);
    v[kRadius2] = std::clamp(v[kRadius2], r2.lo, r2.hi);
    return v;
}

namespace {

double sample_gene(const GeneSpec& s, double lo, double hi, std::mt19937_64& rng) {
    if (s.step > 0.0) {
        const auto first = static_cast<long>(std::llround((lo - s.lo) / s.step));
        const auto last = static_cast<long>(std::llround((hi - s.lo) / s.step));
        std::uniform_int_distribution<long> pick(first, std::max(first, last));
        return s.lo + static_cast<double>(pick(rng)) * s.step;
    }
    std::uniform_real_distribution<double> pick(lo, hi);
    return pick(rng);
}

}  // namespace

GeneVector random_genes(const ComboPair& combos, std::mt19937_64& rng) {
    const auto specs = gene_specs(combos);
    GeneVector v{};
    for (std::size_t i = 0; i < kGeneCount; ++i) {
        if (i == kRadius2) continue;
        v[i] = sample_gene(specs[i], specs[i].lo, specs[i].hi, rng);
    }
    const Interval r2 = radius2_bounds(v[kRadius1]);
    v[kRadius2] = sample_gene(specs[kRadius2], r2.lo, r2.hi, rng);
    return repair(v, combos);
}

GeneVector mutate(const GeneVector& in, const ComboPair& combos, double gene_prob,
                  std::mt19937_64& rng) {
    const auto specs = gene_specs(combos);
    std::bernoulli_distribution coin(gene_prob);
    GeneVector v = in;
    for (std::size_t i = 0; i < kGeneCount; ++i) {
        if (!coin(rng)) continue;
        if (i == kRadius2) {
            const Interval r2 = radius2_bounds(v[kRadius1]);
            v[i] = sample_gene(specs[i], r2.lo, r2.hi, rng);
        } else {
            v[i] = sample_gene(specs[i], specs[i].lo, specs[i].hi, rng);
        }
    }
    return gene_prob > 0.0 ? repair(v, combos) : in;
}

std::pair<GeneVector, GeneVector> crossover(const GeneVector& a, const GeneVector& b,
                                            const ComboPair& combos, double gene_prob,
                                            std::mt19937_64& rng) {
    std::bernoulli_distribution coin(gene_prob);
    GeneVector x = a;
    GeneVector y = b;
    for (std::size_t i = 0; i < kGeneCount; ++i) {
        if (coin(rng)) std::swap(x[i], y[i]);
    }
    return {repair(x, combos), repair(y, combos)};
}

}  // namespace rlv
