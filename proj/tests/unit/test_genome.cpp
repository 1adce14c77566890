#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include "rlv/errors.hpp"
#include "rlv/genome.hpp"

using namespace rlv;

namespace {

const ComboPair kCombos[] = {{Fuel::LH2, Fuel::LH2}, {Fuel::RP1, Fuel::LH2}, {Fuel::LCH4, Fuel::LCH4}};

bool on_lattice(double x, const GeneSpec& s) {
    if (s.step == 0.0) return true;
    const double k = (x - s.lo) / s.step;
    return std::abs(k - std::round(k)) < 1e-9;
}

void check_in_bounds(const GeneVector& v, const ComboPair& c) {
    const auto specs = gene_specs(c);
    for (std::size_t i = 0; i < kGeneCount; ++i) {
        CAPTURE(specs[i].name);
        CHECK(v[i] >= specs[i].lo);
        CHECK(v[i] <= specs[i].hi);
        CHECK(on_lattice(v[i], specs[i]));
    }
    const Interval r2 = radius2_bounds(v[kRadius1]);
    CHECK(v[kRadius2] >= r2.lo - 1e-12);
    CHECK(v[kRadius2] <= r2.hi + 1e-12);
}

GeneVector corner(const ComboPair& c, bool high) {
    GeneVector v{};
    const auto specs = gene_specs(c);
    for (std::size_t i = 0; i < kGeneCount; ++i) v[i] = high ? specs[i].hi : specs[i].lo;
    return repair(v, c);
}

}  // namespace

TEST_CASE("combo pairs") {
    CHECK(to_string(parse_combo_pair("RP1/LH2")) == "RP1/LH2");
    const auto one = parse_combo_pair("lch4");
    CHECK(one.first == Fuel::LCH4);
    CHECK(one.upper == Fuel::LCH4);
    CHECK_THROWS_AS(parse_combo_pair("RP1/LH2/LOX"), ConfigError);
}

TEST_CASE("gene conversion and bounds") {
    std::mt19937_64 rng(3);
    for (const auto& c : kCombos) {
        const GeneVector v = random_genes(c, rng);
        CHECK(to_genes(from_genes(v)) == v);
        check_in_bounds(v, c);
        CHECK(bounds_violation(from_genes(v), c).gene.empty());
    }
    Genome g = from_genes(corner(kCombos[0], false));
    CHECK_NOTHROW(check_bounds(g, kCombos[0]));
    g.first.p_c = 45.0 * kBar;
    try {
        check_bounds(g, kCombos[0]);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("chamber pressure") != std::string::npos);
    }
    const auto bv = bounds_violation(g, kCombos[0]);
    CHECK(bv.violation > 0.0);
}

TEST_CASE("radius coupling") {
    CHECK(radius2_bounds(2.0).lo == doctest::Approx(1.5));
    CHECK(radius2_bounds(4.0).lo == doctest::Approx(3.0));
    CHECK(radius2_bounds(4.0).hi == doctest::Approx(4.0));
    GeneVector v = corner(kCombos[0], true);
    v[kRadius1] = 2.0;
    v[kRadius2] = 3.5;
    CHECK(repair(v, kCombos[0])[kRadius2] == doctest::Approx(2.0));
}

TEST_CASE("operator identities") {
    std::mt19937_64 rng(11);
    const ComboPair c = kCombos[1];
    const GeneVector a = random_genes(c, rng);
    CHECK(mutate(a, c, 0.0, rng) == a);
    const auto [x, y] = crossover(a, a, c, 0.7, rng);
    CHECK(x == a);
    CHECK(y == a);

    // swapped genes stay with one of the parents
    const GeneVector b = random_genes(c, rng);
    const auto [p, q] = crossover(a, b, c, 1.0, rng);
    for (std::size_t i = 0; i < kGeneCount; ++i) {
        if (i == kRadius2) continue;  // may be repaired
        CHECK((p[i] == a[i] || p[i] == b[i]));
        CHECK(p[i] + q[i] == doctest::Approx(a[i] + b[i]));
    }
}

TEST_CASE("operators preserve bounds over 10^4 samples") {
    std::mt19937_64 rng(12345);
    for (const auto& c : kCombos) {
        GeneVector lo = corner(c, false), hi = corner(c, true);
        for (int i = 0; i < 10000; ++i) {
            lo = mutate(lo, c, 0.5, rng);
            check_in_bounds(lo, c);
            const auto [p, q] = crossover(lo, hi, c, 0.7, rng);
            check_in_bounds(p, c);
            check_in_bounds(q, c);
            hi = mutate(q, c, 0.5, rng);
            check_in_bounds(hi, c);
            if (i % 997 == 0) {
                lo = corner(c, false);
                hi = corner(c, true);
            }
        }
    }
}
