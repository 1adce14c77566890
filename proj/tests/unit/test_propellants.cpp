#include <doctest.h>

#include <cmath>

#include "rlv/errors.hpp"
#include "rlv/propellants.hpp"
#include "rlv/validation.hpp"

using namespace rlv;

namespace {

// Exit Mach by bisection on the area-Mach relation.
double oracle_mach(double eps, double g) {
    auto area = [g](double m) {
        return std::pow(2.0 / (g + 1.0) * (1.0 + 0.5 * (g - 1.0) * m * m), (g + 1.0) / (2.0 * (g - 1.0))) / m;
    };
    double lo = 1.0, hi = 50.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (area(mid) < eps ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Vacuum Isp from the energy equation and the exit pressure force.
double oracle_isp_vac(const CombustionState& s, double eps) {
    const double g = s.gamma;
    const double big_gamma = std::sqrt(g) * std::pow(2.0 / (g + 1.0), (g + 1.0) / (2.0 * (g - 1.0)));
    const double rt = std::pow(s.c_star * big_gamma, 2.0);  // R T_c
    const double m = oracle_mach(eps, g);
    const double pe_pc = std::pow(1.0 + 0.5 * (g - 1.0) * m * m, -g / (g - 1.0));
    const double ve = std::sqrt(2.0 * g / (g - 1.0) * rt * (1.0 - std::pow(pe_pc, (g - 1.0) / g)));
    const double at = 1.0;
    const double mdot = s.p_c * at / s.c_star;
    return (ve + pe_pc * s.p_c * eps * at / mdot) / kG0;
}

EngineDesign rp1_engine(double throat = 0.3) {
    return {make_combo(Fuel::RP1), 97.0 * kBar, 2.36, throat, 16.0};
}

Calibration ideal_calibration() {
    Calibration c = shipped_calibration();
    c.isp_eff_ref_lh2 = c.isp_eff_ref_rp1 = c.isp_eff_ref_lch4 = 1.0;
    c.isp_eff_slope_lh2 = c.isp_eff_slope_rp1 = c.isp_eff_slope_lch4 = 0.0;
    return c;
}

}  // namespace

TEST_CASE("fuels and combos") {
    CHECK(parse_fuel("lh2") == Fuel::LH2);
    CHECK(parse_fuel("RP-1") == Fuel::RP1);
    CHECK(parse_fuel("CH4") == Fuel::LCH4);
    CHECK_THROWS_AS(parse_fuel("kerosine"), ConfigError);
    const auto c = make_combo(Fuel::LH2);
    CHECK(c.cryogenic_fuel);
    CHECK_FALSE(make_combo(Fuel::RP1).cryogenic_fuel);
    CHECK(c.fuel_density < make_combo(Fuel::LCH4).fuel_density);
}

TEST_CASE("equilibrium table lookup") {
    const ThermoTable& t = bundled_thermo_table();
    const auto rp1 = equilibrium_lookup(make_combo(Fuel::RP1), 97.0 * kBar, 2.36);
    CHECK(rp1.c_star == doctest::Approx(1800.0).epsilon(60.0 / 1800.0));

    const auto& g = t.grid(Fuel::LH2);
    const std::size_t ip = 3, ir = 5, nr = g.rof.size();
    const auto node = t.lookup(Fuel::LH2, g.p_c_bar[ip] * kBar, g.rof[ir]);
    CHECK(node.c_star == g.c_star[ip * nr + ir]);
    CHECK(node.gamma == g.gamma[ip * nr + ir]);
    CHECK(node.t_c == g.t_c[ip * nr + ir]);

    const auto& m = t.grid(Fuel::LCH4);
    const std::size_t mr = m.rof.size();
    const auto mid = t.lookup(Fuel::LCH4, m.p_c_bar[2] * kBar, 0.5 * (m.rof[4] + m.rof[5]));
    CHECK(mid.c_star == doctest::Approx(0.5 * (m.c_star[2 * mr + 4] + m.c_star[2 * mr + 5])).epsilon(1e-12));

    CHECK_THROWS_AS(t.lookup(Fuel::RP1, 5.0 * kBar, 2.3), OutOfTableRange);
    CHECK_THROWS_AS(t.lookup(Fuel::RP1, 100.0 * kBar, 9.0), OutOfTableRange);
}

TEST_CASE("ideal nozzle against an energy-equation oracle") {
    for (Fuel f : {Fuel::LH2, Fuel::RP1, Fuel::LCH4}) {
        const PropellantCombo c = make_combo(f);
        const double rof = f == Fuel::LH2 ? 6.0 : (f == Fuel::RP1 ? 2.3 : 3.0);
        for (double eps : {10.0, 25.0, 80.0, 200.0}) {
            const auto s = equilibrium_lookup(c, 110.0 * kBar, rof);
            const EngineDesign d{c, 110.0 * kBar, rof, 0.3, eps};
            const auto p = ideal_nozzle_performance(s, d);
            CHECK(p.isp_vac == doctest::Approx(oracle_isp_vac(s, eps)).epsilon(1e-6));
            CHECK(p.isp_sl < p.isp_vac);
            CHECK(p.exit_diameter == doctest::Approx(0.3 * std::sqrt(eps)));
        }
    }
    const auto s = equilibrium_lookup(make_combo(Fuel::RP1), 97.0 * kBar, 2.36);
    const auto small = ideal_nozzle_performance(s, rp1_engine(0.2));
    const auto big = ideal_nozzle_performance(s, rp1_engine(0.4));
    CHECK(big.thrust_vac == doctest::Approx(4.0 * small.thrust_vac).epsilon(1e-12));
    CHECK(big.isp_vac == doctest::Approx(small.isp_vac).epsilon(1e-12));
    CHECK(small.isp(0.0) > small.isp(1000.0));

    // overexpanded nozzle separates at sea level
    EngineDesign wide = rp1_engine();
    wide.expansion_ratio = 200.0;
    CHECK(ideal_nozzle_performance(s, wide).separation_at_sea_level);
    CHECK_FALSE(ideal_nozzle_performance(s, rp1_engine()).separation_at_sea_level);
    CHECK(exit_mach(1.0, 1.2) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("Isp correction") {
    const Calibration ideal = ideal_calibration();
    CHECK(isp_correction(300.0, 97.0 * kBar, Fuel::RP1, ideal) == 300.0);
    for (double pc : {50.0, 100.0, 200.0}) {
        const double e = isp_efficiency(pc * kBar, Fuel::LH2);
        CHECK(e >= 0.90);
        CHECK(e <= 1.0);
    }
}

TEST_CASE("gas generator cycle") {
    GasGeneratorAssumptions a = GasGeneratorAssumptions::from(shipped_calibration(), Fuel::RP1);
    EngineDesign d = rp1_engine();
    const double f = gas_generator_fraction(d, a);
    CHECK(f > 0.0);
    CHECK(f < 0.1);
    d.p_c = 150.0 * kBar;
    CHECK(gas_generator_fraction(d, a) > f);

    a.pump_pressure_rise_factor = 0.0;
    const auto s = equilibrium_lookup(d.combo, d.p_c, d.rof);
    const auto ideal = ideal_nozzle_performance(s, d);
    CHECK(gas_generator_fraction(d, a) == 0.0);
    const auto same = gas_generator_losses(ideal, s, d, a);
    CHECK(same.isp_vac == doctest::Approx(ideal.isp_vac).epsilon(1e-12));
    CHECK(same.gg_massflow_fraction == 0.0);
}

TEST_CASE("calibrated engines") {
    const Calibration& cal = shipped_calibration();
    // first stage of the Falcon 9 scenario
    const Genome g = falcon9_genome();
    const EngineDesign merlin{make_combo(Fuel::RP1), g.first.p_c, g.first.rof, g.first.throat_diameter,
                              g.first.expansion_ratio};
    const auto p = design_engine(merlin, cal);
    CHECK(p.isp_sl == doctest::Approx(282.0).epsilon(2.0 / 282.0));
    CHECK(p.isp_vac == doctest::Approx(310.0).epsilon(2.0 / 310.0));
    CHECK(p.thrust_vac / 1e3 == doctest::Approx(8536.0 / 9.0).epsilon(1e-9));

    const EngineDesign hydrolox{make_combo(Fuel::LH2), 115.0 * kBar, 6.5, 0.3, 200.0};
    CHECK(design_engine(hydrolox, cal).isp_vac == doctest::Approx(450.0).epsilon(3.0 / 450.0));

    // offsets shift Isp only
    const auto shifted = design_engine(merlin, cal, -5.0);
    CHECK(shifted.isp_vac == doctest::Approx(p.isp_vac - 5.0));
    CHECK(shifted.total_massflow == doctest::Approx(p.total_massflow));
    CHECK(p.length > 0.0);
}

TEST_CASE("engine mass correlation") {
    const double merlin = engine_mass(8536.0e3 / 9.0, Fuel::RP1, 16.0);
    CHECK(merlin == doctest::Approx(470.0).epsilon(0.15));
    const double one = engine_mass(500e3, Fuel::LH2, 30.0);
    const double two = engine_mass(1000e3, Fuel::LH2, 30.0);
    CHECK(two > one);
    CHECK(two < 2.0 * one);
    CHECK(engine_mass(1000e3, Fuel::LH2, 200.0) > engine_mass(1000e3, Fuel::LH2, 16.0));
    CHECK_THROWS_AS(engine_mass(50e3, Fuel::RP1, 16.0), CorrelationRangeExceeded);
    CHECK_THROWS_AS(engine_mass(4e6, Fuel::RP1, 16.0), CorrelationRangeExceeded);
}
