#include <doctest.h>

#include <cmath>

#include "rlv/errors.hpp"
#include "rlv/masses.hpp"
#include "rlv/missions.hpp"

using namespace rlv;

namespace {

TankSpec thin_tank(double radius, double length) {
    TankSpec s;
    s.radius = radius;
    s.cylinder_length = length;
    s.pressure = 3.5e5;
    s.material_strength = 400e6;
    s.material_density = 2700.0;
    s.min_gauge = 0.0;
    return s;
}

StageMassInputs sample_stage(bool first, bool gear) {
    const PropellantCombo c = make_combo(Fuel::RP1);
    StageMassInputs in;
    in.geometry = size_stage(300e3, 2.3, c, 1.83, 2.5);
    in.combo = c;
    in.is_first_stage = first;
    in.landing_gear = gear;
    in.n_engines = first ? 9 : 1;
    in.engine.thrust_vac = 900e3;
    in.engine.engine_mass = 500.0;
    in.interstage_length = first ? 4.0 : 0.0;
    return in;
}

}  // namespace

TEST_CASE("stage geometry") {
    const PropellantCombo c = make_combo(Fuel::LH2);
    const Calibration& cal = shipped_calibration();
    const auto g = size_stage(100e3, 6.0, c, 2.0, 3.0);
    const double fuel = 100e3 / 7.0, ox = 100e3 - fuel;
    CHECK(g.fuel_volume == doctest::Approx(fuel / c.fuel_density * (1.0 + cal.ullage_fraction)));
    CHECK(g.ox_volume == doctest::Approx(ox / c.ox_density * (1.0 + cal.ullage_fraction)));
    const double lid = 4.0 / 3.0 * kPi * 8.0;
    CHECK(kPi * 4.0 * g.fuel_cylinder_length + lid == doctest::Approx(g.fuel_volume));
    CHECK(g.total_length() == doctest::Approx(g.fuel_cylinder_length + g.ox_cylinder_length + 8.0 + 3.0));

    // a tank smaller than the sphere keeps a zero-length cylinder
    const auto tiny = size_stage(100.0, 6.0, c, 2.0, 0.0);
    CHECK(tiny.fuel_cylinder_length == 0.0);
    CHECK(tiny.ox_cylinder_length == 0.0);
    CHECK_THROWS_AS(size_stage(1.0, 6.0, c, 0.0, 0.0), NonPhysicalGeometry);
}

TEST_CASE("Barlow tank mass") {
    const TankMass a = tank_mass(thin_tank(1.5, 10.0));
    const TankMass b = tank_mass(thin_tank(3.0, 10.0));
    const TankMass a_lids = tank_mass(thin_tank(1.5, 0.0));
    const TankMass b_lids = tank_mass(thin_tank(3.0, 0.0));
    // cylinder: thickness and circumference both double
    CHECK(b.shell - b_lids.shell == doctest::Approx(4.0 * (a.shell - a_lids.shell)));

    // zero-length cylinder: two hemispheres with half the cylinder thickness
    const double t_lid = 1.5 * 3.5e5 * 1.5 / (2.0 * 400e6);
    CHECK(a_lids.shell == doctest::Approx(2700.0 * 4.0 * kPi * 1.5 * 1.5 * t_lid));

    TankSpec gauge = thin_tank(1.5, 10.0);
    gauge.min_gauge = 5e-3;
    CHECK(tank_mass(gauge).shell == doctest::Approx(2700.0 * 5e-3 * (2.0 * kPi * 1.5 * 10.0 + 4.0 * kPi * 1.5 * 1.5)));

    TankSpec reinforced = thin_tank(1.5, 10.0);
    reinforced.reinforcement_fraction = 0.2;
    CHECK(tank_mass(reinforced).reinforcement == doctest::Approx(0.2 * a.shell));
    CHECK_THROWS_AS(tank_mass(thin_tank(0.0, 1.0)), NonPhysicalGeometry);
}

TEST_CASE("insulation") {
    const Calibration stated{};  // 2.5 kg/m^2 for LH2 tanks
    CHECK(insulation_areal_density(Fuel::LH2, stated) * 100.0 == doctest::Approx(250.0));
    CHECK(insulation_areal_density(Fuel::RP1) == 0.0);

    StageGeometry g;
    g.radius = 2.0;
    g.fuel_cylinder_length = 10.0;
    g.ox_cylinder_length = 5.0;
    const auto rp1 = insulation_mass(g, make_combo(Fuel::RP1));
    CHECK(rp1.fuel_tank == 0.0);
    CHECK(insulation_mass(g, make_combo(Fuel::LH2)).fuel_tank >
          insulation_mass(g, make_combo(Fuel::LCH4)).fuel_tank);
}

TEST_CASE("stage mass budget") {
    Calibration flat = shipped_calibration();
    flat.margin_upper = 0.0;
    const auto upper = assemble_stage_mass(sample_stage(false, false), flat);
    CHECK(upper.margin == 0.0);
    CHECK(upper.structural_mass == doctest::Approx(upper.base_dry_mass()).epsilon(1e-14));
    CHECK(upper.interstage == 0.0);

    const auto plain = assemble_stage_mass(sample_stage(true, false));
    const auto geared = assemble_stage_mass(sample_stage(true, true));
    const double m = 1.0 + shipped_calibration().margin_first;
    CHECK(plain.landing_gear == 0.0);
    CHECK(geared.structural_mass / m == doctest::Approx(1.15 * plain.structural_mass / m).epsilon(1e-12));
    CHECK(geared.structural_mass == doctest::Approx(geared.component_sum()).epsilon(1e-14));
    CHECK(geared.tvc == doctest::Approx(0.15 * geared.engines));
    CHECK(geared.engines == doctest::Approx(9 * 500.0));
}

TEST_CASE("payload bay") {
    const auto bay = payload_bay_mass(5000.0, 3.66);
    CHECK(bay.total() / 1e3 == doctest::Approx(7.4).epsilon(0.1 / 7.4));
    CHECK(bay.after_fairing_jettison() == doctest::Approx(bay.total() - bay.fairing));
    const auto leo = payload_bay_mass(builtin_mission("LEO").payload_mass, 3.66);
    CHECK(leo.total() > leo.payload + 1000.0);
    const auto bare = payload_bay_mass(5000.0, 0.0);
    CHECK(bare.total() == doctest::Approx(5000.0 + 300.0 + 200.0));
    CHECK_THROWS_AS(payload_bay_mass(0.0, 3.66), DomainError);
}
