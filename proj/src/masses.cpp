#include "rlv/masses.hpp"

#include <algorithm>
#include <cmath>

#include "rlv/errors.hpp"

namespace rlv {

namespace {

double tank_area(double radius, double cylinder_length) {
    return 2.0 * kPi * radius * cylinder_length + 4.0 * kPi * radius * radius;
}

double cylinder_length_for(double volume, double radius) {
    const double lids = 4.0 / 3.0 * kPi * radius * radius * radius;
    return std::max(0.0, (volume - lids) / (kPi * radius * radius));
}

}  // namespace

double StageGeometry::fuel_tank_area() const { return tank_area(radius, fuel_cylinder_length); }
double StageGeometry::ox_tank_area() const { return tank_area(radius, ox_cylinder_length); }

StageGeometry size_stage(double propellant_mass, double rof, const PropellantCombo& combo,
                         double radius, double engine_length, const Calibration& cal) {
    if (!(radius > 0.0) || propellant_mass < 0.0 || !(rof > 0.0)) {
        throw NonPhysicalGeometry("stage sizing needs radius > 0, propellant >= 0, ROF > 0");
    }
    StageGeometry g;
    g.radius = radius;
    g.engine_length = engine_length;
    const double fuel = propellant_mass / (1.0 + rof);
    const double ox = propellant_mass - fuel;
    g.fuel_volume = fuel / combo.fuel_density * (1.0 + cal.ullage_fraction);
    g.ox_volume = ox / combo.ox_density * (1.0 + cal.ullage_fraction);
    g.fuel_cylinder_length = cylinder_length_for(g.fuel_volume, radius);
    g.ox_cylinder_length = cylinder_length_for(g.ox_volume, radius);
    return g;
}

TankMass tank_mass(const TankSpec& s) {
    if (!(s.radius > 0.0) || s.cylinder_length < 0.0) {
        throw NonPhysicalGeometry("tank needs radius > 0 and cylinder length >= 0");
    }
    if (!(s.pressure > 0.0) || !(s.material_strength > 0.0)) {
        throw DomainError("tank pressure and material strength must be > 0");
    }
    const double t_cyl =
        std::max(s.safety_factor * s.pressure * s.radius / s.material_strength, s.min_gauge);
    const double t_lid = std::max(
        s.safety_factor * s.pressure * s.radius / (2.0 * s.material_strength), s.min_gauge);
    const double cyl_area = 2.0 * kPi * s.radius * s.cylinder_length;
    const double lid_area = 4.0 * kPi * s.radius * s.radius;
    TankMass m;
    m.shell = s.material_density * (cyl_area * t_cyl + lid_area * t_lid);
    m.reinforcement = s.reinforcement_fraction * m.shell;
    return m;
}

double insulation_areal_density(Fuel fuel, const Calibration& cal) {
    switch (fuel) {
        case Fuel::LH2: return cal.insulation_lh2;
        case Fuel::RP1: return cal.insulation_rp1;
        case Fuel::LCH4: return cal.insulation_lch4;
    }
    return 0.0;
}

InsulationMass insulation_mass(const StageGeometry& g, const PropellantCombo& combo,
                               const Calibration& cal) {
    return {insulation_areal_density(combo.fuel, cal) * g.fuel_tank_area(),
            cal.insulation_lox * g.ox_tank_area()};
}

StageMassBudget assemble_stage_mass(const StageMassInputs& in, const Calibration& cal) {
    if (in.n_engines < 1) throw DomainError("stage needs at least one engine");
    const StageGeometry& g = in.geometry;
    const double reinforcement = in.is_first_stage ? cal.reinforcement_first : cal.reinforcement_upper;

    auto tank = [&](double cylinder_length, double liquid_density) {
        TankSpec s;
        s.radius = g.radius;
        s.cylinder_length = cylinder_length;
        const double head = liquid_density * cal.tank_design_acceleration * kG0 *
                            (cylinder_length + 2.0 * g.radius);
        s.pressure = cal.tank_pressure + head;
        s.material_strength = cal.tank_strength;
        s.material_density = cal.tank_material_density;
        s.safety_factor = cal.tank_safety_factor;
        s.min_gauge = cal.tank_min_gauge;
        s.reinforcement_fraction = reinforcement;
        return tank_mass(s);
    };
    const TankMass fuel = tank(g.fuel_cylinder_length, in.combo.fuel_density);
    const TankMass ox = tank(g.ox_cylinder_length, in.combo.ox_density);

    StageMassBudget b;
    b.tank_fuel = fuel.shell;
    b.tank_ox = ox.shell;
    b.reinforcement = fuel.reinforcement + ox.reinforcement;
    b.insulation = insulation_mass(g, in.combo, cal).total();
    const double thrust_kn = in.n_engines * in.engine.thrust_vac / 1e3;
    b.thrust_frame = cal.thrust_frame_coeff * thrust_kn;
    b.intertank = cal.intertank_areal_density * 2.0 * kPi * g.radius * (2.0 * g.dome_height());
    b.interstage = in.is_first_stage
                       ? cal.interstage_areal_density * 2.0 * kPi * g.radius * in.interstage_length
                       : 0.0;
    b.engines = in.n_engines * in.engine.engine_mass;
    b.tvc = cal.tvc_fraction * b.engines;

    const double base = b.base_dry_mass();
    b.landing_gear = in.landing_gear ? cal.landing_gear_fraction * base : 0.0;
    const double margin = in.is_first_stage ? cal.margin_first : cal.margin_upper;
    b.margin = margin * (base + b.landing_gear);
    b.structural_mass = b.component_sum();
    return b;
}

PayloadBay payload_bay_mass(double payload, double fairing_diameter, const Calibration& cal) {
    if (!(payload > 0.0)) throw DomainError("payload mass must be > 0");
    if (fairing_diameter < 0.0) throw DomainError("fairing diameter must be >= 0");
    const double r = 0.5 * fairing_diameter;
    const double area = 2.0 * kPi * r * cal.fairing_cylinder_length +
                        kPi * r * std::hypot(r, cal.fairing_cone_length);
    PayloadBay bay;
    bay.payload = payload;
    bay.fairing = cal.fairing_areal_density * area;
    bay.avionics = cal.avionics_mass;
    bay.adapter = cal.adapter_mass;
    bay.fairing_length = cal.fairing_cylinder_length + cal.fairing_cone_length;
    return bay;
}

}  // namespace rlv
