#pragma once

#include "rlv/calibration.hpp"
#include "rlv/propellants.hpp"

namespace rlv {

/// Stage layout: two separate cylindrical tanks with hemispherical lids
/// (dome height = radius) stacked above the engine section.
struct StageGeometry {
    double radius = 0.0;                // m
    double fuel_cylinder_length = 0.0;  // m
    double ox_cylinder_length = 0.0;    // m
    double engine_length = 0.0;         // m
    double fuel_volume = 0.0;           // m^3, including ullage
    double ox_volume = 0.0;             // m^3, including ullage

    double dome_height() const { return radius; }
    double fuel_tank_length() const { return fuel_cylinder_length + 2.0 * radius; }
    double ox_tank_length() const { return ox_cylinder_length + 2.0 * radius; }
    double tank_section_length() const { return fuel_tank_length() + ox_tank_length(); }
    double total_length() const { return tank_section_length() + engine_length; }
    double fuel_tank_area() const;
    double ox_tank_area() const;
};

/// Tank geometry for `propellant_mass` at the given radius. A tank smaller
/// than a sphere of the stage radius keeps a zero-length cylinder.
StageGeometry size_stage(double propellant_mass, double rof, const PropellantCombo& combo,
                         double radius, double engine_length,
                         const Calibration& cal = shipped_calibration());

struct TankSpec {
    double radius = 0.0;           // m
    double cylinder_length = 0.0;  // m
    double pressure = 0.0;         // Pa, design pressure
    double material_strength = 0.0;  // Pa
    double material_density = 0.0;  // kg/m^3
    double safety_factor = 1.5;
    double min_gauge = 1.5e-3;     // m
    double reinforcement_fraction = 0.0;
};

struct TankMass {
    double shell = 0.0;          // kg
    double reinforcement = 0.0;  // kg
    double total() const { return shell + reinforcement; }
};

/// Barlow wall thickness for the cylinder and the spherical lids (half the
/// cylinder value), floored at the minimum gauge.
TankMass tank_mass(const TankSpec& spec);

struct InsulationMass {
    double fuel_tank = 0.0;  // kg
    double ox_tank = 0.0;    // kg
    double total() const { return fuel_tank + ox_tank; }
};

double insulation_areal_density(Fuel fuel, const Calibration& cal = shipped_calibration());

InsulationMass insulation_mass(const StageGeometry& geometry, const PropellantCombo& combo,
                               const Calibration& cal = shipped_calibration());

struct StageMassInputs {
    StageGeometry geometry{};
    PropellantCombo combo{};
    bool is_first_stage = false;
    bool landing_gear = false;  // retro-propulsive landing hardware
    int n_engines = 1;
    EnginePerformance engine{};    // per engine
    double interstage_length = 0.0;  // m, first stage only
};

struct StageMassBudget {
    double tank_fuel = 0.0;
    double tank_ox = 0.0;
    double reinforcement = 0.0;
    double insulation = 0.0;
    double thrust_frame = 0.0;
    double intertank = 0.0;
    double interstage = 0.0;
    double engines = 0.0;
    double tvc = 0.0;
    double landing_gear = 0.0;
    double margin = 0.0;
    double structural_mass = 0.0;  // sum of all of the above

    double propulsion() const { return engines + tvc; }
    /// Dry mass before landing gear and margin.
    double base_dry_mass() const {
        return tank_fuel + tank_ox + reinforcement + insulation + thrust_frame + intertank +
               interstage + engines + tvc;
    }
    double component_sum() const { return base_dry_mass() + landing_gear + margin; }
};

/// Sums all stage components. The landing-gear increment is applied to the
/// base dry mass first, then the margin to the result.
StageMassBudget assemble_stage_mass(const StageMassInputs& in,
                                    const Calibration& cal = shipped_calibration());

struct PayloadBay {
    double payload = 0.0;
    double fairing = 0.0;
    double avionics = 0.0;
    double adapter = 0.0;
    double fairing_length = 0.0;  // m

    double total() const { return payload + fairing + avionics + adapter; }
    /// Mass carried by the upper stage after fairing jettison.
    double after_fairing_jettison() const { return payload + avionics + adapter; }
};

PayloadBay payload_bay_mass(double payload, double fairing_diameter,
                            const Calibration& cal = shipped_calibration());

}  // namespace rlv
