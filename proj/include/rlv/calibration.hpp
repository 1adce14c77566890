#pragma once

#include <string>
#include <string_view>

namespace rlv {

/// Every tunable coefficient of the engine, mass and landing models.
///
/// Member defaults are the uncalibrated physical baseline. The coefficients
/// actually used by the toolkit come from data/calibration.txt (compiled in,
/// see shipped_calibration()), which was fitted once against the Falcon 9
/// comparison and the published optimized vehicles.
struct Calibration {
    // propellant storage densities [kg/m^3]
    double density_lox = 1141.0;
    double density_lh2 = 71.0;
    double density_rp1 = 810.0;
    double density_lch4 = 423.0;

    // fuel-rich gas-generator exhaust properties
    double gg_cp_lh2 = 8200.0;  // J/(kg K)
    double gg_gamma_lh2 = 1.36;
    double gg_cp_rp1 = 2270.0;
    double gg_gamma_rp1 = 1.20;
    double gg_cp_lch4 = 2500.0;
    double gg_gamma_lch4 = 1.22;

    // gas-generator cycle
    double turbine_pressure_ratio = 20.0;
    double turbine_efficiency = 0.50;
    double pump_efficiency = 0.50;
    double gg_temperature = 900.0;          // K
    double pump_pressure_rise_factor = 1.2; // pump delta-p / p_c
    double gg_exhaust_velocity_fraction = 0.1;

    // Isp efficiency eta = ref + slope * (p_c / 100 bar - 1), clamped to [0.9, 1]
    double isp_eff_ref_lh2 = 0.955;
    double isp_eff_slope_lh2 = 0.0;
    double isp_eff_ref_rp1 = 0.960;
    double isp_eff_slope_rp1 = 0.0;
    double isp_eff_ref_lch4 = 0.960;
    double isp_eff_slope_lch4 = 0.0;

    // nozzle and engine geometry
    double separation_pressure_ratio = 0.3;  // Summerfield criterion
    double nozzle_half_angle_deg = 15.0;
    double bell_length_fraction = 0.8;
    double engine_body_length_throats = 6.0;  // chamber + turbomachinery [throat diameters]

    // engine mass = coeff * (F_vac / kN)^exponent + nozzle_coeff * expansion_ratio
    double engine_mass_coeff_lh2 = 1.0;   // kg
    double engine_mass_coeff_rp1 = 0.8;   // kg
    double engine_mass_coeff_lch4 = 0.9;  // kg
    double engine_mass_exponent = 0.92;
    double engine_mass_nozzle_coeff = 1.0;  // kg
    double engine_thrust_min = 100.0e3;     // N
    double engine_thrust_max = 3.0e6;       // N

    // tanks
    double tank_pressure = 3.5e5;           // Pa
    double tank_design_acceleration = 0.0;  // g, hydrostatic head added to tank_pressure
    double tank_strength = 400.0e6;         // Pa
    double tank_material_density = 2700.0;  // kg/m^3
    double tank_safety_factor = 1.5;
    double tank_min_gauge = 1.5e-3;         // m
    double reinforcement_first = 0.30;
    double reinforcement_upper = 0.20;
    double ullage_fraction = 0.05;

    // insulation areal densities [kg/m^2]
    double insulation_lh2 = 2.5;
    double insulation_lox = 1.2;
    double insulation_lch4 = 1.2;
    double insulation_rp1 = 0.0;

    // secondary structure
    double thrust_frame_coeff = 0.3;           // kg per kN of stage vacuum thrust
    double intertank_areal_density = 15.0;     // kg/m^2
    double interstage_areal_density = 15.0;    // kg/m^2
    double tvc_fraction = 0.15;                // of engine mass
    double landing_gear_fraction = 0.15;       // of first-stage pre-gear dry mass
    double margin_first = 0.15;
    double margin_upper = 0.10;

    // payload bay
    double fairing_areal_density = 18.0;  // kg/m^2
    double fairing_cylinder_length = 6.5; // m
    double fairing_cone_length = 4.2;     // m
    double avionics_mass = 300.0;         // kg
    double adapter_mass = 200.0;          // kg

    // landing delta-v law: max(floor, anchor_landing + slope * (dv1 - anchor_ascent))
    double landing_anchor_ascent = 3500.0;  // m/s
    double landing_anchor_dv = 2000.0;      // m/s
    double landing_slope = 1.0;
    double landing_floor = 500.0;           // m/s
    double landing_burn_dv = 830.0;         // m/s, final burn; the reentry burn takes the rest
};

/// Parses `key = value unit` lines on top of `base`. Blank lines and `#`
/// comments are ignored; unknown keys and unit mismatches throw ConfigError.
Calibration parse_calibration(std::string_view text, const Calibration& base = {});

/// Reads and parses a calibration file.
Calibration load_calibration(const std::string& path, const Calibration& base = {});

/// Canonical text form, one line per coefficient.
std::string to_text(const Calibration& cal);

/// The compiled-in calibration (data/calibration.txt).
const Calibration& shipped_calibration();

}  // namespace rlv
