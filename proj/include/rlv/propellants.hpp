#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "rlv/calibration.hpp"
#include "rlv/constants.hpp"

namespace rlv {

/// Fuels burned with liquid oxygen.
enum class Fuel { LH2, RP1, LCH4 };

inline constexpr std::array kAllFuels{Fuel::LH2, Fuel::RP1, Fuel::LCH4};

std::string_view to_string(Fuel fuel);
/// Accepts "LH2", "RP1", "RP-1", "LCH4", "CH4" (case-insensitive).
Fuel parse_fuel(std::string_view name);

/// Mixture-ratio bounds of the design space.
Interval rof_bounds(Fuel fuel);

/// LOX/fuel pair with storage densities.
struct PropellantCombo {
    Fuel fuel = Fuel::RP1;
    double fuel_density = 0.0;  // kg/m^3
    double ox_density = 0.0;    // kg/m^3
    bool cryogenic_fuel = false;
    Interval rof_bounds{};
};

PropellantCombo make_combo(Fuel fuel, const Calibration& cal = shipped_calibration());

/// Chamber equilibrium state.
struct CombustionState {
    double p_c = 0.0;     // Pa
    double rof = 0.0;
    double c_star = 0.0;  // m/s
    double gamma = 0.0;   // isentropic exponent
    double t_c = 0.0;     // K
};

/// Equilibrium data on a rectangular (p_c, ROF) grid per fuel, bilinearly
/// interpolated. Immutable after construction.
class ThermoTable {
public:
    struct Grid {
        std::vector<double> p_c_bar;  // ascending
        std::vector<double> rof;      // ascending
        // row-major [p index][rof index]
        std::vector<double> c_star;
        std::vector<double> gamma;
        std::vector<double> t_c;
    };

    /// Parses the CSV layout `combo,p_c_bar,rof,c_star_mps,gamma,t_c_K`.
    static ThermoTable parse(std::string_view csv);

    /// Throws OutOfTableRange outside the grid hull.
    CombustionState lookup(Fuel fuel, double p_c, double rof) const;

    const Grid& grid(Fuel fuel) const { return grids_[static_cast<std::size_t>(fuel)]; }

private:
    std::array<Grid, 3> grids_;
};

/// Table compiled from data/thermo_tables.csv.
const ThermoTable& bundled_thermo_table();

CombustionState equilibrium_lookup(const PropellantCombo& combo, double p_c, double rof);

/// Gas-generator cycle assumptions. GG exhaust properties depend on the fuel.
struct GasGeneratorAssumptions {
    double max_turbine_pressure_ratio = 20.0;
    double turbine_efficiency = 0.50;
    double pump_efficiency = 0.50;
    double gg_temperature = 900.0;  // K
    double pump_pressure_rise_factor = 1.2;
    double gg_exhaust_velocity_fraction = 0.1;
    double gg_cp = 2270.0;  // J/(kg K)
    double gg_gamma = 1.2;

    static GasGeneratorAssumptions from(const Calibration& cal, Fuel fuel);
};

struct EngineDesign {
    PropellantCombo combo{};
    double p_c = 0.0;              // Pa
    double rof = 0.0;
    double throat_diameter = 0.0;  // m
    double expansion_ratio = 0.0;  // nozzle exit area / throat area

    double throat_area() const { return 0.25 * kPi * throat_diameter * throat_diameter; }
};

/// Single-engine performance. Isp is affine in ambient pressure:
/// isp(p) = isp_vac - isp_pressure_slope * p, and thrust(p) = isp(p) g0 mdot.
struct EnginePerformance {
    double isp_vac = 0.0;             // s
    double isp_sl = 0.0;              // s
    double thrust_vac = 0.0;          // N
    double thrust_sl = 0.0;           // N
    double total_massflow = 0.0;      // kg/s
    double core_massflow = 0.0;       // kg/s
    double gg_massflow_fraction = 0.0;
    double engine_mass = 0.0;         // kg
    double isp_pressure_slope = 0.0;  // s/Pa
    double exit_pressure = 0.0;       // Pa
    double exit_area = 0.0;           // m^2
    double exit_diameter = 0.0;       // m
    double length = 0.0;              // m
    bool separation_at_sea_level = false;

    double isp(double p_ambient) const { return isp_vac - isp_pressure_slope * p_ambient; }
    double thrust(double p_ambient) const { return isp(p_ambient) * kG0 * total_massflow; }
};

/// Supersonic exit Mach number for a nozzle area ratio (frozen gamma).
double exit_mach(double area_ratio, double gamma);

/// Frozen-gamma isentropic nozzle with the chamber state. The separation flag
/// is set when p_e < separation_ratio * p_ambient.
EnginePerformance ideal_nozzle_performance(const CombustionState& state,
                                           const EngineDesign& design,
                                           double p_ambient = kSeaLevelPressure,
                                           double separation_ratio = 0.3);

/// Multiplicative Isp efficiency for a chamber pressure, within [0.90, 1.0].
double isp_efficiency(double p_c, Fuel fuel, const Calibration& cal = shipped_calibration());

double isp_correction(double raw_isp, double p_c, Fuel fuel,
                      const Calibration& cal = shipped_calibration());

/// Applies isp_correction to every Isp of `perf`; mass flow is unchanged.
EnginePerformance apply_isp_correction(EnginePerformance perf, double p_c, Fuel fuel,
                                       const Calibration& cal = shipped_calibration());

/// Turbine flow needed to drive the pumps, as a fraction of total flow.
double gas_generator_fraction(const EngineDesign& design,
                              const GasGeneratorAssumptions& assumptions);

/// Open-cycle penalty. Throws CyclePowerInfeasible if the gas-generator
/// fraction exceeds 0.2.
EnginePerformance gas_generator_losses(EnginePerformance perf, const CombustionState& state,
                                       const EngineDesign& design,
                                       const GasGeneratorAssumptions& assumptions);

/// Engine mass correlation. Throws CorrelationRangeExceeded outside the
/// calibrated thrust range.
double engine_mass(double thrust_vac, Fuel fuel, double expansion_ratio,
                   const Calibration& cal = shipped_calibration());

/// Engine length: chamber/turbomachinery section plus a truncated conical
/// equivalent of the bell nozzle.
double engine_length(const EngineDesign& design, const Calibration& cal = shipped_calibration());

/// Full chain: equilibrium lookup, ideal nozzle, Isp correction, gas
/// generator losses, mass and length. `isp_offset` shifts every Isp by a
/// constant (sensitivity studies) keeping the mass flow.
EnginePerformance design_engine(const EngineDesign& design,
                                const Calibration& cal = shipped_calibration(),
                                double isp_offset = 0.0);

/// Throat diameter giving `thrust_vac` for otherwise fixed design
/// parameters (thrust scales with throat area).
double throat_diameter_for_thrust(EngineDesign design, double thrust_vac,
                                  const Calibration& cal = shipped_calibration());

}  // namespace rlv
