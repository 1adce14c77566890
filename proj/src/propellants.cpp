#include "rlv/propellants.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "rlv/errors.hpp"
#include "rlv/resources.hpp"

namespace rlv {

std::string_view to_string(Fuel fuel) {
    switch (fuel) {
        case Fuel::LH2: return "LH2";
        case Fuel::RP1: return "RP1";
        case Fuel::LCH4: return "LCH4";
    }
    return "?";
}

Fuel parse_fuel(std::string_view name) {
    std::string up;
    for (char c : name) {
        if (c != '-') up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    if (up == "LH2") return Fuel::LH2;
    if (up == "RP1") return Fuel::RP1;
    if (up == "LCH4" || up == "CH4") return Fuel::LCH4;
    throw ConfigError("unknown fuel '" + std::string(name) + "'");
}

Interval rof_bounds(Fuel fuel) {
    switch (fuel) {
        case Fuel::LH2: return {4.0, 7.9};
        case Fuel::RP1: return {1.5, 3.5};
        case Fuel::LCH4: return {2.0, 4.0};
    }
    return {};
}

PropellantCombo make_combo(Fuel fuel, const Calibration& cal) {
    PropellantCombo c;
    c.fuel = fuel;
    c.ox_density = cal.density_lox;
    c.rof_bounds = rof_bounds(fuel);
    switch (fuel) {
        case Fuel::LH2:
            c.fuel_density = cal.density_lh2;
            c.cryogenic_fuel = true;
            break;
        case Fuel::RP1:
            c.fuel_density = cal.density_rp1;
            c.cryogenic_fuel = false;
            break;
        case Fuel::LCH4:
            c.fuel_density = cal.density_lch4;
            c.cryogenic_fuel = true;
            break;
    }
    return c;
}

// ---------------------------------------------------------------------------
// Thermochemistry table

namespace {

double parse_double(std::string_view s, int line) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ConfigError("thermo table line " + std::to_string(line) + ": bad number '" +
                          std::string(s) + "'");
    }
    return v;
}

struct Row {
    double p, rof, c_star, gamma, t_c;
};

// Index of the cell [i, i+1] containing x and the weight of node i+1.
std::pair<std::size_t, double> locate(const std::vector<double>& nodes, double x) {
    auto it = std::upper_bound(nodes.begin(), nodes.end(), x);
    std::size_t i = it == nodes.begin() ? 0 : static_cast<std::size_t>(it - nodes.begin()) - 1;
    if (i + 1 >= nodes.size()) i = nodes.size() - 2;
    const double w = (x - nodes[i]) / (nodes[i + 1] - nodes[i]);
    return {i, w};
}

}  // namespace

ThermoTable ThermoTable::parse(std::string_view csv) {
    std::array<std::vector<Row>, 3> rows;
    int line_no = 0;
    bool header = true;
    while (!csv.empty()) {
        const auto eol = csv.find('\n');
        std::string_view line = csv.substr(0, eol);
        csv = eol == std::string_view::npos ? std::string_view{} : csv.substr(eol + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        std::array<std::string_view, 6> cols;
        std::size_t n = 0;
        while (n < cols.size()) {
            const auto comma = line.find(',');
            cols[n++] = line.substr(0, comma);
            if (comma == std::string_view::npos) break;
            line = line.substr(comma + 1);
        }
        if (n != cols.size()) {
            throw ConfigError("thermo table line " + std::to_string(line_no) + ": expected 6 columns");
        }
        const Fuel fuel = parse_fuel(cols[0]);
        rows[static_cast<std::size_t>(fuel)].push_back(
            {parse_double(cols[1], line_no), parse_double(cols[2], line_no),
             parse_double(cols[3], line_no), parse_double(cols[4], line_no),
             parse_double(cols[5], line_no)});
    }

    ThermoTable table;
    for (std::size_t f = 0; f < rows.size(); ++f) {
        auto& g = table.grids_[f];
        for (const auto& r : rows[f]) {
            g.p_c_bar.push_back(r.p);
            g.rof.push_back(r.rof);
        }
        for (auto* v : {&g.p_c_bar, &g.rof}) {
            std::sort(v->begin(), v->end());
            v->erase(std::unique(v->begin(), v->end()), v->end());
        }
        const std::size_t np = g.p_c_bar.size();
        const std::size_t nr = g.rof.size();
        if (np < 2 || nr < 2 || rows[f].size() != np * nr) {
            throw ConfigError("thermo table for " + std::string(to_string(static_cast<Fuel>(f))) +
                              " is not a complete rectangular grid");
        }
        g.c_star.assign(np * nr, 0.0);
        g.gamma.assign(np * nr, 0.0);
        g.t_c.assign(np * nr, 0.0);
        for (const auto& r : rows[f]) {
            const auto i = static_cast<std::size_t>(
                std::lower_bound(g.p_c_bar.begin(), g.p_c_bar.end(), r.p) - g.p_c_bar.begin());
            const auto j = static_cast<std::size_t>(
                std::lower_bound(g.rof.begin(), g.rof.end(), r.rof) - g.rof.begin());
            g.c_star[i * nr + j] = r.c_star;
            g.gamma[i * nr + j] = r.gamma;
            g.t_c[i * nr + j] = r.t_c;
        }
    }
    return table;
}

CombustionState ThermoTable::lookup(Fuel fuel, double p_c, double rof) const {
    const Grid& g = grid(fuel);
    const double p_bar = p_c / kBar;
    if (!(p_bar >= g.p_c_bar.front() && p_bar <= g.p_c_bar.back() && rof >= g.rof.front() &&
          rof <= g.rof.back())) {
        throw OutOfTableRange("equilibrium table " + std::string(to_string(fuel)) +
                              ": (p_c = " + std::to_string(p_bar) + " bar, ROF = " +
                              std::to_string(rof) + ") outside grid");
    }
    const auto [i, wp] = locate(g.p_c_bar, p_bar);
    const auto [j, wr] = locate(g.rof, rof);
    const std::size_t nr = g.rof.size();
    auto interp = [&](const std::vector<double>& v) {
        const double lo = (1.0 - wr) * v[i * nr + j] + wr * v[i * nr + j + 1];
        const double hi = (1.0 - wr) * v[(i + 1) * nr + j] + wr * v[(i + 1) * nr + j + 1];
        return (1.0 - wp) * lo + wp * hi;
    };
    return {p_c, rof, interp(g.c_star), interp(g.gamma), interp(g.t_c)};
}

const ThermoTable& bundled_thermo_table() {
    static const ThermoTable table = ThermoTable::parse(resources::thermo_tables_csv());
    return table;
}

CombustionState equilibrium_lookup(const PropellantCombo& combo, double p_c, double rof) {
    return bundled_thermo_table().lookup(combo.fuel, p_c, rof);
}

// ---------------------------------------------------------------------------
// Nozzle

namespace {

double area_ratio_of_mach(double mach, double gamma) {
    const double k = (gamma + 1.0) / (2.0 * (gamma - 1.0));
    return std::pow((2.0 / (gamma + 1.0)) * (1.0 + 0.5 * (gamma - 1.0) * mach * mach), k) / mach;
}

}  // namespace

double exit_mach(double area_ratio, double gamma) {
    if (!(area_ratio >= 1.0) || !(gamma > 1.0)) {
        throw DomainError("exit_mach: need area ratio >= 1 and gamma > 1");
    }
    // area ratio is monotone increasing in Mach on the supersonic branch
    double lo = 1.0;
    double hi = 2.0;
    while (area_ratio_of_mach(hi, gamma) < area_ratio) hi *= 2.0;
    for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (area_ratio_of_mach(mid, gamma) < area_ratio ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

EnginePerformance ideal_nozzle_performance(const CombustionState& state,
                                           const EngineDesign& design, double p_ambient,
                                           double separation_ratio) {
    if (p_ambient < 0.0) throw DomainError("ambient pressure must be >= 0");
    if (!(design.throat_diameter > 0.0)) throw DomainError("throat diameter must be > 0");
    const double g = state.gamma;
    const double eps = design.expansion_ratio;
    const double mach = exit_mach(eps, g);
    const double pr = std::pow(1.0 + 0.5 * (g - 1.0) * mach * mach, -g / (g - 1.0));
    const double momentum_term =
        std::sqrt(2.0 * g * g / (g - 1.0) * std::pow(2.0 / (g + 1.0), (g + 1.0) / (g - 1.0)) *
                  (1.0 - std::pow(pr, (g - 1.0) / g)));
    const double cf_vac = momentum_term + eps * pr;

    EnginePerformance perf;
    const double a_t = design.throat_area();
    perf.core_massflow = state.p_c * a_t / state.c_star;
    perf.total_massflow = perf.core_massflow;
    perf.exit_area = eps * a_t;
    perf.exit_diameter = design.throat_diameter * std::sqrt(eps);
    perf.exit_pressure = pr * state.p_c;
    perf.isp_vac = state.c_star * cf_vac / kG0;
    perf.isp_pressure_slope = perf.exit_area / (perf.total_massflow * kG0);
    perf.isp_sl = perf.isp(kSeaLevelPressure);
    perf.thrust_vac = perf.thrust(0.0);
    perf.thrust_sl = perf.thrust(kSeaLevelPressure);
    perf.separation_at_sea_level = perf.exit_pressure < separation_ratio * p_ambient;
    return perf;
}

// ---------------------------------------------------------------------------
// Corrections

double isp_efficiency(double p_c, Fuel fuel, const Calibration& cal) {
    double ref = 1.0;
    double slope = 0.0;
    switch (fuel) {
        case Fuel::LH2: ref = cal.isp_eff_ref_lh2; slope = cal.isp_eff_slope_lh2; break;
        case Fuel::RP1: ref = cal.isp_eff_ref_rp1; slope = cal.isp_eff_slope_rp1; break;
        case Fuel::LCH4: ref = cal.isp_eff_ref_lch4; slope = cal.isp_eff_slope_lch4; break;
    }
    return std::clamp(ref + slope * (p_c / (100.0 * kBar) - 1.0), 0.90, 1.0);
}

double isp_correction(double raw_isp, double p_c, Fuel fuel, const Calibration& cal) {
    return raw_isp * isp_efficiency(p_c, fuel, cal);
}

namespace {

EnginePerformance scale_isp(EnginePerformance perf, double factor) {
    perf.isp_vac *= factor;
    perf.isp_pressure_slope *= factor;
    perf.isp_sl = perf.isp(kSeaLevelPressure);
    perf.thrust_vac = perf.thrust(0.0);
    perf.thrust_sl = perf.thrust(kSeaLevelPressure);
    return perf;
}

}  // namespace

EnginePerformance apply_isp_correction(EnginePerformance perf, double p_c, Fuel fuel,
                                       const Calibration& cal) {
    return scale_isp(perf, isp_efficiency(p_c, fuel, cal));
}

GasGeneratorAssumptions GasGeneratorAssumptions::from(const Calibration& cal, Fuel fuel) {
    GasGeneratorAssumptions a;
    a.max_turbine_pressure_ratio = cal.turbine_pressure_ratio;
    a.turbine_efficiency = cal.turbine_efficiency;
    a.pump_efficiency = cal.pump_efficiency;
    a.gg_temperature = cal.gg_temperature;
    a.pump_pressure_rise_factor = cal.pump_pressure_rise_factor;
    a.gg_exhaust_velocity_fraction = cal.gg_exhaust_velocity_fraction;
    switch (fuel) {
        case Fuel::LH2: a.gg_cp = cal.gg_cp_lh2; a.gg_gamma = cal.gg_gamma_lh2; break;
        case Fuel::RP1: a.gg_cp = cal.gg_cp_rp1; a.gg_gamma = cal.gg_gamma_rp1; break;
        case Fuel::LCH4: a.gg_cp = cal.gg_cp_lch4; a.gg_gamma = cal.gg_gamma_lch4; break;
    }
    return a;
}

double gas_generator_fraction(const EngineDesign& design, const GasGeneratorAssumptions& a) {
    if (!(a.pump_efficiency > 0.0 && a.turbine_efficiency > 0.0 &&
          a.max_turbine_pressure_ratio > 1.0 && a.gg_gamma > 1.0 && a.gg_cp > 0.0)) {
        throw DomainError("invalid gas-generator assumptions");
    }
    // pump work per kg of propellant pumped (turbine flow is pumped too, so the
    // fraction is independent of the engine size)
    const double rof = design.rof;
    const double specific_volume = 1.0 / ((1.0 + rof) * design.combo.fuel_density) +
                                   rof / ((1.0 + rof) * design.combo.ox_density);
    const double pump_work =
        specific_volume * a.pump_pressure_rise_factor * design.p_c / a.pump_efficiency;
    const double expansion =
        1.0 - std::pow(a.max_turbine_pressure_ratio, -(a.gg_gamma - 1.0) / a.gg_gamma);
    const double turbine_work = a.gg_cp * a.gg_temperature * a.turbine_efficiency * expansion;
    return pump_work / turbine_work;
}

EnginePerformance gas_generator_losses(EnginePerformance perf, const CombustionState& /*state*/,
                                       const EngineDesign& design,
                                       const GasGeneratorAssumptions& assumptions) {
    const double f = gas_generator_fraction(design, assumptions);
    if (f > 0.2) {
        throw CyclePowerInfeasible("gas-generator flow fraction " + std::to_string(f) +
                                   " exceeds 0.2");
    }
    perf.gg_massflow_fraction = f;
    perf.total_massflow = perf.core_massflow / (1.0 - f);
    // Isp per total flow: the dumped turbine exhaust leaves at a fraction of
    // the core exhaust velocity. The exit-area pressure term is spread over
    // the larger flow.
    const double factor = 1.0 - (1.0 - assumptions.gg_exhaust_velocity_fraction) * f;
    perf = scale_isp(perf, factor);
    perf.isp_pressure_slope *= (1.0 - f) / factor;
    perf.isp_sl = perf.isp(kSeaLevelPressure);
    perf.thrust_sl = perf.thrust(kSeaLevelPressure);
    return perf;
}

double engine_mass(double thrust_vac, Fuel fuel, double expansion_ratio, const Calibration& cal) {
    if (!(thrust_vac >= cal.engine_thrust_min && thrust_vac <= cal.engine_thrust_max)) {
        throw CorrelationRangeExceeded("engine thrust " + std::to_string(thrust_vac / 1e3) +
                                       " kN outside mass correlation range");
    }
    double coeff = 0.0;
    switch (fuel) {
        case Fuel::LH2: coeff = cal.engine_mass_coeff_lh2; break;
        case Fuel::RP1: coeff = cal.engine_mass_coeff_rp1; break;
        case Fuel::LCH4: coeff = cal.engine_mass_coeff_lch4; break;
    }
    return coeff * std::pow(thrust_vac / 1e3, cal.engine_mass_exponent) +
           cal.engine_mass_nozzle_coeff * expansion_ratio;
}

double engine_length(const EngineDesign& design, const Calibration& cal) {
    const double r_t = 0.5 * design.throat_diameter;
    const double r_e = r_t * std::sqrt(design.expansion_ratio);
    const double cone = (r_e - r_t) / std::tan(cal.nozzle_half_angle_deg * kPi / 180.0);
    return cal.engine_body_length_throats * design.throat_diameter +
           cal.bell_length_fraction * cone;
}

EnginePerformance design_engine(const EngineDesign& design, const Calibration& cal,
                                double isp_offset) {
    const CombustionState state = equilibrium_lookup(design.combo, design.p_c, design.rof);
    EnginePerformance perf =
        ideal_nozzle_performance(state, design, kSeaLevelPressure, cal.separation_pressure_ratio);
    perf = apply_isp_correction(perf, design.p_c, design.combo.fuel, cal);
    perf = gas_generator_losses(perf, state, design,
                                GasGeneratorAssumptions::from(cal, design.combo.fuel));
    if (isp_offset != 0.0) {
        perf.isp_vac += isp_offset;
        perf.isp_sl = perf.isp(kSeaLevelPressure);
        perf.thrust_vac = perf.thrust(0.0);
        perf.thrust_sl = perf.thrust(kSeaLevelPressure);
    }
    perf.engine_mass = engine_mass(perf.thrust_vac, design.combo.fuel, design.expansion_ratio, cal);
    perf.length = engine_length(design, cal);
    return perf;
}

double throat_diameter_for_thrust(EngineDesign design, double thrust_vac, const Calibration& cal) {
    if (!(thrust_vac > 0.0)) throw DomainError("target thrust must be > 0");
    design.throat_diameter = 1.0;
    const CombustionState state = equilibrium_lookup(design.combo, design.p_c, design.rof);
    EnginePerformance perf = ideal_nozzle_performance(state, design);
    perf = apply_isp_correction(perf, design.p_c, design.combo.fuel, cal);
    perf = gas_generator_losses(perf, state, design,
                                GasGeneratorAssumptions::from(cal, design.combo.fuel));
    return std::sqrt(thrust_vac / perf.thrust_vac);
}

}  // namespace rlv
