#include "rlv/calibration.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "rlv/errors.hpp"
#include "rlv/resources.hpp"

namespace rlv {
namespace {

struct Field {
    std::string_view key;
    std::string_view unit;
    double Calibration::*member;
};

constexpr std::array kFields{
    Field{"density_lox", "kg/m3", &Calibration::density_lox},
    Field{"density_lh2", "kg/m3", &Calibration::density_lh2},
    Field{"density_rp1", "kg/m3", &Calibration::density_rp1},
    Field{"density_lch4", "kg/m3", &Calibration::density_lch4},
    Field{"gg_cp_lh2", "J/kg/K", &Calibration::gg_cp_lh2},
    Field{"gg_gamma_lh2", "-", &Calibration::gg_gamma_lh2},
    Field{"gg_cp_rp1", "J/kg/K", &Calibration::gg_cp_rp1},
    Field{"gg_gamma_rp1", "-", &Calibration::gg_gamma_rp1},
    Field{"gg_cp_lch4", "J/kg/K", &Calibration::gg_cp_lch4},
    Field{"gg_gamma_lch4", "-", &Calibration::gg_gamma_lch4},
    Field{"turbine_pressure_ratio", "-", &Calibration::turbine_pressure_ratio},
    Field{"turbine_efficiency", "-", &Calibration::turbine_efficiency},
    Field{"pump_efficiency", "-", &Calibration::pump_efficiency},
    Field{"gg_temperature", "K", &Calibration::gg_temperature},
    Field{"pump_pressure_rise_factor", "-", &Calibration::pump_pressure_rise_factor},
    Field{"gg_exhaust_velocity_fraction", "-", &Calibration::gg_exhaust_velocity_fraction},
    Field{"isp_eff_ref_lh2", "-", &Calibration::isp_eff_ref_lh2},
    Field{"isp_eff_slope_lh2", "-", &Calibration::isp_eff_slope_lh2},
    Field{"isp_eff_ref_rp1", "-", &Calibration::isp_eff_ref_rp1},
    Field{"isp_eff_slope_rp1", "-", &Calibration::isp_eff_slope_rp1},
    Field{"isp_eff_ref_lch4", "-", &Calibration::isp_eff_ref_lch4},
    Field{"isp_eff_slope_lch4", "-", &Calibration::isp_eff_slope_lch4},
    Field{"separation_pressure_ratio", "-", &Calibration::separation_pressure_ratio},
    Field{"nozzle_half_angle", "deg", &Calibration::nozzle_half_angle_deg},
    Field{"bell_length_fraction", "-", &Calibration::bell_length_fraction},
    Field{"engine_body_length_throats", "-", &Calibration::engine_body_length_throats},
    Field{"engine_mass_coeff_lh2", "kg", &Calibration::engine_mass_coeff_lh2},
    Field{"engine_mass_coeff_rp1", "kg", &Calibration::engine_mass_coeff_rp1},
    Field{"engine_mass_coeff_lch4", "kg", &Calibration::engine_mass_coeff_lch4},
    Field{"engine_mass_exponent", "-", &Calibration::engine_mass_exponent},
    Field{"engine_mass_nozzle_coeff", "kg", &Calibration::engine_mass_nozzle_coeff},
    Field{"engine_thrust_min", "N", &Calibration::engine_thrust_min},
    Field{"engine_thrust_max", "N", &Calibration::engine_thrust_max},
    Field{"tank_pressure", "Pa", &Calibration::tank_pressure},
    Field{"tank_design_acceleration", "g", &Calibration::tank_design_acceleration},
    Field{"tank_strength", "Pa", &Calibration::tank_strength},
    Field{"tank_material_density", "kg/m3", &Calibration::tank_material_density},
    Field{"tank_safety_factor", "-", &Calibration::tank_safety_factor},
    Field{"tank_min_gauge", "m", &Calibration::tank_min_gauge},
    Field{"reinforcement_first", "-", &Calibration::reinforcement_first},
    Field{"reinforcement_upper", "-", &Calibration::reinforcement_upper},
    Field{"ullage_fraction", "-", &Calibration::ullage_fraction},
    Field{"insulation_lh2", "kg/m2", &Calibration::insulation_lh2},
    Field{"insulation_lox", "kg/m2", &Calibration::insulation_lox},
    Field{"insulation_lch4", "kg/m2", &Calibration::insulation_lch4},
    Field{"insulation_rp1", "kg/m2", &Calibration::insulation_rp1},
    Field{"thrust_frame_coeff", "kg/kN", &Calibration::thrust_frame_coeff},
    Field{"intertank_areal_density", "kg/m2", &Calibration::intertank_areal_density},
    Field{"interstage_areal_density", "kg/m2", &Calibration::interstage_areal_density},
    Field{"tvc_fraction", "-", &Calibration::tvc_fraction},
    Field{"landing_gear_fraction", "-", &Calibration::landing_gear_fraction},
    Field{"margin_first", "-", &Calibration::margin_first},
    Field{"margin_upper", "-", &Calibration::margin_upper},
    Field{"fairing_areal_density", "kg/m2", &Calibration::fairing_areal_density},
    Field{"fairing_cylinder_length", "m", &Calibration::fairing_cylinder_length},
    Field{"fairing_cone_length", "m", &Calibration::fairing_cone_length},
    Field{"avionics_mass", "kg", &Calibration::avionics_mass},
    Field{"adapter_mass", "kg", &Calibration::adapter_mass},
    Field{"landing_anchor_ascent", "m/s", &Calibration::landing_anchor_ascent},
    Field{"landing_anchor_dv", "m/s", &Calibration::landing_anchor_dv},
    Field{"landing_slope", "-", &Calibration::landing_slope},
    Field{"landing_floor", "m/s", &Calibration::landing_floor},
    Field{"landing_burn_dv", "m/s", &Calibration::landing_burn_dv},
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ConfigError("calibration line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Calibration parse_calibration(std::string_view text, const Calibration& base) {
    Calibration cal = base;
    int line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) fail(line_no, "expected 'key = value unit'");
        const auto key = trim(line.substr(0, eq));
        auto rest = trim(line.substr(eq + 1));

        const auto sp = rest.find_first_of(" \t");
        if (sp == std::string_view::npos) fail(line_no, "missing unit for '" + std::string(key) + "'");
        const auto number = rest.substr(0, sp);
        const auto unit = trim(rest.substr(sp));

        const Field* field = nullptr;
        for (const auto& f : kFields) {
            if (f.key == key) field = &f;
        }
        if (field == nullptr) fail(line_no, "unknown key '" + std::string(key) + "'");
        if (unit != field->unit) {
            fail(line_no, "key '" + std::string(key) + "' expects unit '" +
                              std::string(field->unit) + "', got '" + std::string(unit) + "'");
        }
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), value);
        if (ec != std::errc{} || ptr != number.data() + number.size() || !std::isfinite(value)) {
            fail(line_no, "invalid number '" + std::string(number) + "'");
        }
        cal.*(field->member) = value;
    }
    return cal;
}

Calibration load_calibration(const std::string& path, const Calibration& base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open calibration file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_calibration(buf.str(), base);
}

std::string to_text(const Calibration& cal) {
    std::ostringstream out;
    out.precision(17);
    for (const auto& f : kFields) {
        out << f.key << " = " << cal.*(f.member) << ' ' << f.unit << '\n';
    }
    return out.str();
}

const Calibration& shipped_calibration() {
    static const Calibration cal = parse_calibration(resources::shipped_calibration_text());
    return cal;
}

}  // namespace rlv
