#include "rlv/validation.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "rlv/report.hpp"

namespace rlv {

Genome falcon9_genome(const Falcon9Scenario& s, const Calibration& cal) {
    const PropellantCombo rp1 = make_combo(Fuel::RP1, cal);
    Genome g;
    g.dv_stage1_ascent = s.dv_stage1_ascent;
    EngineDesign first{rp1, s.p_c, s.rof, 1.0, s.expansion_first};
    EngineDesign upper{rp1, s.p_c, s.rof, 1.0, s.expansion_upper};
    g.first = {s.radius,
               throat_diameter_for_thrust(first, s.thrust_vac_first_total / s.first_stage_engines, cal),
               s.p_c, s.expansion_first, s.rof};
    g.upper = {s.radius, throat_diameter_for_thrust(upper, s.thrust_vac_upper, cal), s.p_c,
               s.expansion_upper, s.rof};
    return g;
}

bool ValidationField::pass() const {
    switch (kind) {
        case ToleranceKind::None: return true;
        case ToleranceKind::Relative: return std::abs(computed / reference - 1.0) <= tolerance;
        case ToleranceKind::Absolute: return std::abs(computed - reference) <= tolerance;
    }
    return false;
}

bool ValidationReport::passed() const {
    for (const auto& f : fields) {
        if (!f.pass()) return false;
    }
    return true;
}

const ValidationField& ValidationReport::field(const std::string& label) const {
    for (const auto& f : fields) {
        if (f.label == label) return f;
    }
    throw std::out_of_range("no validation field '" + label + "'");
}

ValidationReport run_validation(const Calibration& cal, const Falcon9Scenario& s) {
    AssemblyOptions opt;
    opt.first_stage_engines = s.first_stage_engines;
    opt.enforce_constraints = false;
    const ComboPair combos{Fuel::RP1, Fuel::RP1};

    ValidationReport rep;
    rep.design = assemble_vehicle(falcon9_genome(s, cal), combos, builtin_mission("GTO"), opt, cal);
    const VehicleDesign& d = rep.design;
    const VehicleMasses m = d.masses();

    using K = ToleranceKind;
    auto add = [&](std::string label, std::string unit, double vehicle, double reference,
                   double computed, K kind, double tol, int precision) {
        rep.fields.push_back({std::move(label), std::move(unit), vehicle, reference, computed, kind, tol,
                              precision});
    };
    add("Payload Bay Mass", "t", 7.4, 7.4, d.payload_bay.total() / 1e3, K::None, 0, 1);
    add("Fairing Length", "m", 13.2, 10.7, d.payload_bay.fairing_length, K::None, 0, 1);
    add("Upper Struct. Mass", "t", 4.5, 4.9, m.ms2 / 1e3, K::Relative, 0.10, 1);
    add("Upper Prop. Mass", "t", 111.5, 113.7, m.mp2 / 1e3, K::Relative, 0.10, 1);
    add("Upper Struct. Coeff.", "-", 0.039, 0.041, d.upper.eps, K::Absolute, 0.005, 3);
    add("Upper Length", "m", 16.0, 20.5, d.upper.geometry.total_length(), K::None, 0, 1);
    add("First Struct. Mass", "t", 27.2, 27.4, m.ms1 / 1e3, K::Relative, 0.10, 1);
    add("First Tot. Prop. Mass", "t", 418.7, 436.6, m.mp1 / 1e3, K::Relative, 0.10, 1);
    add("First Land. Prop. Mass", "t", 25.0, 26.6, d.first.propellant.landing / 1e3, K::Relative, 0.15, 1);
    add("First Struct. Coeff.", "-", 0.061, 0.059, d.first.eps, K::Absolute, 0.005, 3);
    add("First Length", "m", 40.9, 48.3, d.first.geometry.total_length(), K::None, 0, 1);
    add("Upper F_vac", "kN", 981, 1074, d.upper.engine.thrust_vac / 1e3, K::None, 0, 0);
    add("Upper Isp_vac", "s", 348, 351, d.upper.engine.isp_vac, K::None, 0, 1);
    add("Upper t_b", "s", 397, 364, d.upper.burn_time, K::None, 0, 0);
    add("First F_vac,tot", "kN", 8227, 8536, d.first.n_engines * d.first.engine.thrust_vac / 1e3, K::None, 0, 0);
    add("First F_sl,tot", "kN", 7607, 7770, d.first.n_engines * d.first.engine.thrust_sl / 1e3, K::None, 0, 0);
    add("First Isp_vac", "s", 312, 310, d.first.engine.isp_vac, K::Absolute, 2.0, 1);
    add("First Isp_sl", "s", 283, 282, d.first.engine.isp_sl, K::Absolute, 2.0, 1);
    add("First t_b", "s", 162, 156, d.first.burn_time, K::Absolute, 10.0, 0);
    add("GLOW", "t", 569.3, 589.9, d.glow / 1e3, K::Relative, 0.05, 1);
    add("Total Length", "m", 70.1, 80.6, d.length, K::None, 0, 1);
    return rep;
}

std::string render_text(const ValidationReport& rep) {
    std::ostringstream out;
    out << "Falcon 9 validation (5 t GTO, 3.5/8.5 km/s, 9 + 1 engines, fixed)\n\n";
    char line[200];
    std::snprintf(line, sizeof line, "%-28s %10s %10s %10s  %-12s %s\n", "Field", "Falcon 9", "Reference",
                  "Computed", "Tolerance", "Result");
    out << line;
    for (const auto& f : rep.fields) {
        std::string tol = "-";
        if (f.kind == ToleranceKind::Relative) tol = "+/-" + format_value(100.0 * f.tolerance, 0) + "%";
        if (f.kind == ToleranceKind::Absolute) tol = "+/-" + format_value(f.tolerance, f.precision) + " " + f.unit;
        const std::string label = f.label + " [" + f.unit + "]";
        std::snprintf(line, sizeof line, "%-28s %10s %10s %10s  %-12s %s\n", label.c_str(),
                      format_value(f.vehicle, f.precision).c_str(),
                      format_value(f.reference, f.precision).c_str(),
                      format_value(f.computed, f.precision).c_str(), tol.c_str(),
                      f.checked() ? (f.pass() ? "PASS" : "FAIL") : "info");
        out << line;
    }
    for (const auto& v : rep.design.violations) out << "\nconstraint not met: " << v;
    out << "\n" << (rep.passed() ? "validation PASSED" : "validation FAILED") << "\n";
    return out.str();
}

}  // namespace rlv
