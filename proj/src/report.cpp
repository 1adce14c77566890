#include "rlv/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rlv {

namespace {

constexpr const char* kMassGeometry = "Mass and Geometry";
constexpr const char* kPropulsion = "Propulsion System";
constexpr const char* kTotal = "Total";
constexpr const char* kDeltaV = "Delta-v";
constexpr const char* kBreakdown = "Mass Breakdown";
constexpr const char* kUpper = "Upper Stage";
constexpr const char* kFirst = "First Stage";

void add_breakdown(std::vector<ReportRow>& rows, const char* stage, const StageMassBudget& b) {
    const std::pair<const char*, double> items[] = {
        {"Fuel Tank", b.tank_fuel},       {"Oxidizer Tank", b.tank_ox},
        {"Reinforcement", b.reinforcement}, {"Insulation", b.insulation},
        {"Thrust Frame", b.thrust_frame}, {"Intertank", b.intertank},
        {"Interstage", b.interstage},     {"Engines", b.engines},
        {"TVC", b.tvc},                   {"Landing Gear", b.landing_gear},
        {"Margin", b.margin},             {"Structural Mass", b.structural_mass},
    };
    for (const auto& [label, kg] : items) rows.push_back({kBreakdown, stage, label, "kg", kg, 0});
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

}  // namespace

const ReportRow& Report::row(const std::string& section, const std::string& stage,
                             const std::string& label) const {
    for (const auto& r : rows) {
        if (r.section == section && r.stage == stage && r.label == label) return r;
    }
    throw std::out_of_range("report has no row " + section + "/" + stage + "/" + label);
}

Report make_report(const VehicleDesign& d, const ObjectiveSpec& objective) {
    Report rep;
    rep.title = d.mission.name + " " + to_string(d.combos) + ", objective " +
                std::string(to_string(objective.kind));
    if (objective.kind == ObjectiveKind::EM) rep.title += " (" + std::to_string(objective.n_reuses) + " reuses)";

    const VehicleMasses m = d.masses();
    auto& r = rep.rows;
    const auto& up = d.upper;
    const auto& fs = d.first;

    r.push_back({kMassGeometry, "", "Payload Bay Mass", "t", d.payload_bay.total() / 1e3, 1});
    r.push_back({kMassGeometry, "", "Fairing Length", "m", d.payload_bay.fairing_length, 1});
    r.push_back({kMassGeometry, kUpper, "Struct. Mass", "t", m.ms2 / 1e3, 1});
    r.push_back({kMassGeometry, kUpper, "Prop. Mass", "t", m.mp2 / 1e3, 1});
    r.push_back({kMassGeometry, kUpper, "Struct. Coeff.", "-", up.eps, 3});
    r.push_back({kMassGeometry, kUpper, "Length", "m", up.geometry.total_length(), 1});
    r.push_back({kMassGeometry, kUpper, "Diameter", "m", 2.0 * d.genome.upper.radius, 2});
    r.push_back({kMassGeometry, kFirst, "Struct. Mass", "t", m.ms1 / 1e3, 1});
    r.push_back({kMassGeometry, kFirst, "Tot. Prop. Mass", "t", m.mp1 / 1e3, 1});
    r.push_back({kMassGeometry, kFirst, "Land. Prop. Mass", "t", fs.propellant.landing / 1e3, 1});
    r.push_back({kMassGeometry, kFirst, "Struct. Coeff.", "-", fs.eps, 3});
    r.push_back({kMassGeometry, kFirst, "Length", "m", fs.geometry.total_length(), 1});
    r.push_back({kMassGeometry, kFirst, "Diameter", "m", 2.0 * d.genome.first.radius, 2});

    r.push_back({kPropulsion, kUpper, "Number of Engines", "-", 1.0, 0});
    r.push_back({kPropulsion, kUpper, "F_vac", "kN", up.engine.thrust_vac / 1e3, 0});
    r.push_back({kPropulsion, kUpper, "Isp_vac", "s", up.engine.isp_vac, 1});
    r.push_back({kPropulsion, kUpper, "Chamber Pressure", "bar", d.genome.upper.p_c / kBar, 0});
    r.push_back({kPropulsion, kUpper, "Mixture Ratio", "-", d.genome.upper.rof, 2});
    r.push_back({kPropulsion, kUpper, "Expansion Ratio", "-", d.genome.upper.expansion_ratio, 0});
    r.push_back({kPropulsion, kUpper, "Throat Diameter", "m", d.genome.upper.throat_diameter, 3});
    r.push_back({kPropulsion, kUpper, "t_b", "s", up.burn_time, 0});
    r.push_back({kPropulsion, kFirst, "Number of Engines", "-", static_cast<double>(fs.n_engines), 0});
    r.push_back({kPropulsion, kFirst, "F_vac,tot", "kN", fs.n_engines * fs.engine.thrust_vac / 1e3, 0});
    r.push_back({kPropulsion, kFirst, "F_sl,tot", "kN", fs.n_engines * fs.engine.thrust_sl / 1e3, 0});
    r.push_back({kPropulsion, kFirst, "Isp_vac", "s", fs.engine.isp_vac, 1});
    r.push_back({kPropulsion, kFirst, "Isp_sl", "s", fs.engine.isp_sl, 1});
    r.push_back({kPropulsion, kFirst, "Mean Ascent Isp", "s", fs.mean_isp, 1});
    r.push_back({kPropulsion, kFirst, "Chamber Pressure", "bar", d.genome.first.p_c / kBar, 0});
    r.push_back({kPropulsion, kFirst, "Mixture Ratio", "-", d.genome.first.rof, 2});
    r.push_back({kPropulsion, kFirst, "Expansion Ratio", "-", d.genome.first.expansion_ratio, 0});
    r.push_back({kPropulsion, kFirst, "Throat Diameter", "m", d.genome.first.throat_diameter, 3});
    r.push_back({kPropulsion, kFirst, "t_b", "s", fs.burn_time, 0});
    r.push_back({kPropulsion, kFirst, "Liftoff T/W", "-", fs.trajectory.liftoff_twr, 2});

    r.push_back({kTotal, "", "GLOW", "t", d.glow / 1e3, 1});
    r.push_back({kTotal, "", "Length", "m", d.length, 1});
    r.push_back({kTotal, "", "Length/Diameter", "-", d.length_to_diameter, 1});
    r.push_back({kTotal, "", "Struct. Mass", "t", (m.ms1 + m.ms2) / 1e3, 1});
    r.push_back({kTotal, "", "Objective", "t", objective_value(m, objective) / 1e3, 2});
    r.push_back({kTotal, "", "Ballistic Root Coeff.", "t^0.5/m", d.ballistic_root / std::sqrt(1e3), 2});

    r.push_back({kDeltaV, "", "Upper Stage", "km/s", d.allocation.dv_stage2 / 1e3, 2});
    r.push_back({kDeltaV, "", "First Stage", "km/s", d.allocation.dv_stage1_ascent / 1e3, 2});
    r.push_back({kDeltaV, "", "First Stage Landing", "km/s", d.allocation.dv_landing / 1e3, 2});
    r.push_back({kDeltaV, "", "Total", "km/s", (d.allocation.dv_stage1_ascent + d.allocation.dv_stage2) / 1e3, 2});

    add_breakdown(r, kUpper, up.budget);
    add_breakdown(r, kFirst, fs.budget);

    if (d.separation_warning) rep.notes.push_back("first-stage nozzle flow separates at sea level");
    if (d.engine_escalations > 0) {
        rep.notes.push_back("first-stage engine count raised " + std::to_string(d.engine_escalations) +
                            " time(s) to meet the liftoff acceleration");
    }
    for (const auto& v : d.violations) rep.notes.push_back("constraint not met: " + v);
    return rep;
}

std::string format_value(double value, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, value);
    return buf;
}

std::string render_text(const Report& rep) {
    std::ostringstream out;
    out << rep.title << "\n";
    std::string section;
    std::string stage;
    for (const auto& r : rep.rows) {
        if (r.section != section) {
            section = r.section;
            stage.clear();
            out << "\n" << section << "\n";
        }
        if (r.stage != stage) {
            stage = r.stage;
            if (!stage.empty()) out << "  " << stage << "\n";
        }
        const std::string label = r.label + " [" + r.unit + "]";
        char line[160];
        std::snprintf(line, sizeof line, "    %-28s %12s\n", label.c_str(),
                      format_value(r.value, r.precision).c_str());
        out << line;
    }
    if (!rep.notes.empty()) {
        out << "\nNotes\n";
        for (const auto& n : rep.notes) out << "  - " << n << "\n";
    }
    return out.str();
}

std::string to_json_text(const Report& rep) {
    nlohmann::ordered_json j;
    j["title"] = rep.title;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rep.rows) {
        j["rows"].push_back({{"section", r.section},
                             {"stage", r.stage},
                             {"label", r.label},
                             {"unit", r.unit},
                             {"value", r.value},
                             {"precision", r.precision}});
    }
    j["notes"] = rep.notes;
    return j.dump(2) + "\n";
}

std::string history_csv(const std::vector<GenerationStats>& history) {
    std::string out = "generation,best_kg,mean_kg,feasible_fraction\n";
    for (const auto& h : history) {
        out += std::to_string(h.generation) + "," + num(h.best) + "," + num(h.mean) + "," +
               num(h.feasible_fraction) + "\n";
    }
    return out;
}

std::string curve_csv(SweepAxis axis, const ComboPair& combos, const std::vector<CurvePoint>& points) {
    std::string out = std::string(to_string(axis)) + "_" + std::string(grid_unit(axis)) +
                      ",combo,feasible,objective_kg,glow_kg,dv_stage1_ascent_mps,error\n";
    for (const auto& p : points) {
        out += num(p.x) + "," + to_string(combos) + "," + (p.feasible ? "1" : "0") + ",";
        if (p.feasible) out += num(p.objective) + "," + num(p.glow) + "," + num(p.dv_stage1_ascent);
        else out += ",,";
        out += "," + csv_field(p.error) + "\n";
    }
    return out;
}

}  // namespace rlv
