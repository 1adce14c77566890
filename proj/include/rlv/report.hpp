#pragma once

#include <string>
#include <vector>

#include "rlv/assembly.hpp"
#include "rlv/config.hpp"
#include "rlv/optimizer.hpp"

namespace rlv {

struct ReportRow {
    std::string section;  // "Mass and Geometry", "Propulsion System", ...
    std::string stage;    // "Upper Stage", "First Stage" or empty
    std::string label;
    std::string unit;
    double value = 0.0;   // in `unit`
    int precision = 1;    // decimals in the text rendering
};

struct Report {
    std::string title;
    std::vector<ReportRow> rows;
    std::vector<std::string> notes;

    /// First row with this section/stage/label; throws std::out_of_range.
    const ReportRow& row(const std::string& section, const std::string& stage,
                         const std::string& label) const;
};

/// Vehicle summary in the layout of the published design tables plus the
/// component mass breakdown of both stages.
Report make_report(const VehicleDesign& design, const ObjectiveSpec& objective);

std::string render_text(const Report& report);
/// Same rows with full-precision values.
std::string to_json_text(const Report& report);

/// Text rendering of a value as it appears in render_text.
std::string format_value(double value, int precision);

/// generation,best_kg,mean_kg,feasible_fraction
std::string history_csv(const std::vector<GenerationStats>& history);

struct CurvePoint {
    double x = 0.0;  // grid value in the axis unit
    bool feasible = false;
    double objective = 0.0;         // kg
    double glow = 0.0;              // kg
    double dv_stage1_ascent = 0.0;  // m/s
    std::string error;
};

/// One row per point; first column named after the axis and its unit.
std::string curve_csv(SweepAxis axis, const ComboPair& combos, const std::vector<CurvePoint>& points);

}  // namespace rlv
