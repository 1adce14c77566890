#pragma once

#include <string>
#include <vector>

#include "rlv/assembly.hpp"

namespace rlv {

/// Falcon 9 v1.2 style scenario: 5 t to GTO, 3500 m/s first-stage ascent,
/// 9 + 1 RP-1 engines, 1.83 m radius. Throats are sized for the published
/// vacuum thrusts (8536 kN total, 1074 kN).
struct Falcon9Scenario {
    double dv_stage1_ascent = 3500.0;  // m/s
    double radius = 1.83;              // m
    double p_c = 97.0 * kBar;          // Pa, both stages
    double rof = 2.36;
    double expansion_first = 16.0;
    double expansion_upper = 165.0;
    double thrust_vac_first_total = 8536.0e3;  // N
    double thrust_vac_upper = 1074.0e3;        // N
    int first_stage_engines = 9;
};

Genome falcon9_genome(const Falcon9Scenario& scenario = {}, const Calibration& cal = shipped_calibration());

enum class ToleranceKind { None, Relative, Absolute };

struct ValidationField {
    std::string label;
    std::string unit;
    double vehicle = 0.0;    // flown vehicle estimate
    double reference = 0.0;  // published model result the check is made against
    double computed = 0.0;
    ToleranceKind kind = ToleranceKind::None;
    double tolerance = 0.0;  // fraction for Relative, `unit` for Absolute
    int precision = 1;

    bool checked() const { return kind != ToleranceKind::None; }
    bool pass() const;
};

struct ValidationReport {
    VehicleDesign design{};
    std::vector<ValidationField> fields;

    bool passed() const;
    const ValidationField& field(const std::string& label) const;
};

/// Assembles the scenario with constraints reported, not enforced, and
/// compares against the published columns.
ValidationReport run_validation(const Calibration& cal = shipped_calibration(),
                                const Falcon9Scenario& scenario = {});

std::string render_text(const ValidationReport& report);

}  // namespace rlv
