#pragma once

#include <string_view>

#include "rlv/calibration.hpp"
#include "rlv/constants.hpp"

namespace rlv {

/// Ideal rocket equation, dv = g0 isp ln(m0/mf). Throws DomainError unless
/// m0 > mf > 0 and isp > 0 (m0 == mf is allowed and gives 0).
double tsiolkovsky_dv(double isp, double m0, double mf);

/// Inverse of tsiolkovsky_dv: m0/mf for a delta-v.
double mass_ratio(double dv, double isp);

/// Upper-stage propellant for the mass it carries after fairing jettison.
/// Throws InfeasibleStage when eps2 * R >= 1.
double upper_stage_propellant(double carried_mass, double dv2, double isp_vac2, double eps2);

/// Final/initial mass ratio of the reentry and landing burns, in (0, 1].
double landing_structural_coefficient(double dv_landing, double isp1);

/// Landing delta-v as a function of the first-stage ascent delta-v: slope-1
/// line through (3500, 2000) m/s with a 500 m/s floor by default.
struct LandingModel {
    double anchor_ascent = 3500.0;
    double anchor_dv = 2000.0;
    double slope = 1.0;
    double floor = 500.0;
    Interval valid_ascent{1500.0, 6000.0};

    static LandingModel from(const Calibration& cal);
};

double landing_dv_model(double dv_stage1_ascent, const LandingModel& model = {});

/// First-stage structural mass that delivers dv1_ascent with `m0_2` on top
/// while keeping the landing propellant. Throws InfeasibleStage when
/// 1/eps1 - R1/eps1_landing <= 0.
double first_stage_structural_mass(double m0_2, double dv1_ascent, double isp1_mean, double eps1,
                                   double eps1_landing);

struct StagePropellantSplit {
    double total = 0.0;
    double ascent = 0.0;
    double landing = 0.0;
};

/// Throws NegativeAscentPropellant if the landing share is not smaller than
/// the total.
StagePropellantSplit propellant_split(double ms1, double eps1, double eps1_landing);

struct DeltaVAllocation {
    double dv_stage1_ascent = 0.0;
    double dv_stage2 = 0.0;
    double dv_total = 0.0;
    double dv_landing = 0.0;
};

DeltaVAllocation allocate_delta_v(double dv_total, double dv_stage1_ascent,
                                  const LandingModel& model = {});

enum class ObjectiveKind { GLOW, SM, EM };

std::string_view to_string(ObjectiveKind kind);
ObjectiveKind parse_objective(std::string_view name);

struct ObjectiveSpec {
    ObjectiveKind kind = ObjectiveKind::GLOW;
    int n_reuses = 1;  // EM only
};

/// Stage and payload-bay masses of an assembled vehicle [kg].
struct VehicleMasses {
    double payload_bay = 0.0;
    double ms1 = 0.0;
    double mp1 = 0.0;
    double ms2 = 0.0;
    double mp2 = 0.0;

    double glow() const { return payload_bay + ms2 + mp2 + ms1 + mp1; }
};

/// GLOW, total structural mass, or expendable structural mass
/// ms2 + ms1 / n_reuses.
double objective_value(const VehicleMasses& masses, const ObjectiveSpec& spec);

/// sqrt(m / (pi r^2)) [kg^0.5 / m], the quantity the terminal velocity scales with.
double ballistic_coefficient_root(double mass, double radius);

}  // namespace rlv
