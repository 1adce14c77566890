#include "rlv/staging.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "rlv/constants.hpp"
#include "rlv/errors.hpp"

namespace rlv {

double tsiolkovsky_dv(double isp, double m0, double mf) {
    if (!(isp > 0.0) || !(mf > 0.0) || !(m0 >= mf)) {
        throw DomainError("tsiolkovsky_dv: need isp > 0 and m0 >= mf > 0");
    }
    return kG0 * isp * std::log(m0 / mf);
}

double mass_ratio(double dv, double isp) {
    if (!(isp > 0.0)) throw DomainError("mass_ratio: isp must be > 0");
    return std::exp(dv / (kG0 * isp));
}

double upper_stage_propellant(double carried_mass, double dv2, double isp_vac2, double eps2) {
    if (!(eps2 > 0.0 && eps2 < 1.0)) throw DomainError("eps2 must lie in (0, 1)");
    if (!(carried_mass > 0.0) || dv2 < 0.0) {
        throw DomainError("upper stage needs carried mass > 0 and dv2 >= 0");
    }
    const double r = mass_ratio(dv2, isp_vac2);
    const double denom = 1.0 - eps2 * r;
    if (!(denom > 0.0)) {
        throw InfeasibleStage("upper stage cannot reach dv2: eps2 * R = " + std::to_string(eps2 * r),
                              eps2 * r - 1.0);
    }
    return carried_mass * (r - 1.0) * (1.0 - eps2) / denom;
}

double landing_structural_coefficient(double dv_landing, double isp1) {
    if (dv_landing < 0.0) throw DomainError("landing delta-v must be >= 0");
    return 1.0 / mass_ratio(dv_landing, isp1);
}

LandingModel LandingModel::from(const Calibration& cal) {
    LandingModel m;
    m.anchor_ascent = cal.landing_anchor_ascent;
    m.anchor_dv = cal.landing_anchor_dv;
    m.slope = cal.landing_slope;
    m.floor = cal.landing_floor;
    return m;
}

double landing_dv_model(double dv_stage1_ascent, const LandingModel& model) {
    if (!model.valid_ascent.contains(dv_stage1_ascent)) {
        throw DomainError("first-stage ascent delta-v " + std::to_string(dv_stage1_ascent) +
                          " m/s outside landing model range");
    }
    return std::max(model.floor,
                    model.anchor_dv + model.slope * (dv_stage1_ascent - model.anchor_ascent));
}

double first_stage_structural_mass(double m0_2, double dv1_ascent, double isp1_mean, double eps1,
                                   double eps1_landing) {
    if (!(eps1 > 0.0 && eps1 < 1.0)) throw DomainError("eps1 must lie in (0, 1)");
    if (!(eps1_landing > 0.0 && eps1_landing <= 1.0)) {
        throw DomainError("eps1_landing must lie in (0, 1]");
    }
    if (!(m0_2 > 0.0) || dv1_ascent < 0.0) throw DomainError("need m0_2 > 0 and dv1 >= 0");
    const double r1 = mass_ratio(dv1_ascent, isp1_mean);
    const double denom = 1.0 / eps1 - r1 / eps1_landing;
    if (!(denom > 0.0)) {
        throw InfeasibleStage("first stage cannot close with landing reserve",
                              r1 * eps1 / eps1_landing - 1.0);
    }
    return m0_2 * (r1 - 1.0) / denom;
}

StagePropellantSplit propellant_split(double ms1, double eps1, double eps1_landing) {
    if (!(eps1 > 0.0 && eps1 <= 1.0) || !(eps1_landing > 0.0 && eps1_landing <= 1.0)) {
        throw DomainError("structural coefficients must lie in (0, 1]");
    }
    StagePropellantSplit s;
    s.total = ms1 * (1.0 - eps1) / eps1;
    s.landing = ms1 * (1.0 - eps1_landing) / eps1_landing;
    if (s.landing >= s.total && s.total > 0.0) {
        throw NegativeAscentPropellant("landing propellant exceeds total first-stage propellant");
    }
    s.ascent = s.total - s.landing;
    return s;
}

DeltaVAllocation allocate_delta_v(double dv_total, double dv_stage1_ascent,
                                  const LandingModel& model) {
    if (!(dv_stage1_ascent > 0.0 && dv_stage1_ascent < dv_total)) {
        throw DomainError("first-stage delta-v must lie in (0, dv_total)");
    }
    return {dv_stage1_ascent, dv_total - dv_stage1_ascent, dv_total,
            landing_dv_model(dv_stage1_ascent, model)};
}

std::string_view to_string(ObjectiveKind kind) {
    switch (kind) {
        case ObjectiveKind::GLOW: return "glow";
        case ObjectiveKind::SM: return "sm";
        case ObjectiveKind::EM: return "em";
    }
    return "?";
}

ObjectiveKind parse_objective(std::string_view name) {
    std::string low;
    for (char c : name) low.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (low == "glow") return ObjectiveKind::GLOW;
    if (low == "sm") return ObjectiveKind::SM;
    if (low == "em") return ObjectiveKind::EM;
    throw ConfigError("unknown objective '" + std::string(name) + "' (expected glow, sm or em)");
}

double objective_value(const VehicleMasses& m, const ObjectiveSpec& spec) {
    switch (spec.kind) {
        case ObjectiveKind::GLOW: return m.glow();
        case ObjectiveKind::SM: return m.ms1 + m.ms2;
        case ObjectiveKind::EM:
            if (spec.n_reuses < 1) throw DomainError("n_reuses must be >= 1");
            return m.ms2 + m.ms1 / spec.n_reuses;
    }
    return 0.0;
}

double ballistic_coefficient_root(double mass, double radius) {
    if (!(radius > 0.0)) throw DomainError("radius must be > 0");
    return std::sqrt(mass / (kPi * radius * radius));
}

}  // namespace rlv
