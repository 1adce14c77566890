#pragma once

#include <string>
#include <vector>

namespace rlv {

struct MissionSpec {
    std::string name;
    double payload_mass = 0.0;     // kg
    double dv_ideal = 0.0;         // m/s
    double dv_total = 0.0;         // m/s, losses and margins included
    double rotation_credit = 0.0;  // m/s, informational; dv_total is already net
    std::string target;            // informational

    /// Throws ConfigError unless payload > 0 and dv_total > dv_ideal - rotation_credit.
    void validate() const;
};

/// GTO (5 t, 12000 m/s) and LEO (15.6 t, 9500 m/s), launched from Kourou.
const std::vector<MissionSpec>& builtin_missions();

/// Case-insensitive lookup in builtin_missions(); throws ConfigError.
const MissionSpec& builtin_mission(const std::string& name);

/// A documented loss term. Velocity terms have unit "m/s"; the margin is a
/// fraction of the subtotal with unit "-".
struct LossComponent {
    std::string name;
    double low = 0.0;
    double high = 0.0;
    std::string unit;

    double midpoint() const { return 0.5 * (low + high); }
};

/// Loss ranges attached to reports. They are metadata: dv_total already
/// contains them.
std::vector<LossComponent> loss_budget_breakdown(const MissionSpec& mission);

struct DeltaVReconstruction {
    double low = 0.0;
    double mid = 0.0;
    double high = 0.0;
};

/// (dv_ideal - rotation_credit + velocity losses) * (1 + margin), evaluated
/// at the low ends, midpoints and high ends of the loss ranges.
DeltaVReconstruction reconstruct_dv_total(const MissionSpec& mission,
                                          const std::vector<LossComponent>& losses);

}  // namespace rlv
