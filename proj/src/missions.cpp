#include "rlv/missions.hpp"

#include <algorithm>
#include <cctype>

#include "rlv/errors.hpp"

namespace rlv {

void MissionSpec::validate() const {
    if (!(payload_mass > 0.0)) throw ConfigError("mission '" + name + "': payload mass must be > 0");
    if (!(dv_total > dv_ideal - rotation_credit)) {
        throw ConfigError("mission '" + name + "': dv_total must exceed dv_ideal - rotation_credit");
    }
}

const std::vector<MissionSpec>& builtin_missions() {
    static const std::vector<MissionSpec> missions{
        {"GTO", 5000.0, 10430.0, 12000.0, 460.0, "200 km x 35786 km"},
        {"LEO", 15600.0, 8030.0, 9500.0, 460.0, "200 km x 200 km"},
    };
    return missions;
}

const MissionSpec& builtin_mission(const std::string& name) {
    std::string upper = name;
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (const auto& m : builtin_missions()) {
        if (m.name == upper) return m;
    }
    throw ConfigError("unknown mission '" + name + "' (expected GTO or LEO)");
}

std::vector<LossComponent> loss_budget_breakdown(const MissionSpec&) {
    return {
        {"gravity", 1000.0, 1500.0, "m/s"},
        {"drag", 100.0, 150.0, "m/s"},
        {"maneuvers", 15.0, 15.0, "m/s"},
        {"margin", 0.01, 0.02, "-"},
    };
}

DeltaVReconstruction reconstruct_dv_total(const MissionSpec& m,
                                          const std::vector<LossComponent>& losses) {
    DeltaVReconstruction r;
    const double net = m.dv_ideal - m.rotation_credit;
    double lo = net, mid = net, hi = net;
    double margin_lo = 0.0, margin_mid = 0.0, margin_hi = 0.0;
    for (const auto& c : losses) {
        if (c.unit == "-") {
            margin_lo += c.low;
            margin_mid += c.midpoint();
            margin_hi += c.high;
        } else {
            lo += c.low;
            mid += c.midpoint();
            hi += c.high;
        }
    }
    r.low = lo * (1.0 + margin_lo);
    r.mid = mid * (1.0 + margin_mid);
    r.high = hi * (1.0 + margin_hi);
    return r;
}

}  // namespace rlv
