#pragma once
// Published optimized designs (GTO) re-expressed as genomes. Throats are sized
// from the listed vacuum thrusts.

#include <stdexcept>
#include <string>
#include <vector>

#include "rlv/assembly.hpp"

namespace rlv::test {

struct PublishedDesign {
    std::string name;
    Fuel fuel1, fuel2;
    double dv1, r1, r2;
    double pc1_bar, pc2_bar, rof1, rof2, eps1, eps2;
    double thrust1_total_kN, thrust2_kN;
    int engines;
    // published results
    double ms2_t, mp2_t, ms1_t, mp1_t, landing_t, glow_t;
};

inline const std::vector<PublishedDesign>& published_designs() {
    using F = Fuel;
    static const std::vector<PublishedDesign> d = {
        {"LH2/GLOW", F::LH2, F::LH2, 2900, 2.2, 1.9, 115, 115, 5.5, 6.5, 25, 200, 4896, 1095, 5, 9.1, 101.1, 27.4, 182.8, 11.7, 327.8},
        {"LH2/SM", F::LH2, F::LH2, 3000, 2.2, 1.8, 115, 100, 6.7, 6.7, 20, 200, 4905, 1028, 5, 8.6, 95.9, 26.8, 196.2, 13.0, 334.9},
        {"LH2/EM", F::LH2, F::LH2, 4300, 2.5, 1.9, 135, 85, 6.4, 7.0, 30, 200, 6407, 614, 5, 5.6, 54.6, 38.3, 337.9, 40.5, 443.9},
        {"RP1/GLOW", F::RP1, F::RP1, 3000, 2.1, 2.0, 110, 110, 2.1, 2.3, 25, 200, 7717, 1439, 6, 5.9, 143.4, 23.0, 350.9, 15.0, 530.6},
        {"RP1/SM", F::RP1, F::RP1, 3200, 2.1, 1.9, 120, 110, 2.0, 2.4, 15, 190, 7773, 1341, 5, 5.5, 131.3, 22.8, 381.6, 17.8, 548.5},
        {"RP1/EM", F::RP1, F::RP1, 4400, 2.2, 1.7, 130, 90, 2.0, 2.5, 25, 195, 10488, 790, 6, 3.8, 74.9, 30.0, 601.1, 49.0, 717.2},
        {"LCH4/GLOW", F::LCH4, F::LCH4, 2700, 2.1, 2.1, 105, 105, 2.8, 3.1, 25, 195, 7032, 1574, 5, 7.0, 154.0, 22.3, 288.6, 10.5, 479.2},
        {"LCH4/SM", F::LCH4, F::LCH4, 3100, 2.1, 1.9, 120, 100, 2.8, 3.1, 20, 180, 6958, 1298, 5, 6.1, 127.4, 22.7, 321.3, 15.3, 484.9},
        {"LCH4/EM", F::LCH4, F::LCH4, 4500, 2.3, 1.8, 135, 85, 2.8, 3.2, 35, 200, 9956, 742, 5, 4.1, 67.9, 30.9, 554.4, 49.1, 664.7},
        {"RP1-LH2/GLOW", F::RP1, F::LH2, 2700, 2.0, 1.9, 120, 115, 2.1, 6.4, 30, 200, 5691, 1186, 5, 9.8, 110.8, 17.6, 235.4, 8.7, 381.0},
        {"RP1-LH2/SM", F::RP1, F::LH2, 3200, 2.1, 1.7, 105, 100, 2.1, 6.7, 15, 195, 5504, 946, 5, 7.9, 86.7, 18.0, 277.0, 14.0, 397.1},
        {"RP1-LH2/EM", F::RP1, F::LH2, 4600, 2.2, 1.7, 120, 75, 2.1, 7.1, 25, 200, 8654, 538, 5, 4.9, 46.6, 25.7, 517.9, 46.2, 602.5},
        {"LCH4-LH2/GLOW", F::LCH4, F::LH2, 2900, 2.2, 1.9, 115, 105, 2.8, 6.4, 30, 200, 5454, 1075, 5, 9.0, 100.0, 18.8, 232.9, 10.6, 368.1},
        {"LCH4-LH2/SM", F::LCH4, F::LH2, 3500, 2.1, 1.7, 120, 115, 2.8, 6.7, 20, 195, 5547, 841, 5, 7.2, 75.4, 19.7, 282.3, 17.8, 392.0},
        {"LCH4-LH2/EM", F::LCH4, F::LH2, 4700, 2.3, 1.8, 115, 80, 2.9, 7.0, 25, 200, 8861, 522, 5, 4.8, 44.9, 28.8, 519.2, 50.5, 605.1},
    };
    return d;
}

inline const PublishedDesign& published(const std::string& name) {
    for (const auto& d : published_designs()) {
        if (d.name == name) return d;
    }
    throw std::out_of_range(name);
}

inline ComboPair combos_of(const PublishedDesign& p) { return {p.fuel1, p.fuel2}; }

inline Genome genome_of(const PublishedDesign& p, const Calibration& cal = shipped_calibration()) {
    const EngineDesign e1{make_combo(p.fuel1, cal), p.pc1_bar * kBar, p.rof1, 1.0, p.eps1};
    const EngineDesign e2{make_combo(p.fuel2, cal), p.pc2_bar * kBar, p.rof2, 1.0, p.eps2};
    Genome g;
    g.dv_stage1_ascent = p.dv1;
    g.first = {p.r1, throat_diameter_for_thrust(e1, p.thrust1_total_kN * 1e3 / p.engines, cal),
               p.pc1_bar * kBar, p.eps1, p.rof1};
    g.upper = {p.r2, throat_diameter_for_thrust(e2, p.thrust2_kN * 1e3, cal), p.pc2_bar * kBar,
               p.eps2, p.rof2};
    return g;
}

/// Re-evaluation with the published engine count and constraints reported only.
inline VehicleDesign reevaluate(const PublishedDesign& p, const Calibration& cal = shipped_calibration()) {
    AssemblyOptions opt;
    opt.first_stage_engines = p.engines;
    opt.enforce_constraints = false;
    return assemble_vehicle(genome_of(p, cal), combos_of(p), builtin_mission("GTO"), opt, cal);
}

}  // namespace rlv::test
