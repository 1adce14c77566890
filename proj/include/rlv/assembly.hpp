#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rlv/calibration.hpp"
#include "rlv/genome.hpp"
#include "rlv/masses.hpp"
#include "rlv/missions.hpp"
#include "rlv/propellants.hpp"
#include "rlv/staging.hpp"
#include "rlv/trajectory.hpp"

namespace rlv {

inline constexpr int kMinFirstStageEngines = 5;
inline constexpr int kMaxFirstStageEngines = 15;
inline constexpr double kMaxLengthToDiameter = 20.0;
// Upper-stage nozzle exit diameter over stage diameter; 1% covers the
// rounding of published radii.
inline constexpr double kMaxNozzleEnvelope = 1.01;

struct ConvergenceSettings {
    double eps_tolerance = 1e-4;  // relative
    double isp_tolerance = 0.1;   // s
    int max_iterations = 50;
    double eps1_init = 0.06;
    double eps2_init = 0.05;
};

struct AssemblyOptions {
    ConvergenceSettings convergence{};
    GravityTurnConfig trajectory{};
    const AtmosphereModel* atmosphere = nullptr;  // standard atmosphere if null
    std::optional<int> first_stage_engines;       // skips escalation when set
    bool enforce_constraints = true;              // false: report only (validation runs)
    double isp_offset = 0.0;                      // s, added to every engine Isp
    double dv_total_offset = 0.0;                 // m/s, added to the mission budget
};

struct UpperStageResult {
    EngineDesign design{};
    EnginePerformance engine{};
    StageGeometry geometry{};
    StageMassBudget budget{};
    double structural_mass = 0.0;  // kg
    double propellant_mass = 0.0;  // kg
    double eps = 0.0;
    double burn_time = 0.0;        // s
    double thrust_to_weight = 0.0;  // at ignition, fairing gone
    int iterations = 0;
};

struct FirstStageResult {
    EngineDesign design{};
    EnginePerformance engine{};  // per engine
    int n_engines = 0;
    StageGeometry geometry{};
    StageMassBudget budget{};
    StagePropellantSplit propellant{};
    double structural_mass = 0.0;  // kg
    double eps = 0.0;
    double eps_landing = 0.0;
    double dv_landing = 0.0;       // m/s
    double mean_isp = 0.0;         // s
    double burn_time = 0.0;        // s, total propellant at full flow
    TrajectoryResult trajectory{};
    int iterations = 0;            // inner structural iterations, summed
    int isp_iterations = 0;
};

struct VehicleDesign {
    MissionSpec mission{};
    ComboPair combos{};
    Genome genome{};
    DeltaVAllocation allocation{};
    PayloadBay payload_bay{};
    UpperStageResult upper{};
    FirstStageResult first{};
    double glow = 0.0;                 // kg
    double length = 0.0;               // m
    double length_to_diameter = 0.0;
    double ballistic_root = 0.0;       // kg^0.5/m after the reentry burn
    bool separation_warning = false;   // first-stage nozzle separates at sea level
    int engine_escalations = 0;
    std::vector<std::string> violations;  // filled when constraints are not enforced

    VehicleMasses masses() const;
    /// Upper-stage mass at ignition including the payload bay [kg].
    double upper_stack_mass() const;
};

/// Fixed point on eps2. Clamps the iterate below 0.95 / R so infeasible
/// starting values recover; throws InfeasibleStage if the model itself
/// settles there and NonConvergence after max_iterations.
UpperStageResult converge_upper_stage(const PayloadBay& bay, double dv2, const EngineDesign& design,
                                      double radius, const ConvergenceSettings& settings,
                                      const Calibration& cal = shipped_calibration(),
                                      double isp_offset = 0.0, double eps2_init = -1.0);

struct FirstStageInputs {
    double upper_stack_mass = 0.0;  // kg, m0_2 with fairing
    double upper_engine_length = 0.0;  // m, sets the interstage length
    double dv_stage1_ascent = 0.0;  // m/s
    EngineDesign design{};
    int n_engines = kMinFirstStageEngines;
    double radius = 0.0;
};

/// Nested fixed point: eps1 inside, mean ascent Isp outside.
FirstStageResult converge_first_stage(const FirstStageInputs& in, const AssemblyOptions& options,
                                      const Calibration& cal = shipped_calibration(),
                                      double eps1_init = -1.0);

/// Builds and converges the full vehicle. Throws InfeasibleDesign carrying
/// the failing constraint when options.enforce_constraints is set.
VehicleDesign assemble_vehicle(const Genome& genome, const ComboPair& combos,
                               const MissionSpec& mission, const AssemblyOptions& options = {},
                               const Calibration& cal = shipped_calibration());

}  // namespace rlv
