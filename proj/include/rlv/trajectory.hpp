#pragma once

#include <vector>

#include "rlv/atmosphere.hpp"
#include "rlv/propellants.hpp"

namespace rlv {

inline constexpr double kMinAccelerationFirst = 1.3;  // g at liftoff
inline constexpr double kMinAccelerationUpper = 0.95; // g at ignition

struct GravityTurnConfig {
    double start_altitude = 250.0;  // m, vertical rise before the turn
    double final_pitch = 25.0;      // deg above the horizon
    double turn_rate = 0.45;        // deg/s
    double timestep = 1.0;          // s
    double max_time = 1000.0;       // s
    bool drag = false;
    double drag_coefficient = 0.3;
    bool record_history = true;
};

/// First stage at liftoff: everything above it is dead mass.
struct AscentVehicle {
    EnginePerformance engine{};  // per engine
    int n_engines = 1;
    double liftoff_mass = 0.0;       // kg, full vehicle
    double ascent_propellant = 0.0;  // kg burned before separation
    double radius = 0.0;             // m, drag reference
};

struct TrajectorySample {
    double t = 0.0;          // s
    double altitude = 0.0;   // m
    double velocity = 0.0;   // m/s
    double pitch = 0.0;      // deg
    double acceleration = 0.0;  // g, thrust / weight
    double pressure = 0.0;   // Pa
    double isp = 0.0;        // s
    double mass = 0.0;       // kg
};

struct TrajectoryResult {
    double mean_isp = 0.0;         // s, flow-weighted
    double burn_time = 0.0;        // s, ascent burn only
    double liftoff_twr = 0.0;
    double min_acceleration = 0.0;  // g
    double max_acceleration = 0.0;  // g
    double max_dynamic_pressure = 0.0;  // Pa
    double final_velocity = 0.0;   // m/s
    double final_altitude = 0.0;   // m
    std::vector<TrajectorySample> history;
};

/// Point-mass 2D ascent on a flat Earth with constant g0, forward Euler with
/// a shortened last step so exactly the ascent propellant is burned.
/// Throws LiftoffFailure if thrust/weight <= 1 at liftoff and NonConvergence
/// if the burn does not end within max_time.
TrajectoryResult simulate_ascent(const AscentVehicle& vehicle, const GravityTurnConfig& config = {},
                                 const AtmosphereModel& atmosphere = standard_atmosphere());

/// Stage 1: liftoff thrust/weight >= 1.3. Stage 2: ignition thrust/weight >= 0.95.
bool min_acceleration_check(double thrust_to_weight, int stage);
bool min_acceleration_check(const TrajectoryResult& result, int stage = 1);

}  // namespace rlv
