#include "rlv/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rlv/errors.hpp"

namespace rlv {

TrajectoryResult simulate_ascent(const AscentVehicle& v, const GravityTurnConfig& cfg,
                                 const AtmosphereModel& atm) {
    if (v.n_engines < 1 || !(v.liftoff_mass > 0.0) || v.ascent_propellant < 0.0 ||
        v.ascent_propellant >= v.liftoff_mass) {
        throw DomainError("ascent needs engines, liftoff mass and 0 <= propellant < mass");
    }
    if (!(cfg.timestep > 0.0)) throw DomainError("timestep must be > 0");

    const double mdot = v.n_engines * v.engine.total_massflow;
    const double deg = kPi / 180.0;
    const double area = kPi * v.radius * v.radius;

    TrajectoryResult r;
    r.liftoff_twr = v.n_engines * v.engine.thrust(atm.pressure(0.0)) / (v.liftoff_mass * kG0);
    if (!(r.liftoff_twr > 1.0)) {
        throw LiftoffFailure("liftoff thrust/weight " + std::to_string(r.liftoff_twr) + " <= 1",
                             r.liftoff_twr);
    }
    r.min_acceleration = std::numeric_limits<double>::infinity();

    double t = 0.0;
    double h = 0.0;
    double vx = 0.0;
    double vy = 0.0;
    double pitch = 90.0;
    double mass = v.liftoff_mass;
    double remaining = v.ascent_propellant;
    double isp_flow = 0.0;
    double burned = 0.0;

    while (remaining > 0.0) {
        if (t >= cfg.max_time) {
            throw NonConvergence("ascent propellant not exhausted after " +
                                 std::to_string(cfg.max_time) + " s");
        }
        const double dt = std::min(cfg.timestep, remaining / mdot);
        const double p = atm.pressure(h);
        const double isp = v.engine.isp(p);
        const double thrust = isp * kG0 * mdot;
        const double speed = std::hypot(vx, vy);

        double ax = thrust / mass * std::cos(pitch * deg);
        double ay = thrust / mass * std::sin(pitch * deg) - kG0;
        const double q = 0.5 * atm.density(h) * speed * speed;
        if (cfg.drag && speed > 0.0) {
            const double d = q * cfg.drag_coefficient * area / mass;
            ax -= d * vx / speed;
            ay -= d * vy / speed;
        }

        const double accel_g = thrust / (mass * kG0);
        r.min_acceleration = std::min(r.min_acceleration, accel_g);
        r.max_acceleration = std::max(r.max_acceleration, accel_g);
        r.max_dynamic_pressure = std::max(r.max_dynamic_pressure, q);
        if (cfg.record_history) {
            r.history.push_back({t, h, speed, pitch, accel_g, p, isp, mass});
        }

        isp_flow += isp * mdot * dt;
        burned += mdot * dt;

        h += vy * dt;
        vx += ax * dt;
        vy += ay * dt;
        mass -= mdot * dt;
        remaining -= mdot * dt;
        t += dt;
        if (h >= cfg.start_altitude) pitch = std::max(cfg.final_pitch, pitch - cfg.turn_rate * dt);
        if (dt < cfg.timestep) break;
    }

    r.mean_isp = burned > 0.0 ? isp_flow / burned : v.engine.isp(atm.pressure(0.0));
    r.burn_time = t;
    r.final_velocity = std::hypot(vx, vy);
    r.final_altitude = h;
    if (cfg.record_history) {
        const double p = atm.pressure(h);
        r.history.push_back({t, h, r.final_velocity, pitch,
                             mdot > 0.0 ? v.engine.isp(p) * kG0 * mdot / (mass * kG0) : 0.0, p,
                             v.engine.isp(p), mass});
    }
    if (!std::isfinite(r.min_acceleration)) r.min_acceleration = r.liftoff_twr;
    return r;
}

bool min_acceleration_check(double thrust_to_weight, int stage) {
    if (stage != 1 && stage != 2) throw DomainError("stage must be 1 or 2");
    // 1e-12 keeps exact boundary values like 1.30 on the passing side
    const double limit = stage == 1 ? kMinAccelerationFirst : kMinAccelerationUpper;
    return thrust_to_weight >= limit - 1e-12;
}

bool min_acceleration_check(const TrajectoryResult& result, int stage) {
    return min_acceleration_check(stage == 1 ? result.liftoff_twr : result.min_acceleration, stage);
}

}  // namespace rlv
