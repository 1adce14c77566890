#include "rlv/assembly.hpp"

#include <algorithm>
#include <cmath>

#include "rlv/errors.hpp"

namespace rlv {

VehicleMasses VehicleDesign::masses() const {
    return {payload_bay.total(), first.structural_mass, first.propellant.total,
            upper.structural_mass, upper.propellant_mass};
}

double VehicleDesign::upper_stack_mass() const {
    return payload_bay.total() + upper.structural_mass + upper.propellant_mass;
}

namespace {

bool converged(double next, double prev, double tol) {
    return std::abs(next - prev) <= tol * std::abs(prev);
}

// Iterates are kept this far inside the closure limit of the staging equations.
constexpr double kClosureFraction = 0.95;

// Successive substitution on eps = F(eps) with a secant step on the residual
// F(eps) - eps once two points are known. Plain substitution oscillates
// slowly for heavy first stages; the fixed point is the same.
class FixedPoint {
public:
    explicit FixedPoint(double x0) : x_(x0) {}

    double current() const { return x_; }

    /// Feeds F(current()); returns the next iterate.
    double step(double fx, double lo, double hi) {
        const double g = fx - x_;
        double next = fx;
        if (have_prev_ && g != g_prev_) {
            const double secant = x_ - g * (x_ - x_prev_) / (g - g_prev_);
            if (secant > lo && secant < hi) next = secant;
        }
        x_prev_ = x_;
        g_prev_ = g;
        have_prev_ = true;
        x_ = next;
        return x_;
    }

private:
    double x_;
    double x_prev_ = 0.0;
    double g_prev_ = 0.0;
    bool have_prev_ = false;
};

}  // namespace

UpperStageResult converge_upper_stage(const PayloadBay& bay, double dv2, const EngineDesign& design,
                                      double radius, const ConvergenceSettings& s,
                                      const Calibration& cal, double isp_offset, double eps2_init) {
    UpperStageResult r;
    r.design = design;
    r.engine = design_engine(design, cal, isp_offset);
    const double carried = bay.after_fairing_jettison();
    const double ratio = mass_ratio(dv2, r.engine.isp_vac);
    const double cap = kClosureFraction / ratio;

    auto size = [&](double mp) {
        r.geometry = size_stage(mp, design.rof, design.combo, radius, r.engine.length, cal);
        StageMassInputs in;
        in.geometry = r.geometry;
        in.combo = design.combo;
        in.engine = r.engine;
        r.budget = assemble_stage_mass(in, cal);
        return r.budget.structural_mass;
    };

    FixedPoint fp(std::min(eps2_init > 0.0 ? eps2_init : s.eps2_init, cap));
    double eps = fp.current();
    bool done = false;
    for (int it = 1; it <= s.max_iterations && !done; ++it) {
        eps = fp.current();
        const double mp = upper_stage_propellant(carried, dv2, r.engine.isp_vac, eps);
        const double ms = size(mp);
        const double next = ms / (ms + mp);
        if (eps >= cap && next >= cap) {
            throw InfeasibleStage("upper stage structure too heavy to close", next * ratio - kClosureFraction);
        }
        done = converged(next, eps, s.eps_tolerance);
        eps = done ? next : std::min(fp.step(next, 0.0, cap), cap);
        r.iterations = it;
    }
    if (!done) throw NonConvergence("upper-stage structural coefficient did not converge");
    if (eps * ratio >= 1.0) {
        throw InfeasibleStage("upper stage cannot close", eps * ratio - 1.0);
    }

    r.eps = eps;
    r.propellant_mass = upper_stage_propellant(carried, dv2, r.engine.isp_vac, eps);
    r.structural_mass = eps * r.propellant_mass / (1.0 - eps);
    size(r.propellant_mass);
    r.burn_time = r.propellant_mass / r.engine.total_massflow;
    r.thrust_to_weight =
        r.engine.thrust_vac / (kG0 * (carried + r.structural_mass + r.propellant_mass));
    return r;
}

FirstStageResult converge_first_stage(const FirstStageInputs& in, const AssemblyOptions& opt,
                                      const Calibration& cal, double eps1_init) {
    const ConvergenceSettings& s = opt.convergence;
    const AtmosphereModel& atm = opt.atmosphere ? *opt.atmosphere : standard_atmosphere();

    FirstStageResult r;
    r.design = in.design;
    r.n_engines = in.n_engines;
    r.engine = design_engine(in.design, cal, opt.isp_offset);
    r.dv_landing = landing_dv_model(in.dv_stage1_ascent, LandingModel::from(cal));

    auto close = [&](double isp, double eps) {
        r.eps_landing = landing_structural_coefficient(r.dv_landing, isp);
        r.structural_mass =
            first_stage_structural_mass(in.upper_stack_mass, in.dv_stage1_ascent, isp, eps, r.eps_landing);
        r.propellant = propellant_split(r.structural_mass, eps, r.eps_landing);
        r.geometry = size_stage(r.propellant.total, in.design.rof, in.design.combo, in.radius,
                                r.engine.length, cal);
        StageMassInputs m;
        m.geometry = r.geometry;
        m.combo = in.design.combo;
        m.is_first_stage = true;
        m.landing_gear = true;
        m.n_engines = in.n_engines;
        m.engine = r.engine;
        m.interstage_length = in.upper_engine_length;
        r.budget = assemble_stage_mass(m, cal);
        return r.budget.structural_mass / (r.budget.structural_mass + r.propellant.total);
    };

    double isp = 0.5 * (r.engine.isp_sl + r.engine.isp_vac);
    double eps = eps1_init > 0.0 ? eps1_init : s.eps1_init;
    bool isp_done = false;
    for (int outer = 1; outer <= s.max_iterations && !isp_done; ++outer) {
        const double ratio = mass_ratio(in.dv_stage1_ascent, isp);
        const double cap = kClosureFraction * landing_structural_coefficient(r.dv_landing, isp) / ratio;
        FixedPoint fp(std::min(eps, cap));
        bool done = false;
        for (int it = 1; it <= s.max_iterations && !done; ++it) {
            eps = fp.current();
            const double next = close(isp, eps);
            if (eps >= cap && next >= cap) {
                throw InfeasibleStage("first stage structure too heavy to close",
                                      next / cap - 1.0 + (1.0 - kClosureFraction));
            }
            done = converged(next, eps, s.eps_tolerance);
            eps = done ? next : std::min(fp.step(next, 0.0, cap), cap);
            ++r.iterations;
        }
        if (!done) throw NonConvergence("first-stage structural coefficient did not converge");

        // final closure at the converged coefficient
        close(isp, eps);
        r.eps = eps;
        r.mean_isp = isp;

        AscentVehicle v;
        v.engine = r.engine;
        v.n_engines = in.n_engines;
        v.liftoff_mass = in.upper_stack_mass + r.structural_mass + r.propellant.total;
        v.ascent_propellant = r.propellant.ascent;
        v.radius = in.radius;
        r.trajectory = simulate_ascent(v, opt.trajectory, atm);
        r.isp_iterations = outer;
        isp_done = std::abs(r.trajectory.mean_isp - isp) < s.isp_tolerance;
        isp = r.trajectory.mean_isp;
    }
    if (!isp_done) throw NonConvergence("first-stage mean Isp did not converge");

    r.burn_time = r.propellant.total / (in.n_engines * r.engine.total_massflow);
    return r;
}

namespace {

VehicleDesign assemble(const Genome& genome, const ComboPair& combos, const MissionSpec& mission,
                       const AssemblyOptions& opt, const Calibration& cal) {
    VehicleDesign d;
    d.mission = mission;
    d.combos = combos;
    d.genome = genome;
    d.allocation = allocate_delta_v(mission.dv_total + opt.dv_total_offset, genome.dv_stage1_ascent,
                                    LandingModel::from(cal));
    d.payload_bay = payload_bay_mass(mission.payload_mass, 2.0 * genome.upper.radius, cal);

    const EngineDesign upper{make_combo(combos.upper, cal), genome.upper.p_c, genome.upper.rof,
                             genome.upper.throat_diameter, genome.upper.expansion_ratio};
    d.upper = converge_upper_stage(d.payload_bay, d.allocation.dv_stage2, upper, genome.upper.radius,
                                   opt.convergence, cal, opt.isp_offset);
    if (!min_acceleration_check(d.upper.thrust_to_weight, 2)) {
        const double v = (kMinAccelerationUpper - d.upper.thrust_to_weight) / kMinAccelerationUpper;
        if (opt.enforce_constraints) {
            throw InfeasibleDesign("min_acceleration_upper", v,
                                   "upper-stage thrust/weight " + std::to_string(d.upper.thrust_to_weight));
        }
        d.violations.push_back("min_acceleration_upper");
    }
    const double envelope = d.upper.engine.exit_diameter / (2.0 * genome.upper.radius);
    if (envelope > kMaxNozzleEnvelope) {
        if (opt.enforce_constraints) {
            throw InfeasibleDesign("nozzle_envelope", envelope / kMaxNozzleEnvelope - 1.0,
                                   "upper-stage nozzle exit " + std::to_string(d.upper.engine.exit_diameter) +
                                       " m wider than the stage");
        }
        d.violations.push_back("nozzle_envelope");
    }

    FirstStageInputs in;
    in.upper_stack_mass = d.upper_stack_mass();
    in.upper_engine_length = d.upper.engine.length;
    in.dv_stage1_ascent = genome.dv_stage1_ascent;
    in.design = {make_combo(combos.first, cal), genome.first.p_c, genome.first.rof,
                 genome.first.throat_diameter, genome.first.expansion_ratio};
    in.radius = genome.first.radius;

    const bool forced = opt.first_stage_engines.has_value();
    int n = forced ? *opt.first_stage_engines : kMinFirstStageEngines;
    for (;; ++n, ++d.engine_escalations) {
        in.n_engines = n;
        const bool last = forced || n >= kMaxFirstStageEngines;
        double twr = 0.0;
        try {
            d.first = converge_first_stage(in, opt, cal);
            twr = d.first.trajectory.liftoff_twr;
        } catch (const LiftoffFailure& e) {
            if (!last) continue;
            throw InfeasibleDesign("min_acceleration_first",
                                   (kMinAccelerationFirst - e.thrust_to_weight()) / kMinAccelerationFirst,
                                   std::string("first stage cannot lift off: ") + e.what());
        }
        if (min_acceleration_check(twr, 1)) break;
        if (!last) continue;
        if (opt.enforce_constraints) {
            throw InfeasibleDesign("min_acceleration_first",
                                   (kMinAccelerationFirst - twr) / kMinAccelerationFirst,
                                   "liftoff thrust/weight " + std::to_string(twr) + " with " +
                                       std::to_string(n) + " engines");
        }
        d.violations.push_back("min_acceleration_first");
        break;
    }

    d.glow = d.masses().glow();
    d.length = d.payload_bay.fairing_length + d.upper.geometry.total_length() +
               d.first.geometry.total_length();
    d.length_to_diameter = d.length / (2.0 * genome.first.radius);
    if (d.length_to_diameter > kMaxLengthToDiameter) {
        const double v = (d.length_to_diameter - kMaxLengthToDiameter) / kMaxLengthToDiameter;
        if (opt.enforce_constraints) {
            throw InfeasibleDesign("length_to_diameter", v,
                                   "length/diameter " + std::to_string(d.length_to_diameter) + " > 20");
        }
        d.violations.push_back("length_to_diameter");
    }
    d.separation_warning = d.first.engine.separation_at_sea_level;
    const double landing_burn = std::min(d.first.dv_landing, cal.landing_burn_dv);
    d.ballistic_root = ballistic_coefficient_root(
        d.first.structural_mass * mass_ratio(landing_burn, d.first.mean_isp), genome.first.radius);
    return d;
}

}  // namespace

VehicleDesign assemble_vehicle(const Genome& genome, const ComboPair& combos,
                               const MissionSpec& mission, const AssemblyOptions& opt,
                               const Calibration& cal) {
    const BoundsViolation bounds = bounds_violation(genome, combos);
    if (!bounds.gene.empty()) throw InfeasibleDesign("genome_bounds", bounds.violation, bounds.gene);
    try {
        return assemble(genome, combos, mission, opt, cal);
    } catch (const InfeasibleDesign&) {
        throw;
    } catch (const InfeasibleStage& e) {
        throw InfeasibleDesign("stage_closure", std::max(0.0, e.severity()), e.what());
    } catch (const LiftoffFailure& e) {
        throw InfeasibleDesign("min_acceleration_first",
                               (kMinAccelerationFirst - e.thrust_to_weight()) / kMinAccelerationFirst,
                               e.what());
    } catch (const NegativeAscentPropellant& e) {
        throw InfeasibleDesign("negative_ascent_propellant", 1.0, e.what());
    } catch (const CyclePowerInfeasible& e) {
        throw InfeasibleDesign("cycle_power", 1.0, e.what());
    } catch (const CorrelationRangeExceeded& e) {
        throw InfeasibleDesign("engine_mass_range", 1.0, e.what());
    } catch (const OutOfTableRange& e) {
        throw InfeasibleDesign("thermo_table_range", 1.0, e.what());
    } catch (const NonConvergence& e) {
        throw InfeasibleDesign("non_convergence", 1.0, e.what());
    } catch (const NonPhysicalGeometry& e) {
        throw InfeasibleDesign("geometry", 1.0, e.what());
    } catch (const DomainError& e) {
        throw InfeasibleDesign("domain", 1.0, e.what());
    }
}

}  // namespace rlv
