// rlvopt: command-line front end of the launch vehicle optimizer.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rlv/calibration.hpp"
#include "rlv/config.hpp"
#include "rlv/errors.hpp"
#include "rlv/optimizer.hpp"
#include "rlv/report.hpp"
#include "rlv/study.hpp"
#include "rlv/validation.hpp"

namespace fs = std::filesystem;
using namespace rlv;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitConfig = 2;

struct Overrides {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> profile;
    std::optional<std::string> out;
    std::optional<std::string> objective;
    std::optional<int> reuses;
    std::optional<std::string> combo;
    std::optional<std::string> axis;
    std::vector<double> grid;
    bool quiet = false;
    bool report_only = false;
};

void add_common(CLI::App* cmd, Overrides& o) {
    cmd->add_option("--config", o.config_path, "run configuration (JSON)");
    cmd->add_option("--seed", o.seed, "random seed");
    cmd->add_option("--profile", o.profile, "GA profile: paper, desk or custom");
    cmd->add_option("--out", o.out, "output directory");
    cmd->add_option("--objective", o.objective, "glow, sm or em");
    cmd->add_option("--reuses", o.reuses, "first-stage reuses for the em objective");
    cmd->add_option("--combo", o.combo, "fuels STAGE1/STAGE2, e.g. RP1/LH2");
    cmd->add_flag("--quiet", o.quiet, "no progress output");
}

RunConfig resolve(const Overrides& o) {
    RunConfig c = o.config_path.empty() ? RunConfig{} : load_run_config(o.config_path);
    if (o.seed) c.seed = *o.seed;
    if (o.profile) c.profile = parse_profile(*o.profile);
    if (o.out) c.output_dir = *o.out;
    if (o.objective) c.objective.kind = parse_objective(*o.objective);
    if (o.reuses) c.objective.n_reuses = *o.reuses;
    if (o.combo) c.combos = parse_combo_pair(*o.combo);
    if (o.axis) c.sweep.axis = parse_sweep_axis(*o.axis);
    if (!o.grid.empty()) c.sweep.grid = o.grid;
    c.validate();
    return c;
}

Calibration resolve_calibration(const RunConfig& c) {
    if (const char* env = std::getenv("RLV_CALIBRATION"); env != nullptr && *env != '\0') {
        return load_calibration(env, shipped_calibration());
    }
    if (c.calibration_path) return load_calibration(*c.calibration_path, shipped_calibration());
    return shipped_calibration();
}

void write_file(const fs::path& path, const std::string& text) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out << text;
}

FitnessContext context(const RunConfig& c, const Calibration& cal) {
    FitnessContext ctx;
    ctx.mission = c.mission;
    ctx.combos = c.combos;
    ctx.objective = c.objective;
    ctx.calibration = &cal;
    ctx.options.first_stage_engines = c.first_stage_engines;
    return ctx;
}

void emit_report(const RunConfig& c, const VehicleDesign& d) {
    const Report rep = make_report(d, c.objective);
    const std::string text = render_text(rep);
    std::cout << text;
    write_file(fs::path(c.output_dir) / "report.txt", text);
    write_file(fs::path(c.output_dir) / "report.json", to_json_text(rep));
}

int cmd_evaluate(const Overrides& o) {
    const RunConfig c = resolve(o);
    if (!c.genome) throw ConfigError("config key 'genome': evaluate needs a genome");
    const Calibration cal = resolve_calibration(c);
    AssemblyOptions opt;
    opt.first_stage_engines = c.first_stage_engines;
    opt.enforce_constraints = !o.report_only;
    const VehicleDesign d = assemble_vehicle(*c.genome, c.combos, c.mission, opt, cal);
    emit_report(c, d);
    return kExitOk;
}

int cmd_optimize(const Overrides& o) {
    const RunConfig c = resolve(o);
    const Calibration cal = resolve_calibration(c);
    RunOptions run;
    if (!o.quiet) {
        run.progress = [](const GenerationStats& s) {
            std::cerr << "generation " << s.generation << "  best " << format_value(s.best / 1e3, 2)
                      << " t  feasible " << format_value(100.0 * s.feasible_fraction, 0) << "%\n";
        };
    }
    const OptimizationResult r = run_ga(context(c, cal), c.ga_config(), run);
    emit_report(c, r.design);
    write_file(fs::path(c.output_dir) / "history.csv", history_csv(r.history));
    RunConfig best = c;
    best.genome = r.best;
    write_file(fs::path(c.output_dir) / "best_config.json", to_json_text(best));
    std::cout << "\n" << r.evaluations << " designs evaluated, seed " << r.seed << "\n";
    return kExitOk;
}

std::vector<double> default_grid(SweepAxis axis) {
    std::vector<double> g;
    switch (axis) {
        case SweepAxis::DvAllocation:
            for (double v = 2000.0; v <= 5000.0; v += 250.0) g.push_back(v);
            break;
        case SweepAxis::IspOffset:
            for (double v = -10.0; v <= 10.0; v += 5.0) g.push_back(v);
            break;
        case SweepAxis::DvBudgetOffset:
            for (double v = -500.0; v <= 500.0; v += 250.0) g.push_back(v);
            break;
    }
    return g;
}

int run_curve_command(RunConfig c) {
    if (c.sweep.grid.empty()) c.sweep.grid = default_grid(c.sweep.axis);
    if (c.sweep.axis == SweepAxis::DvAllocation) {
        for (double v : c.sweep.grid) {
            if (v < 2000.0 || v > 5000.0) {
                throw ConfigError("config key 'sweep.grid_mps': allocation grid must lie in [2000, 5000] m/s");
            }
        }
    }
    const Calibration cal = resolve_calibration(c);
    const auto points = run_curve(context(c, cal), c.sweep.axis, c.sweep.grid, c.ga_config(), c.sweep.seeds);
    const std::string csv = curve_csv(c.sweep.axis, c.combos, points);
    write_file(fs::path(c.output_dir) / "sweep.csv", csv);
    std::cout << csv;
    for (const auto& p : points) {
        if (p.feasible) return kExitOk;
    }
    return kExitInfeasible;
}

int cmd_sweep(Overrides o) {
    o.axis = "dv_allocation";
    return run_curve_command(resolve(o));
}

int cmd_sensitivity(const Overrides& o) { return run_curve_command(resolve(o)); }

int cmd_validate(const Overrides& o) {
    RunConfig c;
    if (o.out) c.output_dir = *o.out;
    const Calibration cal = resolve_calibration(c);
    const ValidationReport rep = run_validation(cal);
    const std::string text = render_text(rep);
    std::cout << text;
    write_file(fs::path(c.output_dir) / "report.txt", text);
    write_file(fs::path(c.output_dir) / "report.json",
               to_json_text(make_report(rep.design, ObjectiveSpec{})));
    return rep.passed() ? kExitOk : kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-stage reusable launch vehicle design optimizer"};
    app.require_subcommand(1);

    Overrides o;
    auto* evaluate = app.add_subcommand("evaluate", "assemble the genome given in the config");
    auto* optimize = app.add_subcommand("optimize", "run the genetic algorithm");
    auto* sweep = app.add_subcommand("sweep", "best objective over a first-stage delta-v grid");
    auto* sensitivity = app.add_subcommand("sensitivity", "best objective over an Isp or delta-v offset grid");
    auto* validate = app.add_subcommand("validate", "reproduce the Falcon 9 reference case");
    for (auto* cmd : {evaluate, optimize, sweep, sensitivity}) add_common(cmd, o);
    for (auto* cmd : {sweep, sensitivity}) {
        cmd->add_option("--grid", o.grid, "grid values in the axis unit (m/s or s)")->delimiter(',');
    }
    evaluate->add_flag("--report-only", o.report_only, "list violated constraints instead of failing");
    sensitivity->add_option("--axis", o.axis, "dv_allocation, isp_offset or dv_budget_offset");
    validate->add_option("--out", o.out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*evaluate) return cmd_evaluate(o);
        if (*optimize) return cmd_optimize(o);
        if (*sweep) return cmd_sweep(o);
        if (*sensitivity) return cmd_sensitivity(o);
        if (*validate) return cmd_validate(o);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const InfeasibleDesign& e) {
        std::cerr << "infeasible design (" << e.constraint() << "): " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const NoFeasibleIndividual& e) {
        std::cerr << "no feasible design: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    }
    return kExitOk;
}
