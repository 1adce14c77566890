#include "rlv/study.hpp"

#include "rlv/errors.hpp"

namespace rlv {

namespace {

CurvePoint run_point(FitnessContext ctx, SweepAxis axis, double x, const GAConfig& config, int seeds) {
    RunOptions run;
    switch (axis) {
        case SweepAxis::DvAllocation: run.frozen = std::make_pair(kDv1, x); break;
        case SweepAxis::IspOffset: ctx.options.isp_offset = x; break;
        case SweepAxis::DvBudgetOffset: ctx.options.dv_total_offset = x; break;
    }
    CurvePoint p;
    p.x = x;
    for (int k = 0; k < seeds; ++k) {
        GAConfig c = config;
        c.seed = config.seed + static_cast<std::uint64_t>(k);
        try {
            const OptimizationResult r = run_ga(ctx, c, run);
            if (!p.feasible || r.best_evaluation.fitness < p.objective) {
                p.feasible = true;
                p.objective = r.best_evaluation.fitness;
                p.glow = r.design.glow;
                p.dv_stage1_ascent = r.best.dv_stage1_ascent;
                p.error.clear();
            }
        } catch (const Error& e) {
            if (!p.feasible) p.error = e.what();
        }
    }
    return p;
}

}  // namespace

std::vector<CurvePoint> run_curve(const FitnessContext& ctx, SweepAxis axis,
                                  const std::vector<double>& grid, const GAConfig& config, int seeds) {
    if (seeds < 1) throw ConfigError("curve needs at least one seed per point");
    std::vector<CurvePoint> out;
    out.reserve(grid.size());
    for (double x : grid) out.push_back(run_point(ctx, axis, x, config, seeds));
    return out;
}

}  // namespace rlv
