#pragma once

#include <vector>

#include "rlv/config.hpp"
#include "rlv/optimizer.hpp"
#include "rlv/report.hpp"

namespace rlv {

/// Best objective along one axis: dv_allocation freezes the first-stage
/// delta-v gene, isp_offset and dv_budget_offset shift the model inputs.
/// Each point keeps the best of `seeds` GA runs (seeds config.seed,
/// config.seed + 1, ...). Failed points are recorded, not thrown.
std::vector<CurvePoint> run_curve(const FitnessContext& ctx, SweepAxis axis,
                                  const std::vector<double>& grid, const GAConfig& config,
                                  int seeds = 1);

}  // namespace rlv
