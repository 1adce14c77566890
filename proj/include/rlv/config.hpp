#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rlv/genome.hpp"
#include "rlv/missions.hpp"
#include "rlv/optimizer.hpp"
#include "rlv/staging.hpp"

namespace rlv {

enum class GAProfile { Paper, Desk, Custom };

std::string_view to_string(GAProfile profile);
GAProfile parse_profile(std::string_view name);

enum class SweepAxis { DvAllocation, IspOffset, DvBudgetOffset };

std::string_view to_string(SweepAxis axis);
SweepAxis parse_sweep_axis(std::string_view name);
/// Unit of the grid values on an axis: "mps" or "s".
std::string_view grid_unit(SweepAxis axis);

struct SweepSpec {
    SweepAxis axis = SweepAxis::DvAllocation;
    std::vector<double> grid;  // m/s or s, see grid_unit()
    int seeds = 1;             // GA runs per point, best kept
};

/// Everything a CLI run needs. Serialized as JSON with units in key names.
struct RunConfig {
    MissionSpec mission = builtin_mission("GTO");
    bool builtin = true;  // serialize the mission by name
    ComboPair combos{};
    ObjectiveSpec objective{};
    GAProfile profile = GAProfile::Desk;
    GAConfig ga = GAConfig::desk();  // seed is taken from `seed`
    std::uint64_t seed = 1;
    std::optional<std::string> calibration_path;
    std::string output_dir = "rlvopt-out";
    std::optional<Genome> genome;
    std::optional<int> first_stage_engines;
    SweepSpec sweep{};

    /// Mission, GA settings, genome (gene bounds) and engine count.
    /// Throws ConfigError.
    void validate() const;
    /// GA settings with the profile sizes and the seed applied.
    GAConfig ga_config() const;

    bool operator==(const RunConfig&) const;
};

/// Parses and validates. Unknown keys, wrong types and out-of-range values
/// raise ConfigError naming the key path, e.g. "genome.first_stage.radius_m".
RunConfig parse_run_config(std::string_view json_text);
RunConfig load_run_config(const std::string& path);

/// Canonical JSON: fixed key order, defaults written out.
std::string to_json_text(const RunConfig& config);

/// Applies a profile: sizes of paper/desk, kept for custom.
GAConfig profile_config(GAProfile profile, const GAConfig& custom);

}  // namespace rlv
