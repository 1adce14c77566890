#include "rlv/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rlv/errors.hpp"

namespace rlv {

using nlohmann::ordered_json;

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw ConfigError("config key '" + path + "': " + msg);
}

// Object reader that remembers which keys were consumed so leftovers can be
// rejected as unknown.
class Reader {
public:
    Reader(const ordered_json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
        if (!obj_.is_object()) {
            if (path_.empty()) throw ConfigError("config: top level must be a JSON object");
            fail(path_, "expected an object");
        }
    }

    std::string path(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

    const ordered_json* find(const std::string& key) {
        seen_.insert(key);
        const auto it = obj_.find(key);
        return it == obj_.end() ? nullptr : &*it;
    }

    std::optional<double> number(const std::string& key) {
        const auto* v = find(key);
        if (v == nullptr) return std::nullopt;
        if (!v->is_number()) fail(path(key), "expected a number");
        const double x = v->get<double>();
        if (!std::isfinite(x)) fail(path(key), "must be finite");
        return x;
    }

    std::optional<std::int64_t> integer(const std::string& key) {
        const auto* v = find(key);
        if (v == nullptr) return std::nullopt;
        if (!v->is_number_integer()) fail(path(key), "expected an integer");
        return v->get<std::int64_t>();
    }

    std::optional<std::string> string(const std::string& key) {
        const auto* v = find(key);
        if (v == nullptr) return std::nullopt;
        if (!v->is_string()) fail(path(key), "expected a string");
        return v->get<std::string>();
    }

    double required_number(const std::string& key) {
        auto x = number(key);
        if (!x) fail(path(key), "missing");
        return *x;
    }

    void finish() const {
        for (const auto& [key, value] : obj_.items()) {
            if (!seen_.count(key)) fail(path(key), "unknown key");
        }
    }

private:
    const ordered_json& obj_;
    std::string path_;
    std::set<std::string> seen_;
};

// Rethrows model errors raised while interpreting a value under its key path.
template <class F>
auto at_key(const std::string& path, F&& f) {
    try {
        return f();
    } catch (const ConfigError& e) {
        fail(path, e.what());
    }
}

StageGenes parse_stage(Reader& parent, const std::string& key) {
    const auto* node = parent.find(key);
    if (node == nullptr) fail(parent.path(key), "missing");
    Reader r(*node, parent.path(key));
    StageGenes s;
    s.radius = r.required_number("radius_m");
    s.throat_diameter = r.required_number("throat_diameter_m");
    s.p_c = r.required_number("chamber_pressure_bar") * kBar;
    s.expansion_ratio = r.required_number("expansion_ratio");
    s.rof = r.required_number("mixture_ratio");
    r.finish();
    return s;
}

Genome parse_genome(const ordered_json& node, const std::string& path) {
    Reader r(node, path);
    Genome g;
    g.dv_stage1_ascent = r.required_number("dv_stage1_ascent_mps");
    g.first = parse_stage(r, "first_stage");
    g.upper = parse_stage(r, "upper_stage");
    r.finish();
    return g;
}

ordered_json stage_json(const StageGenes& s) {
    ordered_json j;
    j["radius_m"] = s.radius;
    j["throat_diameter_m"] = s.throat_diameter;
    j["chamber_pressure_bar"] = s.p_c / kBar;
    j["expansion_ratio"] = s.expansion_ratio;
    j["mixture_ratio"] = s.rof;
    return j;
}

MissionSpec parse_mission(const ordered_json& node, const std::string& path, bool& builtin) {
    if (node.is_string()) {
        builtin = true;
        return at_key(path, [&] { return builtin_mission(node.get<std::string>()); });
    }
    builtin = false;
    Reader r(node, path);
    MissionSpec m;
    auto name = r.string("name");
    if (!name || name->empty()) fail(r.path("name"), "missing");
    m.name = *name;
    m.payload_mass = r.required_number("payload_mass_kg");
    m.dv_ideal = r.required_number("dv_ideal_mps");
    m.dv_total = r.required_number("dv_total_mps");
    m.rotation_credit = r.number("rotation_credit_mps").value_or(0.0);
    m.target = r.string("target").value_or("");
    r.finish();
    at_key(path, [&] {
        m.validate();
        return 0;
    });
    return m;
}

bool same_mission(const MissionSpec& a, const MissionSpec& b) {
    return a.name == b.name && a.payload_mass == b.payload_mass && a.dv_ideal == b.dv_ideal &&
           a.dv_total == b.dv_total && a.rotation_credit == b.rotation_credit && a.target == b.target;
}

// Chamber pressure passes through bar on serialization; allow for the rounding.
bool same_genome(const Genome& a, const Genome& b) {
    const GeneVector x = to_genes(a);
    const GeneVector y = to_genes(b);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (std::abs(x[i] - y[i]) > 1e-12 * std::max(std::abs(x[i]), std::abs(y[i]))) return false;
    }
    return true;
}

bool same_ga(const GAConfig& a, const GAConfig& b) {
    return a.population == b.population && a.generations == b.generations &&
           a.tournament_size == b.tournament_size && a.mating_prob == b.mating_prob &&
           a.mutation_prob == b.mutation_prob && a.gene_crossover_prob == b.gene_crossover_prob &&
           a.gene_mutation_prob == b.gene_mutation_prob && a.threads == b.threads;
}

}  // namespace

std::string_view to_string(GAProfile profile) {
    switch (profile) {
        case GAProfile::Paper: return "paper";
        case GAProfile::Desk: return "desk";
        case GAProfile::Custom: return "custom";
    }
    return "?";
}

GAProfile parse_profile(std::string_view name) {
    const auto s = lower(name);
    if (s == "paper") return GAProfile::Paper;
    if (s == "desk") return GAProfile::Desk;
    if (s == "custom") return GAProfile::Custom;
    throw ConfigError("unknown GA profile '" + std::string(name) + "' (paper, desk, custom)");
}

std::string_view to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::DvAllocation: return "dv_allocation";
        case SweepAxis::IspOffset: return "isp_offset";
        case SweepAxis::DvBudgetOffset: return "dv_budget_offset";
    }
    return "?";
}

SweepAxis parse_sweep_axis(std::string_view name) {
    const auto s = lower(name);
    if (s == "dv_allocation") return SweepAxis::DvAllocation;
    if (s == "isp_offset") return SweepAxis::IspOffset;
    if (s == "dv_budget_offset") return SweepAxis::DvBudgetOffset;
    throw ConfigError("unknown sweep axis '" + std::string(name) +
                      "' (dv_allocation, isp_offset, dv_budget_offset)");
}

std::string_view grid_unit(SweepAxis axis) { return axis == SweepAxis::IspOffset ? "s" : "mps"; }

GAConfig profile_config(GAProfile profile, const GAConfig& custom) {
    GAConfig c = custom;
    if (profile == GAProfile::Paper) {
        c.population = GAConfig::paper().population;
        c.generations = GAConfig::paper().generations;
    } else if (profile == GAProfile::Desk) {
        c.population = GAConfig::desk().population;
        c.generations = GAConfig::desk().generations;
    }
    return c;
}

GAConfig RunConfig::ga_config() const {
    GAConfig c = profile_config(profile, ga);
    c.seed = seed;
    return c;
}

void RunConfig::validate() const {
    at_key("mission", [&] {
        mission.validate();
        return 0;
    });
    at_key("ga", [&] {
        ga_config().validate();
        return 0;
    });
    if (objective.n_reuses < 1) fail("n_reuses", "must be >= 1");
    if (first_stage_engines &&
        (*first_stage_engines < kMinFirstStageEngines || *first_stage_engines > kMaxFirstStageEngines)) {
        fail("first_stage_engines", "must be within [" + std::to_string(kMinFirstStageEngines) + ", " +
                                        std::to_string(kMaxFirstStageEngines) + "]");
    }
    if (genome) {
        at_key("genome", [&] {
            check_bounds(*genome, combos);
            return 0;
        });
    }
    if (sweep.seeds < 1) fail("sweep.seeds", "must be >= 1");
    if (output_dir.empty()) fail("output_dir", "must not be empty");
}

bool RunConfig::operator==(const RunConfig& o) const {
    const bool genomes_equal = genome.has_value() == o.genome.has_value() &&
                               (!genome || same_genome(*genome, *o.genome));
    return same_mission(mission, o.mission) && builtin == o.builtin &&
           combos.first == o.combos.first && combos.upper == o.combos.upper &&
           objective.kind == o.objective.kind && objective.n_reuses == o.objective.n_reuses &&
           profile == o.profile && same_ga(ga_config(), o.ga_config()) && seed == o.seed &&
           calibration_path == o.calibration_path && output_dir == o.output_dir && genomes_equal &&
           first_stage_engines == o.first_stage_engines && sweep.axis == o.sweep.axis &&
           sweep.grid == o.sweep.grid && sweep.seeds == o.sweep.seeds;
}

RunConfig parse_run_config(std::string_view json_text) {
    ordered_json root;
    try {
        root = ordered_json::parse(json_text.begin(), json_text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    Reader r(root, "");
    RunConfig c;

    if (const auto* m = r.find("mission")) c.mission = parse_mission(*m, "mission", c.builtin);
    if (auto s = r.string("combo")) {
        c.combos = at_key("combo", [&] { return parse_combo_pair(*s); });
    }
    if (auto s = r.string("objective")) {
        c.objective.kind = at_key("objective", [&] { return parse_objective(*s); });
    }
    if (auto n = r.integer("n_reuses")) c.objective.n_reuses = static_cast<int>(*n);
    if (auto n = r.integer("seed")) {
        if (*n < 0) fail("seed", "must be >= 0");
        c.seed = static_cast<std::uint64_t>(*n);
    }
    if (auto s = r.string("calibration_path")) c.calibration_path = *s;
    if (auto s = r.string("output_dir")) c.output_dir = *s;
    if (auto n = r.integer("first_stage_engines")) c.first_stage_engines = static_cast<int>(*n);

    if (const auto* g = r.find("ga")) {
        Reader gr(*g, "ga");
        if (auto s = gr.string("profile")) {
            c.profile = at_key("ga.profile", [&] { return parse_profile(*s); });
        }
        const auto pop = gr.integer("population");
        const auto gen = gr.integer("generations");
        if ((pop || gen) && c.profile != GAProfile::Custom) {
            fail(pop ? "ga.population" : "ga.generations", "only allowed with profile 'custom'");
        }
        c.ga = profile_config(c.profile, GAConfig::desk());
        if (pop) c.ga.population = static_cast<int>(*pop);
        if (gen) c.ga.generations = static_cast<int>(*gen);
        if (auto n = gr.integer("tournament_size")) c.ga.tournament_size = static_cast<int>(*n);
        if (auto x = gr.number("mating_prob")) c.ga.mating_prob = *x;
        if (auto x = gr.number("mutation_prob")) c.ga.mutation_prob = *x;
        if (auto x = gr.number("gene_crossover_prob")) c.ga.gene_crossover_prob = *x;
        if (auto x = gr.number("gene_mutation_prob")) c.ga.gene_mutation_prob = *x;
        if (auto n = gr.integer("threads")) {
            if (*n < 0) fail("ga.threads", "must be >= 0");
            c.ga.threads = static_cast<int>(*n);
        }
        gr.finish();
    }

    if (const auto* g = r.find("genome")) c.genome = parse_genome(*g, "genome");

    if (const auto* s = r.find("sweep")) {
        Reader sr(*s, "sweep");
        if (auto a = sr.string("axis")) {
            c.sweep.axis = at_key("sweep.axis", [&] { return parse_sweep_axis(*a); });
        }
        const std::string grid_key = "grid_" + std::string(grid_unit(c.sweep.axis));
        const std::string other_key = c.sweep.axis == SweepAxis::IspOffset ? "grid_mps" : "grid_s";
        if (sr.find(other_key) != nullptr) {
            fail(sr.path(other_key), "wrong unit for axis '" + std::string(to_string(c.sweep.axis)) +
                                         "', use '" + grid_key + "'");
        }
        if (const auto* grid = sr.find(grid_key)) {
            if (!grid->is_array()) fail(sr.path(grid_key), "expected an array of numbers");
            for (const auto& v : *grid) {
                if (!v.is_number()) fail(sr.path(grid_key), "expected an array of numbers");
                c.sweep.grid.push_back(v.get<double>());
            }
        }
        if (auto n = sr.integer("seeds")) c.sweep.seeds = static_cast<int>(*n);
        sr.finish();
    }
    r.finish();
    c.validate();
    return c;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_run_config(buf.str());
}

std::string to_json_text(const RunConfig& c) {
    ordered_json j;
    if (c.builtin) {
        j["mission"] = c.mission.name;
    } else {
        ordered_json m;
        m["name"] = c.mission.name;
        m["payload_mass_kg"] = c.mission.payload_mass;
        m["dv_ideal_mps"] = c.mission.dv_ideal;
        m["dv_total_mps"] = c.mission.dv_total;
        m["rotation_credit_mps"] = c.mission.rotation_credit;
        m["target"] = c.mission.target;
        j["mission"] = m;
    }
    j["combo"] = to_string(c.combos);
    j["objective"] = std::string(to_string(c.objective.kind));
    j["n_reuses"] = c.objective.n_reuses;
    j["seed"] = c.seed;
    if (c.calibration_path) j["calibration_path"] = *c.calibration_path;
    j["output_dir"] = c.output_dir;
    if (c.first_stage_engines) j["first_stage_engines"] = *c.first_stage_engines;

    ordered_json ga;
    ga["profile"] = std::string(to_string(c.profile));
    if (c.profile == GAProfile::Custom) {
        ga["population"] = c.ga.population;
        ga["generations"] = c.ga.generations;
    }
    ga["tournament_size"] = c.ga.tournament_size;
    ga["mating_prob"] = c.ga.mating_prob;
    ga["mutation_prob"] = c.ga.mutation_prob;
    ga["gene_crossover_prob"] = c.ga.gene_crossover_prob;
    ga["gene_mutation_prob"] = c.ga.gene_mutation_prob;
    ga["threads"] = c.ga.threads;
    j["ga"] = ga;

    if (c.genome) {
        ordered_json g;
        g["dv_stage1_ascent_mps"] = c.genome->dv_stage1_ascent;
        g["first_stage"] = stage_json(c.genome->first);
        g["upper_stage"] = stage_json(c.genome->upper);
        j["genome"] = g;
    }

    ordered_json s;
    s["axis"] = std::string(to_string(c.sweep.axis));
    s["grid_" + std::string(grid_unit(c.sweep.axis))] = c.sweep.grid;
    s["seeds"] = c.sweep.seeds;
    j["sweep"] = s;
    return j.dump(2) + "\n";
}

}  // namespace rlv
