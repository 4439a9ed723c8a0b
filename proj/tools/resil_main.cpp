#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "resil/config.hpp"
#include "resil/pipeline.hpp"

namespace {

const std::vector<std::string> kConfigKeys = {
    "steps_per_hour", "load_file", "pv_factor_file", "wind_factor_file", "soc_file",
    "allow_factor_above_one", "critical_load_fraction", "pv_kw", "wind_kw", "storage_kw",
    "storage_kwh", "soc_min_frac", "charge_eff", "discharge_eff", "gen_kw",
    "fuel_available_gal", "fuel_slope_gal_per_kwh", "fuel_intercept_gal_per_hr",
    "min_turndown_frac", "pv_kw_grid", "storage_kw_grid", "storage_kwh_grid",
    "gen_kw_grid", "cost_per_pv_kw", "cost_per_storage_kw", "cost_per_storage_kwh",
    "cost_per_gen_kw", "outage_start", "outage_duration_steps", "survival_comparator",
    "prob_durations", "output_dir", "r_file"};

struct SubcommandArgs {
    std::string config_path;
    std::map<std::string, std::string> overrides;
};

// Every config key doubles as a --key flag; flags win over the file.
void add_config_options(CLI::App* cmd, SubcommandArgs& args) {
    cmd->add_option("config", args.config_path, "path to a key = value config file")
        ->required();
    for (const auto& key : kConfigKeys) {
        cmd->add_option_function<std::string>(
            "--" + key, [&args, key](const std::string& v) { args.overrides[key] = v; });
    }
}

int run(const SubcommandArgs& args, int (*command)(const resil::RunConfig&)) {
    try {
        resil::RunConfig cfg = resil::load_config_file(args.config_path);
        for (const auto& [key, value] : args.overrides) {
            resil::apply_key(cfg, key, value);
        }
        return command(cfg);
    } catch (const resil::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return resil::kExitInvalidInput;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Behind-the-meter DER outage survival: sizing, yearlong outage sweep, "
                 "and survival-probability statistics"};
    app.require_subcommand(1);

    SubcommandArgs simulate_args, stats_args, size_args, assess_args;

    auto* simulate = app.add_subcommand(
        "simulate", "sweep outages from every start of the year for a fixed design");
    add_config_options(simulate, simulate_args);

    auto* stats = app.add_subcommand(
        "stats", "probability curve and hour/month aggregations from an r.csv");
    add_config_options(stats, stats_args);

    auto* size = app.add_subcommand(
        "size", "grid-search the cheapest design that survives the configured window");
    add_config_options(size, size_args);

    auto* assess = app.add_subcommand("assess", "size, then simulate, then stats");
    add_config_options(assess, assess_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : resil::kExitInvalidInput;
    }

    if (simulate->parsed()) {
        return run(simulate_args, resil::run_simulate);
    }
    if (stats->parsed()) {
        return run(stats_args, resil::run_stats);
    }
    if (size->parsed()) {
        return run(size_args, resil::run_size);
    }
    return run(assess_args, resil::run_assess);
}
