#pragma once

#include <filesystem>
#include <sstream>
#include <string>

#include "resil/config.hpp"
#include "resil/io.hpp"
#include "resil/sizing.hpp"
#include "resil/stats.hpp"
#include "resil/sweep.hpp"

namespace resil {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitInfeasible = 3;

namespace detail {

inline std::filesystem::path ensure_output_dir(const RunConfig& cfg) {
    std::filesystem::path dir(cfg.output_dir);
    std::filesystem::create_directories(dir);
    return dir;
}

inline void write_survival_artifacts(const SurvivalSeries& s, const RunConfig& cfg,
                                     const std::filesystem::path& dir) {
    std::ostringstream r_csv;
    write_r_csv(s, r_csv);
    write_file_atomic(dir / "r.csv", r_csv.str());

    nlohmann::ordered_json sj =
        summary_json(summary(s), s, cfg.prob_durations, cfg.survival_comparator);
    write_file_atomic(dir / "summary.json", sj.dump(2) + "\n");
}

inline void write_stats_artifacts(const SurvivalSeries& s, const RunConfig& cfg,
                                  const std::filesystem::path& dir) {
    std::ostringstream curve_csv;
    write_curve_csv(probability_curve(s, cfg.survival_comparator), curve_csv);
    write_file_atomic(dir / "curve.csv", curve_csv.str());

    AggregatedCurves agg = aggregate(s, cfg.survival_comparator);
    std::ostringstream hour_csv;
    write_hour_matrix_csv(agg, hour_csv);
    write_file_atomic(dir / "by_hour.csv", hour_csv.str());

    std::ostringstream month_csv;
    write_month_matrix_csv(agg, month_csv);
    write_file_atomic(dir / "by_month.csv", month_csv.str());
}

} // namespace detail

/// simulate: sweep the configured design over the year; emit r.csv and
/// summary.json.
inline int run_simulate(const RunConfig& cfg) {
    TimeBase tb = make_timebase(cfg);
    YearInputs in = load_inputs(cfg, tb);
    validate(cfg.design);
    SurvivalSeries s = simulate_year(in, cfg.design, tb);
    auto dir = detail::ensure_output_dir(cfg);
    detail::write_survival_artifacts(s, cfg, dir);
    return kExitOk;
}

/// stats: recompute the probability curve and aggregations from an existing
/// r.csv.
inline int run_stats(const RunConfig& cfg) {
    TimeBase tb = make_timebase(cfg);
    std::filesystem::path r_path =
        cfg.r_file.empty() ? std::filesystem::path(cfg.output_dir) / "r.csv"
                           : std::filesystem::path(cfg.r_file);
    std::ifstream in(r_path);
    if (!in) {
        throw ConfigError("r_file", "cannot open '" + r_path.string() + "'");
    }
    SurvivalSeries s = read_r_csv(in, tb);
    auto dir = detail::ensure_output_dir(cfg);
    detail::write_stats_artifacts(s, cfg, dir);
    return kExitOk;
}

/// size: grid search for the cheapest design that rides through the window;
/// emit design.json.
inline int run_size(const RunConfig& cfg) {
    TimeBase tb = make_timebase(cfg);
    YearInputs in = load_inputs(cfg, tb);
    SizingOutcome outcome = size_system(sizing_spec_from(cfg), window_from(cfg, tb), in, tb);
    auto dir = detail::ensure_output_dir(cfg);
    write_file_atomic(dir / "design.json", design_json(outcome).dump(2) + "\n");
    return outcome.feasible ? kExitOk : kExitInfeasible;
}

/// assess: size, then sweep the chosen design, then stats. design.json is
/// written even when sizing fails.
inline int run_assess(const RunConfig& cfg) {
    TimeBase tb = make_timebase(cfg);
    YearInputs in = load_inputs(cfg, tb);
    SizingOutcome outcome = size_system(sizing_spec_from(cfg), window_from(cfg, tb), in, tb);
    auto dir = detail::ensure_output_dir(cfg);
    write_file_atomic(dir / "design.json", design_json(outcome).dump(2) + "\n");
    if (!outcome.feasible) {
        return kExitInfeasible;
    }
    SurvivalSeries s = simulate_year(in, outcome.design, tb);
    detail::write_survival_artifacts(s, cfg, dir);
    detail::write_stats_artifacts(s, cfg, dir);
    return kExitOk;
}

} // namespace resil
