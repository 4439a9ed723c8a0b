#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "resil/design.hpp"
#include "resil/dispatch.hpp"
#include "resil/errors.hpp"
#include "resil/sizing.hpp"
#include "resil/stats.hpp"
#include "resil/timebase.hpp"

namespace resil {

/// Everything a run needs, collected from a flat key = value file plus
/// command-line overrides.
struct RunConfig {
    int steps_per_hour{1};
    std::string load_file;
    std::string pv_factor_file;
    std::string wind_factor_file;
    std::string soc_file;
    bool allow_factor_above_one{false};
    double critical_load_fraction{1.0};

    SystemDesign design{};

    std::vector<double> pv_kw_grid;
    std::vector<double> storage_kw_grid;
    std::vector<double> storage_kwh_grid;
    std::vector<double> gen_kw_grid;
    double cost_per_pv_kw{0.0};
    double cost_per_storage_kw{0.0};
    double cost_per_storage_kwh{0.0};
    double cost_per_gen_kw{0.0};

    std::int64_t outage_start{0};
    std::int64_t outage_duration_steps{24};

    Comparator survival_comparator{Comparator::Strict};
    std::vector<int> prob_durations{24};
    std::string output_dir{"."};
    std::string r_file;
};

using KeyValues = std::vector<std::pair<std::string, std::string>>;

/// Flat `key = value` lines; blank lines and lines starting with '#' ignored.
inline KeyValues parse_key_values(std::istream& in) {
    KeyValues kvs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view v = detail::trim(line);
        if (v.empty() || v.front() == '#') {
            continue;
        }
        auto eq = v.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(lineno),
                              "expected 'key = value'");
        }
        std::string key(detail::trim(v.substr(0, eq)));
        std::string value(detail::trim(v.substr(eq + 1)));
        if (key.empty()) {
            throw ConfigError("line " + std::to_string(lineno), "empty key");
        }
        kvs.emplace_back(std::move(key), std::move(value));
    }
    return kvs;
}

namespace detail {

inline double config_double(const std::string& key, const std::string& value) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || p != value.data() + value.size()) {
        throw ConfigError(key, "not a number: '" + value + "'");
    }
    return v;
}

inline std::int64_t config_int(const std::string& key, const std::string& value) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || p != value.data() + value.size()) {
        throw ConfigError(key, "not an integer: '" + value + "'");
    }
    return v;
}

inline bool config_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") {
        return true;
    }
    if (value == "false" || value == "0") {
        return false;
    }
    throw ConfigError(key, "expected true/false: '" + value + "'");
}

inline std::vector<double> config_double_list(const std::string& key,
                                              const std::string& value) {
    std::vector<double> out;
    std::string_view rest(value);
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string item(trim(rest.substr(0, comma)));
        if (item.empty()) {
            throw ConfigError(key, "empty list item");
        }
        out.push_back(config_double(key, item));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    if (out.empty()) {
        throw ConfigError(key, "list is empty");
    }
    return out;
}

} // namespace detail

inline void apply_key(RunConfig& cfg, const std::string& key, const std::string& value) {
    using detail::config_bool;
    using detail::config_double;
    using detail::config_double_list;
    using detail::config_int;

    if (key == "steps_per_hour") {
        cfg.steps_per_hour = static_cast<int>(config_int(key, value));
    } else if (key == "load_file") {
        cfg.load_file = value;
    } else if (key == "pv_factor_file") {
        cfg.pv_factor_file = value;
    } else if (key == "wind_factor_file") {
        cfg.wind_factor_file = value;
    } else if (key == "soc_file") {
        cfg.soc_file = value;
    } else if (key == "allow_factor_above_one") {
        cfg.allow_factor_above_one = config_bool(key, value);
    } else if (key == "critical_load_fraction") {
        cfg.critical_load_fraction = config_double(key, value);
    } else if (key == "pv_kw") {
        cfg.design.pv_kw = config_double(key, value);
    } else if (key == "wind_kw") {
        cfg.design.wind_kw = config_double(key, value);
    } else if (key == "storage_kw") {
        cfg.design.storage_kw = config_double(key, value);
    } else if (key == "storage_kwh") {
        cfg.design.storage_kwh = config_double(key, value);
    } else if (key == "soc_min_frac") {
        cfg.design.soc_min_frac = config_double(key, value);
    } else if (key == "charge_eff") {
        cfg.design.charge_eff = config_double(key, value);
    } else if (key == "discharge_eff") {
        cfg.design.discharge_eff = config_double(key, value);
    } else if (key == "gen_kw") {
        cfg.design.gen_kw = config_double(key, value);
    } else if (key == "fuel_available_gal") {
        cfg.design.fuel_available_gal = config_double(key, value);
    } else if (key == "fuel_slope_gal_per_kwh") {
        cfg.design.fuel_slope_gal_per_kwh = config_double(key, value);
    } else if (key == "fuel_intercept_gal_per_hr") {
        cfg.design.fuel_intercept_gal_per_hr = config_double(key, value);
    } else if (key == "min_turndown_frac") {
        cfg.design.min_turndown_frac = config_double(key, value);
    } else if (key == "pv_kw_grid") {
        cfg.pv_kw_grid = config_double_list(key, value);
    } else if (key == "storage_kw_grid") {
        cfg.storage_kw_grid = config_double_list(key, value);
    } else if (key == "storage_kwh_grid") {
        cfg.storage_kwh_grid = config_double_list(key, value);
    } else if (key == "gen_kw_grid") {
        cfg.gen_kw_grid = config_double_list(key, value);
    } else if (key == "cost_per_pv_kw") {
        cfg.cost_per_pv_kw = config_double(key, value);
    } else if (key == "cost_per_storage_kw") {
        cfg.cost_per_storage_kw = config_double(key, value);
    } else if (key == "cost_per_storage_kwh") {
        cfg.cost_per_storage_kwh = config_double(key, value);
    } else if (key == "cost_per_gen_kw") {
        cfg.cost_per_gen_kw = config_double(key, value);
    } else if (key == "outage_start") {
        cfg.outage_start = config_int(key, value);
    } else if (key == "outage_duration_steps") {
        cfg.outage_duration_steps = config_int(key, value);
    } else if (key == "survival_comparator") {
        if (value == "strict") {
            cfg.survival_comparator = Comparator::Strict;
        } else if (value == "inclusive") {
            cfg.survival_comparator = Comparator::Inclusive;
        } else {
            throw ConfigError(key, "expected strict|inclusive: '" + value + "'");
        }
    } else if (key == "prob_durations") {
        cfg.prob_durations.clear();
        for (double v : config_double_list(key, value)) {
            int d = static_cast<int>(v);
            if (v != static_cast<double>(d) || d < 1) {
                throw ConfigError(key, "durations must be positive integers");
            }
            cfg.prob_durations.push_back(d);
        }
    } else if (key == "output_dir") {
        cfg.output_dir = value;
    } else if (key == "r_file") {
        cfg.r_file = value;
    } else {
        throw ConfigError(key, "unknown key");
    }
}

inline void apply_key_values(RunConfig& cfg, const KeyValues& kvs) {
    for (const auto& [key, value] : kvs) {
        apply_key(cfg, key, value);
    }
}

inline RunConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config", "cannot open '" + path.string() + "'");
    }
    RunConfig cfg;
    apply_key_values(cfg, parse_key_values(in));
    return cfg;
}

inline TimeBase make_timebase(const RunConfig& cfg) {
    if (cfg.steps_per_hour < 1) {
        throw ConfigError("steps_per_hour", "must be >= 1");
    }
    return TimeBase::with_steps_per_hour(cfg.steps_per_hour);
}

namespace detail {

inline YearSeries series_from_file(const std::string& key, const std::string& path,
                                   Unit unit, const TimeBase& tb, bool allow_above_one) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError(key, "cannot open '" + path + "'");
    }
    try {
        return parse_series(in, unit, tb, allow_above_one);
    } catch (const Error& e) {
        throw ConfigError(key, std::string(e.what()) + " in '" + path + "'");
    }
}

} // namespace detail

/// Loads the four series. Missing factor files mean no such resource; a
/// missing SOC file means batteries start outages full. The critical load
/// fraction is applied to the load series here, before any simulation.
inline YearInputs load_inputs(const RunConfig& cfg, const TimeBase& tb) {
    if (!(std::isfinite(cfg.critical_load_fraction) && cfg.critical_load_fraction > 0.0 &&
          cfg.critical_load_fraction <= 1.0)) {
        throw ConfigError("critical_load_fraction", "must lie in (0, 1]");
    }
    if (cfg.load_file.empty()) {
        throw ConfigError("load_file", "is required");
    }
    YearSeries load =
        detail::series_from_file("load_file", cfg.load_file, Unit::kW, tb, true)
            .scaled(cfg.critical_load_fraction, tb);
    YearSeries pv = cfg.pv_factor_file.empty()
                        ? YearSeries::constant(0.0, Unit::Factor, tb)
                        : detail::series_from_file("pv_factor_file", cfg.pv_factor_file,
                                                   Unit::Factor, tb,
                                                   cfg.allow_factor_above_one);
    YearSeries wind = cfg.wind_factor_file.empty()
                          ? YearSeries::constant(0.0, Unit::Factor, tb)
                          : detail::series_from_file("wind_factor_file",
                                                     cfg.wind_factor_file, Unit::Factor,
                                                     tb, cfg.allow_factor_above_one);
    YearSeries soc = cfg.soc_file.empty()
                         ? YearSeries::constant(1.0, Unit::Fraction, tb)
                         : detail::series_from_file("soc_file", cfg.soc_file,
                                                    Unit::Fraction, tb, false);
    return YearInputs{std::move(load), std::move(pv), std::move(wind), std::move(soc)};
}

inline SizingSpec sizing_spec_from(const RunConfig& cfg) {
    SizingSpec spec;
    spec.pv_kw_grid = cfg.pv_kw_grid;
    spec.storage_kw_grid = cfg.storage_kw_grid;
    spec.storage_kwh_grid = cfg.storage_kwh_grid;
    spec.gen_kw_grid = cfg.gen_kw_grid;
    spec.fixed = cfg.design;
    spec.cost_per_pv_kw = cfg.cost_per_pv_kw;
    spec.cost_per_storage_kw = cfg.cost_per_storage_kw;
    spec.cost_per_storage_kwh = cfg.cost_per_storage_kwh;
    spec.cost_per_gen_kw = cfg.cost_per_gen_kw;
    return spec;
}

inline OutageWindow window_from(const RunConfig& cfg, const TimeBase& tb) {
    OutageWindow w{cfg.outage_start, cfg.outage_duration_steps};
    try {
        validate(w, tb);
    } catch (const Error& e) {
        throw ConfigError("outage_start/outage_duration_steps", e.what());
    }
    return w;
}

} // namespace resil
