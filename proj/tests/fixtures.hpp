#pragma once

// Shared builders for synthetic years, designs, and randomized inputs.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "resil/design.hpp"
#include "resil/dispatch.hpp"
#include "resil/timebase.hpp"

namespace fixtures {

using resil::SystemDesign;
using resil::TimeBase;
using resil::Unit;
using resil::YearInputs;
using resil::YearSeries;

inline TimeBase toy_tb(std::int64_t ts, int sph = 1) { return TimeBase::custom(sph, ts); }

inline YearSeries kw(std::vector<double> v, const TimeBase& tb) {
    return YearSeries(std::move(v), Unit::kW, tb);
}

inline YearSeries factor(std::vector<double> v, const TimeBase& tb) {
    return YearSeries(std::move(v), Unit::Factor, tb);
}

inline YearSeries fraction(std::vector<double> v, const TimeBase& tb) {
    return YearSeries(std::move(v), Unit::Fraction, tb);
}

inline YearInputs inputs(YearSeries load, YearSeries pv, YearSeries wind, YearSeries soc) {
    return YearInputs{std::move(load), std::move(pv), std::move(wind), std::move(soc)};
}

inline YearInputs constant_inputs(double load_kw, const TimeBase& tb,
                                  double soc_frac = 1.0) {
    return YearInputs{YearSeries::constant(load_kw, Unit::kW, tb),
                      YearSeries::constant(0.0, Unit::Factor, tb),
                      YearSeries::constant(0.0, Unit::Factor, tb),
                      YearSeries::constant(soc_frac, Unit::Fraction, tb)};
}

// Bell-ish clear-sky shape: zero outside 06:00-18:00, peaking at noon.
inline double solar_shape(int hour) {
    if (hour < 6 || hour >= 18) {
        return 0.0;
    }
    double x = (hour - 6) / 12.0;
    return std::sin(x * 3.14159265358979323846);
}

inline YearSeries solar_factor(const TimeBase& tb) {
    std::vector<double> v(static_cast<std::size_t>(tb.ts));
    for (std::int64_t i = 0; i < tb.ts; ++i) {
        v[static_cast<std::size_t>(i)] = solar_shape(resil::hour_of_day(i, tb));
    }
    return factor(std::move(v), tb);
}

// Flat load with distinct weekday/weekend levels; index 0 is a Sunday.
inline YearSeries weekly_load(const TimeBase& tb, double weekday_kw, double weekend_kw) {
    std::vector<double> v(static_cast<std::size_t>(tb.ts));
    for (std::int64_t i = 0; i < tb.ts; ++i) {
        int dow = resil::day_of_week(i, tb);
        v[static_cast<std::size_t>(i)] = (dow == 0 || dow == 6) ? weekend_kw : weekday_kw;
    }
    return kw(std::move(v), tb);
}

// Values on a 1/8 lattice so cross-implementation comparisons hit exact ties.
inline double nice(std::mt19937_64& rng, double lo, double hi) {
    auto steps = static_cast<std::int64_t>((hi - lo) * 8.0);
    std::uniform_int_distribution<std::int64_t> dist(0, steps);
    return lo + static_cast<double>(dist(rng)) / 8.0;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline bool chance(std::mt19937_64& rng, double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

// Random but valid design; components drop out with some probability so the
// zero-capacity edge cases stay covered.
inline SystemDesign random_design(std::mt19937_64& rng, bool nice_values = true) {
    auto val = [&](double lo, double hi) {
        return nice_values ? nice(rng, lo, hi) : uniform(rng, lo, hi);
    };
    SystemDesign d;
    if (chance(rng, 0.8)) {
        d.pv_kw = val(0.0, 30.0);
    }
    if (chance(rng, 0.3)) {
        d.wind_kw = val(0.0, 20.0);
    }
    if (chance(rng, 0.8)) {
        d.storage_kwh = val(1.0, 60.0);
        d.storage_kw = val(1.0, 25.0);
        d.soc_min_frac = nice_values ? 0.25 * std::uniform_int_distribution<int>(0, 3)(rng)
                                     : uniform(rng, 0.0, 0.9);
        if (chance(rng, 0.5)) {
            d.charge_eff = nice_values ? 0.75 : uniform(rng, 0.5, 1.0);
            d.discharge_eff = nice_values ? 0.875 : uniform(rng, 0.5, 1.0);
        }
    }
    if (chance(rng, 0.8)) {
        d.gen_kw = val(0.0, 25.0);
        d.fuel_available_gal = val(0.0, 40.0);
        d.fuel_slope_gal_per_kwh = nice_values ? 0.125 : uniform(rng, 0.01, 0.3);
        if (chance(rng, 0.4)) {
            d.fuel_intercept_gal_per_hr = val(0.0, 2.0);
        }
        if (chance(rng, 0.4)) {
            d.min_turndown_frac = nice_values ? 0.5 : uniform(rng, 0.0, 1.0);
        }
    }
    return d;
}

inline YearInputs random_inputs(std::mt19937_64& rng, const TimeBase& tb,
                                bool nice_values = true) {
    auto ts = static_cast<std::size_t>(tb.ts);
    std::vector<double> load(ts), pv(ts), wind(ts), soc(ts);
    for (std::size_t i = 0; i < ts; ++i) {
        load[i] = nice_values ? nice(rng, 0.0, 20.0) : uniform(rng, 0.0, 20.0);
        pv[i] = nice_values ? nice(rng, 0.0, 1.0) : uniform(rng, 0.0, 1.0);
        wind[i] = nice_values ? nice(rng, 0.0, 1.0) : uniform(rng, 0.0, 1.0);
        soc[i] = nice_values ? nice(rng, 0.0, 1.0) : uniform(rng, 0.0, 1.0);
    }
    return YearInputs{kw(std::move(load), tb), factor(std::move(pv), tb),
                      factor(std::move(wind), tb), fraction(std::move(soc), tb)};
}

} // namespace fixtures
