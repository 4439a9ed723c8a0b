#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "resil/design.hpp"
#include "resil/errors.hpp"
#include "resil/timebase.hpp"

namespace resil {

// Guard for capacity-vs-load and fuel-vs-need comparisons, in the respective
// units, so accumulated rounding cannot fail a step the model should meet.
inline constexpr double kDispatchTol = 1e-9;

struct DispatchOutcome {
    StepResult result;
    OutageState state;
};

/// Per-year boundary inputs to an outage simulation: critical load, per-kW
/// production factors, and the grid-connected state-of-charge fractions the
/// battery starts an outage from.
struct YearInputs {
    YearSeries load;        // kW
    YearSeries pv_factor;   // output per kW of nameplate
    YearSeries wind_factor; // output per kW of nameplate
    YearSeries soc_frac;    // fraction of storage_kwh
};

inline void validate(const YearInputs& in, const TimeBase& tb) {
    auto check = [&](const YearSeries& s, Unit unit, const char* name) {
        if (std::ssize(s.values()) != tb.ts) {
            throw WrongLengthError(std::string(name) + " series has " +
                                   std::to_string(s.size()) + " values, expected " +
                                   std::to_string(tb.ts));
        }
        if (s.unit() != unit) {
            throw InvalidInputError(std::string(name) + " series must be tagged " +
                                    unit_name(unit));
        }
    };
    check(in.load, Unit::kW, "load");
    check(in.pv_factor, Unit::Factor, "pv_factor");
    check(in.wind_factor, Unit::Factor, "wind_factor");
    check(in.soc_frac, Unit::Fraction, "soc_frac");
}

namespace detail {

// Push surplus power into the battery, limited by the power rating and the
// remaining headroom. Returns the power actually drawn at the terminal.
inline double charge_battery(const SystemDesign& d, OutageState& st, double surplus_kw,
                             double dt_hours) {
    if (surplus_kw <= 0.0 || d.storage_kwh <= 0.0) {
        return 0.0;
    }
    double headroom_kwh = d.storage_kwh - st.soc_kwh;
    if (headroom_kwh <= 0.0) {
        return 0.0;
    }
    double charge_kw = std::min(surplus_kw, d.storage_kw);
    charge_kw = std::min(charge_kw, headroom_kwh / (d.charge_eff * dt_hours));
    st.soc_kwh = std::min(d.storage_kwh, st.soc_kwh + d.charge_eff * charge_kw * dt_hours);
    return charge_kw;
}

// Load-following order: renewables, then generator (all-or-nothing on both
// capacity and fuel), then battery (all-or-nothing against the residual).
// On failure the state is returned unchanged.
inline DispatchOutcome step_unchecked(double load_kw, double pv_out_kw, double wind_out_kw,
                                      const SystemDesign& d, OutageState st,
                                      double dt_hours) {
    StepResult res;
    const double renewables_kw = pv_out_kw + wind_out_kw;
    const double net_kw = load_kw - renewables_kw;

    if (net_kw <= kDispatchTol) {
        double surplus_kw = std::max(0.0, -net_kw);
        res.charge_kw = charge_battery(d, st, surplus_kw, dt_hours);
        res.dumped_kw = surplus_kw - res.charge_kw;
        res.renewable_to_load = load_kw;
        res.met = true;
        return {res, st};
    }

    res.renewable_to_load = renewables_kw;

    if (d.gen_kw >= net_kw - kDispatchTol) {
        double output_kw = std::max(net_kw, d.min_turndown_frac * d.gen_kw);
        double fuel_needed_gal =
            (d.fuel_slope_gal_per_kwh * output_kw + d.fuel_intercept_gal_per_hr) * dt_hours;
        if (st.fuel_gal >= fuel_needed_gal - kDispatchTol) {
            st.fuel_gal = std::max(0.0, st.fuel_gal - fuel_needed_gal);
            res.fuel_used_gal = fuel_needed_gal;
            res.gen_output = output_kw;
            res.gen_to_load = net_kw;
            double excess_kw = output_kw - net_kw;
            res.charge_kw = charge_battery(d, st, excess_kw, dt_hours);
            res.dumped_kw = excess_kw - res.charge_kw;
            res.met = true;
            return {res, st};
        }
    }

    const double soc_min_kwh = d.soc_min_frac * d.storage_kwh;
    double deliverable_kw =
        std::min(d.storage_kw, (st.soc_kwh - soc_min_kwh) * d.discharge_eff / dt_hours);
    if (deliverable_kw >= net_kw - kDispatchTol) {
        st.soc_kwh = std::max(soc_min_kwh, st.soc_kwh - net_kw * dt_hours / d.discharge_eff);
        res.storage_to_load = net_kw;
        res.met = true;
        return {res, st};
    }

    res.met = false;
    return {res, st};
}

} // namespace detail

/// Dispatches one time step. Pure: the successor state is part of the result.
inline DispatchOutcome dispatch_step(double load_kw, double pv_out_kw, double wind_out_kw,
                                     const SystemDesign& design, const OutageState& state,
                                     double dt_hours) {
    detail::require_finite_nonneg(load_kw, "load_kw");
    detail::require_finite_nonneg(pv_out_kw, "pv_out_kw");
    detail::require_finite_nonneg(wind_out_kw, "wind_out_kw");
    if (!std::isfinite(dt_hours) || dt_hours <= 0.0) {
        throw InvalidInputError("dt_hours must be positive");
    }
    validate(design);
    detail::require_finite_nonneg(state.soc_kwh, "state.soc_kwh");
    detail::require_finite_nonneg(state.fuel_gal, "state.fuel_gal");
    const double soc_min_kwh = design.soc_min_frac * design.storage_kwh;
    if (state.soc_kwh < soc_min_kwh - kDispatchTol ||
        state.soc_kwh > design.storage_kwh + kDispatchTol) {
        throw InvalidInputError("state.soc_kwh outside [soc_min, storage_kwh]");
    }
    return detail::step_unchecked(load_kw, pv_out_kw, wind_out_kw, design, state, dt_hours);
}

inline OutageState initial_state(std::int64_t start, const YearInputs& in,
                                 const SystemDesign& d) {
    double frac = std::clamp(in.soc_frac[static_cast<std::size_t>(start)],
                             d.soc_min_frac, 1.0);
    return OutageState{frac * d.storage_kwh, d.fuel_available_gal};
}

/// Consecutive met steps from `start`, capped at `max_steps`. Indexing wraps
/// around the year so late starts can survive into the next January.
inline std::int64_t simulate_survival(std::int64_t start, const YearInputs& in,
                                      const SystemDesign& design, const TimeBase& tb,
                                      std::int64_t max_steps) {
    validate(in, tb);
    validate(design);
    check_index(start, tb);
    if (max_steps < 0) {
        throw InvalidInputError("max_steps must be non-negative");
    }

    OutageState st = initial_state(start, in, design);
    const double* load = in.load.data();
    const double* pv_f = in.pv_factor.data();
    const double* wind_f = in.wind_factor.data();
    const double dt = tb.dt_hours;
    const std::size_t ts = static_cast<std::size_t>(tb.ts);

    std::int64_t survived = 0;
    std::size_t idx = static_cast<std::size_t>(start);
    while (survived < max_steps) {
        DispatchOutcome out = detail::step_unchecked(
            load[idx], design.pv_kw * pv_f[idx], design.wind_kw * wind_f[idx], design, st, dt);
        if (!out.result.met) {
            break;
        }
        st = out.state;
        ++survived;
        ++idx;
        if (idx == ts) {
            idx = 0;
        }
    }
    return survived;
}

/// Survived duration in steps for one outage start, capped at a full year.
inline std::int64_t simulate_outage(std::int64_t start, const YearInputs& in,
                                    const SystemDesign& design, const TimeBase& tb) {
    return simulate_survival(start, in, design, tb, tb.ts);
}

} // namespace resil
