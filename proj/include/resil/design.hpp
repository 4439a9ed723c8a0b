#pragma once

#include <cmath>
#include <string>

#include "resil/errors.hpp"

namespace resil {

/// Fixed technology capacities and operating parameters. The battery power
/// rating is symmetric and applies at the terminal; efficiencies sit between
/// the terminal and stored energy. The fuel curve is linear in output with an
/// intercept charged per running hour.
struct SystemDesign {
    double pv_kw{0.0};
    double wind_kw{0.0};
    double storage_kw{0.0};
    double storage_kwh{0.0};
    double soc_min_frac{0.0};
    double charge_eff{1.0};
    double discharge_eff{1.0};
    double gen_kw{0.0};
    double fuel_available_gal{0.0};
    double fuel_slope_gal_per_kwh{0.0};
    double fuel_intercept_gal_per_hr{0.0};
    double min_turndown_frac{0.0};

    friend bool operator==(const SystemDesign&, const SystemDesign&) = default;
};

namespace detail {

inline void require_finite_nonneg(double v, const char* field) {
    if (!std::isfinite(v)) {
        throw InvalidInputError(std::string(field) + " must be finite");
    }
    if (v < 0.0) {
        throw InvalidInputError(std::string(field) + " must be non-negative");
    }
}

} // namespace detail

inline void validate(const SystemDesign& d) {
    detail::require_finite_nonneg(d.pv_kw, "pv_kw");
    detail::require_finite_nonneg(d.wind_kw, "wind_kw");
    detail::require_finite_nonneg(d.storage_kw, "storage_kw");
    detail::require_finite_nonneg(d.storage_kwh, "storage_kwh");
    detail::require_finite_nonneg(d.gen_kw, "gen_kw");
    detail::require_finite_nonneg(d.fuel_available_gal, "fuel_available_gal");
    detail::require_finite_nonneg(d.fuel_slope_gal_per_kwh, "fuel_slope_gal_per_kwh");
    detail::require_finite_nonneg(d.fuel_intercept_gal_per_hr, "fuel_intercept_gal_per_hr");
    if (!(std::isfinite(d.soc_min_frac) && d.soc_min_frac >= 0.0 && d.soc_min_frac < 1.0)) {
        throw InvalidInputError("soc_min_frac must lie in [0, 1)");
    }
    if (!(std::isfinite(d.charge_eff) && d.charge_eff > 0.0 && d.charge_eff <= 1.0)) {
        throw InvalidInputError("charge_eff must lie in (0, 1]");
    }
    if (!(std::isfinite(d.discharge_eff) && d.discharge_eff > 0.0 && d.discharge_eff <= 1.0)) {
        throw InvalidInputError("discharge_eff must lie in (0, 1]");
    }
    if (!(std::isfinite(d.min_turndown_frac) && d.min_turndown_frac >= 0.0 &&
          d.min_turndown_frac <= 1.0)) {
        throw InvalidInputError("min_turndown_frac must lie in [0, 1]");
    }
    if (d.storage_kwh == 0.0 && d.storage_kw != 0.0) {
        throw InvalidInputError("storage_kw must be 0 when storage_kwh is 0");
    }
}

/// Mutable per-outage state. Fuel cannot be re-supplied during an outage.
struct OutageState {
    double soc_kwh{0.0};
    double fuel_gal{0.0};

    friend bool operator==(const OutageState&, const OutageState&) = default;
};

/// Power flows for one dispatched step. When met, the three *_to_load flows
/// sum to the critical load.
struct StepResult {
    bool met{false};
    double renewable_to_load{0.0};
    double gen_to_load{0.0};
    double storage_to_load{0.0};
    double charge_kw{0.0};
    double gen_output{0.0};
    double dumped_kw{0.0};
    double fuel_used_gal{0.0};
};

} // namespace resil
