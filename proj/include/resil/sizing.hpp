#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "resil/design.hpp"
#include "resil/dispatch.hpp"
#include "resil/errors.hpp"
#include "resil/timebase.hpp"

namespace resil {

/// Outage the sized system must ride through. Indexing wraps around the year.
struct OutageWindow {
    std::int64_t start{0};
    std::int64_t duration_steps{1};
};

inline void validate(const OutageWindow& w, const TimeBase& tb) {
    check_index(w.start, tb);
    if (w.duration_steps < 1 || w.duration_steps > tb.ts) {
        throw InvalidInputError("outage duration_steps must lie in [1, ts]");
    }
}

/// Candidate grids for the sized technologies plus everything held fixed
/// (wind, fuel stock, fuel curve, efficiencies, SOC floor, turndown) and the
/// capital-cost proxy coefficients.
struct SizingSpec {
    std::vector<double> pv_kw_grid;
    std::vector<double> storage_kw_grid;
    std::vector<double> storage_kwh_grid;
    std::vector<double> gen_kw_grid;
    SystemDesign fixed;
    double cost_per_pv_kw{0.0};
    double cost_per_storage_kw{0.0};
    double cost_per_storage_kwh{0.0};
    double cost_per_gen_kw{0.0};
};

namespace detail {

inline void check_grid(const std::vector<double>& grid, const char* name) {
    if (grid.empty()) {
        throw EmptyGridError(std::string(name) + " candidate grid is empty");
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        require_finite_nonneg(grid[i], name);
        if (i > 0 && grid[i] <= grid[i - 1]) {
            throw InvalidInputError(std::string(name) +
                                    " candidate grid must be strictly ascending");
        }
    }
}

} // namespace detail

inline void validate(const SizingSpec& spec) {
    detail::check_grid(spec.pv_kw_grid, "pv_kw");
    detail::check_grid(spec.storage_kw_grid, "storage_kw");
    detail::check_grid(spec.storage_kwh_grid, "storage_kwh");
    detail::check_grid(spec.gen_kw_grid, "gen_kw");
    detail::require_finite_nonneg(spec.cost_per_pv_kw, "cost_per_pv_kw");
    detail::require_finite_nonneg(spec.cost_per_storage_kw, "cost_per_storage_kw");
    detail::require_finite_nonneg(spec.cost_per_storage_kwh, "cost_per_storage_kwh");
    detail::require_finite_nonneg(spec.cost_per_gen_kw, "cost_per_gen_kw");
}

/// True iff the design sustains the critical load for the whole window.
inline bool window_feasible(const SystemDesign& design, const OutageWindow& window,
                            const YearInputs& in, const TimeBase& tb) {
    validate(window, tb);
    return simulate_survival(window.start, in, design, tb, window.duration_steps) ==
           window.duration_steps;
}

struct SizingOutcome {
    bool feasible{false};
    SystemDesign design{};
    double cost{0.0};
};

/// Candidate design for one grid combination. A zero-energy battery is
/// canonicalized to zero power so the design invariant holds.
inline SystemDesign candidate_design(const SizingSpec& spec, double pv_kw,
                                     double storage_kw, double storage_kwh,
                                     double gen_kw) {
    SystemDesign d = spec.fixed;
    d.pv_kw = pv_kw;
    d.storage_kw = storage_kwh == 0.0 ? 0.0 : storage_kw;
    d.storage_kwh = storage_kwh;
    d.gen_kw = gen_kw;
    return d;
}

inline double capital_cost(const SizingSpec& spec, const SystemDesign& d) {
    return spec.cost_per_pv_kw * d.pv_kw + spec.cost_per_storage_kw * d.storage_kw +
           spec.cost_per_storage_kwh * d.storage_kwh + spec.cost_per_gen_kw * d.gen_kw;
}

/// Exhaustive search over the candidate grids for the cheapest feasible
/// design. Ties keep the first hit in (pv_kw, storage_kwh, storage_kw, gen_kw)
/// ascending order.
inline SizingOutcome size_system(const SizingSpec& spec, const OutageWindow& window,
                                 const YearInputs& in, const TimeBase& tb) {
    validate(spec);
    validate(window, tb);
    validate(in, tb);
    validate(spec.fixed);

    SizingOutcome best;
    for (double pv : spec.pv_kw_grid) {
        for (double kwh : spec.storage_kwh_grid) {
            for (double kw : spec.storage_kw_grid) {
                for (double gen : spec.gen_kw_grid) {
                    SystemDesign d = candidate_design(spec, pv, kw, kwh, gen);
                    double cost = capital_cost(spec, d);
                    if (best.feasible && cost >= best.cost) {
                        continue;
                    }
                    if (window_feasible(d, window, in, tb)) {
                        best = SizingOutcome{true, d, cost};
                    }
                }
            }
        }
    }
    return best;
}

} // namespace resil
