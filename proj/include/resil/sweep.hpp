#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "resil/dispatch.hpp"
#include "resil/parallel.hpp"
#include "resil/timebase.hpp"

namespace resil {

/// Survived outage duration for every start index, in time steps.
struct SurvivalSeries {
    std::vector<std::int64_t> r;
    TimeBase tb;

    double hours_at(std::size_t j) const { return static_cast<double>(r[j]) * tb.dt_hours; }

    std::int64_t max_survived_steps() const {
        return r.empty() ? 0 : *std::max_element(r.begin(), r.end());
    }
};

/// One outage simulation per start index. Starts are independent; the result
/// is bit-identical for any worker count.
inline SurvivalSeries simulate_year(const YearInputs& in, const SystemDesign& design,
                                    const TimeBase& tb, unsigned threads = 0) {
    validate(in, tb);
    validate(design);
    SurvivalSeries out{std::vector<std::int64_t>(static_cast<std::size_t>(tb.ts), 0), tb};
    std::int64_t* r = out.r.data();
    parallel_for_index(tb.ts, resolve_threads(threads), [&](std::int64_t j) {
        r[j] = simulate_survival(j, in, design, tb, tb.ts);
    });
    return out;
}

struct Summary {
    double min_hours{0.0};
    double max_hours{0.0};
    double mean_hours{0.0};
};

inline Summary summary(const SurvivalSeries& s) {
    auto [mn, mx] = std::minmax_element(s.r.begin(), s.r.end());
    std::int64_t total_steps = std::accumulate(s.r.begin(), s.r.end(), std::int64_t{0});
    double n = static_cast<double>(s.r.size());
    return Summary{static_cast<double>(*mn) * s.tb.dt_hours,
                   static_cast<double>(*mx) * s.tb.dt_hours,
                   static_cast<double>(total_steps) * s.tb.dt_hours / n};
}

} // namespace resil
