#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "resil/errors.hpp"
#include "resil/sweep.hpp"
#include "resil/timebase.hpp"

namespace resil {

/// Strict counts an outage of d hours as survived only when more than d hours
/// were sustained, exactly as the survival formula's indicator is written.
enum class Comparator { Strict, Inclusive };

inline bool survives(double r_hours, double d_hours, Comparator cmp) {
    return cmp == Comparator::Strict ? r_hours > d_hours : r_hours >= d_hours;
}

namespace detail {

// Empty subset means "all starts" here; the public overloads reject
// explicitly-empty subsets before calling in.
inline double probability_impl(const SurvivalSeries& s, double d_hours,
                               std::span<const std::int64_t> subset, Comparator cmp) {
    const double dt = s.tb.dt_hours;
    std::int64_t count = 0;
    std::int64_t n = 0;
    if (subset.empty()) {
        n = std::ssize(s.r);
        for (std::int64_t steps : s.r) {
            if (survives(static_cast<double>(steps) * dt, d_hours, cmp)) {
                ++count;
            }
        }
    } else {
        n = std::ssize(subset);
        for (std::int64_t j : subset) {
            check_index(j, s.tb);
            double h = static_cast<double>(s.r[static_cast<std::size_t>(j)]) * dt;
            if (survives(h, d_hours, cmp)) {
                ++count;
            }
        }
    }
    return static_cast<double>(count) / static_cast<double>(n);
}

inline void check_duration(double d_hours) {
    if (!std::isfinite(d_hours) || d_hours <= 0.0) {
        throw InvalidInputError("duration must be a positive number of hours");
    }
}

} // namespace detail

/// P(d) over all starts: the fraction of starts whose survived duration beats
/// d hours.
inline double survival_probability(const SurvivalSeries& s, double d_hours,
                                   Comparator cmp = Comparator::Strict) {
    detail::check_duration(d_hours);
    return detail::probability_impl(s, d_hours, {}, cmp);
}

/// P(d) over a subset of start indices.
inline double survival_probability(const SurvivalSeries& s, double d_hours,
                                   std::span<const std::int64_t> subset,
                                   Comparator cmp = Comparator::Strict) {
    detail::check_duration(d_hours);
    if (subset.empty()) {
        throw EmptySubsetError("subset of start indices is empty");
    }
    return detail::probability_impl(s, d_hours, subset, cmp);
}

/// P evaluated at integer durations d = 1..ceil(r_max_hours). p[k] holds the
/// probability for d = k + 1; under the strict comparator the last entry is 0.
struct ProbabilityCurve {
    std::vector<double> p;
    double r_max_hours{0.0};

    std::int64_t d_max() const { return std::ssize(p); }

    double at_hours(std::int64_t d) const {
        if (d < 1 || d > d_max()) {
            throw IndexOutOfRangeError("duration outside [1, d_max]");
        }
        return p[static_cast<std::size_t>(d - 1)];
    }
};

namespace detail {

inline ProbabilityCurve curve_impl(const SurvivalSeries& s,
                                   std::span<const std::int64_t> subset, Comparator cmp,
                                   std::int64_t pad_to_d_max) {
    std::int64_t max_steps = 0;
    if (subset.empty()) {
        max_steps = s.max_survived_steps();
    } else {
        for (std::int64_t j : subset) {
            check_index(j, s.tb);
            max_steps = std::max(max_steps, s.r[static_cast<std::size_t>(j)]);
        }
    }
    ProbabilityCurve curve;
    curve.r_max_hours = static_cast<double>(max_steps) * s.tb.dt_hours;
    std::int64_t d_max =
        std::max(pad_to_d_max, static_cast<std::int64_t>(std::ceil(curve.r_max_hours)));
    curve.p.reserve(static_cast<std::size_t>(d_max));
    for (std::int64_t d = 1; d <= d_max; ++d) {
        curve.p.push_back(probability_impl(s, static_cast<double>(d), subset, cmp));
    }
    return curve;
}

} // namespace detail

inline ProbabilityCurve probability_curve(const SurvivalSeries& s,
                                          Comparator cmp = Comparator::Strict) {
    return detail::curve_impl(s, {}, cmp, 0);
}

inline ProbabilityCurve probability_curve(const SurvivalSeries& s,
                                          std::span<const std::int64_t> subset,
                                          Comparator cmp = Comparator::Strict) {
    if (subset.empty()) {
        throw EmptySubsetError("subset of start indices is empty");
    }
    return detail::curve_impl(s, subset, cmp, 0);
}

/// Survival curves grouped by outage start hour-of-day and start month. Each
/// group uses its own size as the probability denominator; all curves are
/// padded with zeros to the overall d_max so rows align.
struct AggregatedCurves {
    std::vector<ProbabilityCurve> by_hour;  // 24
    std::vector<ProbabilityCurve> by_month; // 12
    std::vector<std::int64_t> hour_counts;  // starts per hour group
    std::vector<std::int64_t> month_counts; // starts per month group
    std::int64_t d_max{0};
};

inline AggregatedCurves aggregate(const SurvivalSeries& s,
                                  Comparator cmp = Comparator::Strict) {
    std::vector<std::vector<std::int64_t>> hour_groups(24);
    std::vector<std::vector<std::int64_t>> month_groups(12);
    for (std::int64_t j = 0; j < std::ssize(s.r); ++j) {
        hour_groups[static_cast<std::size_t>(hour_of_day(j, s.tb))].push_back(j);
        month_groups[static_cast<std::size_t>(month_of(j, s.tb) - 1)].push_back(j);
    }

    AggregatedCurves agg;
    agg.d_max = static_cast<std::int64_t>(
        std::ceil(static_cast<double>(s.max_survived_steps()) * s.tb.dt_hours));
    auto group_curve = [&](const std::vector<std::int64_t>& group) {
        if (group.empty()) {
            // possible only on reduced-scale bases that do not span the year
            ProbabilityCurve c;
            c.p.assign(static_cast<std::size_t>(agg.d_max), 0.0);
            return c;
        }
        return detail::curve_impl(s, group, cmp, agg.d_max);
    };
    for (const auto& g : hour_groups) {
        agg.by_hour.push_back(group_curve(g));
        agg.hour_counts.push_back(std::ssize(g));
    }
    for (const auto& g : month_groups) {
        agg.by_month.push_back(group_curve(g));
        agg.month_counts.push_back(std::ssize(g));
    }
    return agg;
}

} // namespace resil
