#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "resil/errors.hpp"

namespace resil {

inline constexpr std::int64_t kHoursPerYear = 8760;

// Non-leap calendar, Jan 1 on a Sunday (2017 layout). Index 0 is hour 0 of Jan 1.
inline constexpr std::array<int, 12> kDaysPerMonth = {31, 28, 31, 30, 31, 30,
                                                      31, 31, 30, 31, 30, 31};

/// Simulation year discretization. ts = 8760 * steps_per_hour for production
/// bases; custom() builds reduced-scale bases for fixtures.
struct TimeBase {
    int steps_per_hour{1};
    std::int64_t ts{kHoursPerYear};
    double dt_hours{1.0};

    static TimeBase hourly() { return with_steps_per_hour(1); }

    static TimeBase with_steps_per_hour(int sph) {
        if (sph < 1) {
            throw InvalidInputError("steps_per_hour must be >= 1");
        }
        return TimeBase{sph, kHoursPerYear * sph, 1.0 / sph};
    }

    // Arbitrary total step count, for small test years. Calendar lookups still
    // assume the index lies within one non-leap year.
    static TimeBase custom(int sph, std::int64_t total_steps) {
        if (sph < 1 || total_steps < 1) {
            throw InvalidInputError("time base must have sph >= 1 and ts >= 1");
        }
        return TimeBase{sph, total_steps, 1.0 / sph};
    }

    bool is_full_year() const { return ts == kHoursPerYear * steps_per_hour; }

    friend bool operator==(const TimeBase&, const TimeBase&) = default;
};

inline void check_index(std::int64_t index, const TimeBase& tb) {
    if (index < 0 || index >= tb.ts) {
        throw IndexOutOfRangeError("step index " + std::to_string(index) +
                                   " outside [0, " + std::to_string(tb.ts) + ")");
    }
}

/// Hour of day in [0, 23] for a step index.
inline int hour_of_day(std::int64_t index, const TimeBase& tb) {
    check_index(index, tb);
    return static_cast<int>((index / tb.steps_per_hour) % 24);
}

/// Month in [1, 12] under non-leap cumulative day boundaries.
inline int month_of(std::int64_t index, const TimeBase& tb) {
    check_index(index, tb);
    std::int64_t day = index / tb.steps_per_hour / 24;
    int month = 1;
    for (int d : kDaysPerMonth) {
        if (day < d) {
            return month;
        }
        day -= d;
        ++month;
    }
    throw IndexOutOfRangeError("step index beyond a 365-day year");
}

/// Day of week with 0 = Sunday (Jan 1, 2017).
inline int day_of_week(std::int64_t index, const TimeBase& tb) {
    check_index(index, tb);
    return static_cast<int>((index / tb.steps_per_hour / 24) % 7);
}

/// Shortest decimal that round-trips to the same double.
inline std::string format_double(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

enum class Unit { kW, Fraction, Factor };

inline const char* unit_name(Unit u) {
    switch (u) {
    case Unit::kW: return "kW";
    case Unit::Fraction: return "fraction";
    case Unit::Factor: return "factor";
    }
    return "?";
}

/// One year of values on a TimeBase. Values are validated on construction:
/// finite, non-negative, fractions in [0, 1], production factors in [0, 1]
/// unless values above 1 are explicitly allowed.
class YearSeries {
public:
    YearSeries(std::vector<double> values, Unit unit, const TimeBase& tb,
               bool allow_factor_above_one = false)
        : values_(std::move(values)), unit_(unit) {
        if (std::ssize(values_) != tb.ts) {
            throw WrongLengthError("series has " + std::to_string(values_.size()) +
                                   " values, expected " + std::to_string(tb.ts));
        }
        for (std::size_t i = 0; i < values_.size(); ++i) {
            check_value(values_[i], unit_, allow_factor_above_one, i + 1);
        }
    }

    static YearSeries constant(double v, Unit unit, const TimeBase& tb,
                               bool allow_factor_above_one = false) {
        return YearSeries(std::vector<double>(static_cast<std::size_t>(tb.ts), v),
                          unit, tb, allow_factor_above_one);
    }

    /// Copy with every value multiplied by `factor` (e.g. critical load fraction).
    YearSeries scaled(double factor, const TimeBase& tb) const {
        std::vector<double> v(values_);
        for (double& x : v) {
            x *= factor;
        }
        return YearSeries(std::move(v), unit_, tb, true);
    }

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    const double* data() const { return values_.data(); }
    const std::vector<double>& values() const { return values_; }
    Unit unit() const { return unit_; }

    friend bool operator==(const YearSeries&, const YearSeries&) = default;

    static void check_value(double v, Unit unit, bool allow_factor_above_one,
                            std::size_t lineno) {
        if (!std::isfinite(v)) {
            throw NonFiniteError("non-finite value at data line " +
                                 std::to_string(lineno));
        }
        if (v < 0.0) {
            throw NegativeValueError("negative value at data line " +
                                     std::to_string(lineno));
        }
        if (unit == Unit::Fraction && v > 1.0) {
            throw OutOfRangeError("fraction above 1 at data line " +
                                  std::to_string(lineno));
        }
        if (unit == Unit::Factor && v > 1.0 && !allow_factor_above_one) {
            throw OutOfRangeError("production factor above 1 at data line " +
                                  std::to_string(lineno));
        }
    }

private:
    std::vector<double> values_;
    Unit unit_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

} // namespace detail

/// Reads one decimal number per line. '#' comment lines and blank lines are
/// ignored; exactly tb.ts data lines are required.
inline YearSeries parse_series(std::istream& in, Unit unit, const TimeBase& tb,
                               bool allow_factor_above_one = false) {
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(tb.ts));
    std::string line;
    std::size_t data_lines = 0;
    while (std::getline(in, line)) {
        std::string_view field = detail::trim(line);
        if (field.empty() || field.front() == '#') {
            continue;
        }
        ++data_lines;
        double v = 0.0;
        auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (ec != std::errc{} || end != field.data() + field.size()) {
            throw NonFiniteError("unparseable number at data line " +
                                 std::to_string(data_lines));
        }
        YearSeries::check_value(v, unit, allow_factor_above_one, data_lines);
        values.push_back(v);
    }
    if (std::ssize(values) != tb.ts) {
        throw WrongLengthError("series has " + std::to_string(values.size()) +
                               " data lines, expected " + std::to_string(tb.ts));
    }
    return YearSeries(std::move(values), unit, tb, allow_factor_above_one);
}

/// Inverse of parse_series; emits shortest round-trip decimals, one per line.
inline void serialize_series(const YearSeries& series, std::ostream& out) {
    for (std::size_t i = 0; i < series.size(); ++i) {
        out << format_double(series[i]) << '\n';
    }
}

} // namespace resil
