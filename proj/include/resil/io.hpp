#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "resil/errors.hpp"
#include "resil/sizing.hpp"
#include "resil/stats.hpp"
#include "resil/sweep.hpp"
#include "resil/timebase.hpp"

namespace resil {

inline constexpr const char* kSurvivalCsvHeader = "start_index,survived_hours";

inline void write_r_csv(const SurvivalSeries& s, std::ostream& out) {
    out << kSurvivalCsvHeader << '\n';
    for (std::size_t j = 0; j < s.r.size(); ++j) {
        out << j << ',' << format_double(s.hours_at(j)) << '\n';
    }
}

/// Parses the simulate output back into steps. Row order and count must match
/// the time base.
inline SurvivalSeries read_r_csv(std::istream& in, const TimeBase& tb) {
    std::string line;
    if (!std::getline(in, line) || detail::trim(line) != kSurvivalCsvHeader) {
        throw InvalidInputError(std::string("survival CSV must start with header '") +
                                kSurvivalCsvHeader + "'");
    }
    SurvivalSeries s{{}, tb};
    s.r.reserve(static_cast<std::size_t>(tb.ts));
    std::size_t row = 0;
    while (std::getline(in, line)) {
        std::string_view v = detail::trim(line);
        if (v.empty()) {
            continue;
        }
        auto comma = v.find(',');
        if (comma == std::string_view::npos) {
            throw InvalidInputError("survival CSV row " + std::to_string(row) +
                                    " is not 'index,hours'");
        }
        std::int64_t index = -1;
        auto left = v.substr(0, comma);
        auto [ip, iec] = std::from_chars(left.data(), left.data() + left.size(), index);
        double hours = 0.0;
        auto right = v.substr(comma + 1);
        auto [hp, hec] = std::from_chars(right.data(), right.data() + right.size(), hours);
        if (iec != std::errc{} || ip != left.data() + left.size() || hec != std::errc{} ||
            hp != right.data() + right.size()) {
            throw InvalidInputError("survival CSV row " + std::to_string(row) +
                                    " is not 'index,hours'");
        }
        if (index != static_cast<std::int64_t>(row)) {
            throw InvalidInputError("survival CSV start_index out of order at row " +
                                    std::to_string(row));
        }
        double steps_fp = hours * tb.steps_per_hour;
        std::int64_t steps = std::llround(steps_fp);
        if (std::abs(steps_fp - static_cast<double>(steps)) > 1e-6 || steps < 0 ||
            steps > tb.ts) {
            throw InvalidInputError("survived_hours at row " + std::to_string(row) +
                                    " is not a whole number of steps in [0, ts]");
        }
        s.r.push_back(steps);
        ++row;
    }
    if (std::ssize(s.r) != tb.ts) {
        throw WrongLengthError("survival CSV has " + std::to_string(s.r.size()) +
                               " rows, expected " + std::to_string(tb.ts));
    }
    return s;
}

inline void write_curve_csv(const ProbabilityCurve& curve, std::ostream& out) {
    out << "duration_hours,probability\n";
    for (std::int64_t d = 1; d <= curve.d_max(); ++d) {
        out << d << ',' << format_double(curve.at_hours(d)) << '\n';
    }
}

namespace detail {

inline void write_matrix_csv(const std::vector<ProbabilityCurve>& curves,
                             const char* row_label, int first_row,
                             std::int64_t d_max, std::ostream& out) {
    out << row_label;
    for (std::int64_t d = 1; d <= d_max; ++d) {
        out << ',' << d;
    }
    out << '\n';
    for (std::size_t g = 0; g < curves.size(); ++g) {
        out << (first_row + static_cast<int>(g));
        for (std::int64_t d = 1; d <= d_max; ++d) {
            out << ',' << format_double(curves[g].at_hours(d));
        }
        out << '\n';
    }
}

} // namespace detail

/// 24 rows, one per outage start hour; columns are durations 1..d_max.
inline void write_hour_matrix_csv(const AggregatedCurves& agg, std::ostream& out) {
    detail::write_matrix_csv(agg.by_hour, "hour", 0, agg.d_max, out);
}

/// 12 rows, one per outage start month.
inline void write_month_matrix_csv(const AggregatedCurves& agg, std::ostream& out) {
    detail::write_matrix_csv(agg.by_month, "month", 1, agg.d_max, out);
}

inline nlohmann::ordered_json summary_json(const Summary& sm, const SurvivalSeries& s,
                                           const std::vector<int>& prob_durations,
                                           Comparator cmp) {
    nlohmann::ordered_json j;
    j["min_hours"] = sm.min_hours;
    j["max_hours"] = sm.max_hours;
    j["mean_hours"] = sm.mean_hours;
    nlohmann::ordered_json prob_at = nlohmann::ordered_json::object();
    for (int d : prob_durations) {
        prob_at[std::to_string(d)] = survival_probability(s, static_cast<double>(d), cmp);
    }
    j["prob_at"] = std::move(prob_at);
    return j;
}

inline nlohmann::ordered_json design_json(const SizingOutcome& outcome) {
    nlohmann::ordered_json j;
    j["pv_kw"] = outcome.design.pv_kw;
    j["storage_kw"] = outcome.design.storage_kw;
    j["storage_kwh"] = outcome.design.storage_kwh;
    j["gen_kw"] = outcome.design.gen_kw;
    j["cost"] = outcome.cost;
    j["feasible"] = outcome.feasible;
    return j;
}

/// Write-then-rename so a reader never sees a half-written artifact.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error("cannot open '" + tmp.string() + "' for writing");
        }
        out << content;
        if (!out.flush()) {
            throw Error("write to '" + tmp.string() + "' failed");
        }
    }
    std::filesystem::rename(tmp, path);
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace resil
