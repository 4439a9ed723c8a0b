#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "resil/timebase.hpp"

using namespace resil;

TEST_CASE("time base construction", "[timebase]") {
    TimeBase tb = TimeBase::hourly();
    CHECK(tb.ts == 8760);
    CHECK(tb.dt_hours == 1.0);
    CHECK(tb.is_full_year());

    TimeBase half = TimeBase::with_steps_per_hour(2);
    CHECK(half.ts == 17520);
    CHECK(half.dt_hours * static_cast<double>(half.ts) == 8760.0);

    CHECK_THROWS_AS(TimeBase::with_steps_per_hour(0), InvalidInputError);
    CHECK_THROWS_AS(TimeBase::custom(1, 0), InvalidInputError);
}

TEST_CASE("hour_of_day", "[timebase]") {
    TimeBase tb = TimeBase::hourly();
    CHECK(hour_of_day(0, tb) == 0);
    CHECK(hour_of_day(25, tb) == 1);
    CHECK(hour_of_day(8759, tb) == 23);

    TimeBase half = TimeBase::with_steps_per_hour(2);
    CHECK(hour_of_day(47, half) == 23); // floor(47/2) mod 24

    CHECK_THROWS_AS(hour_of_day(-1, tb), IndexOutOfRangeError);
    CHECK_THROWS_AS(hour_of_day(8760, tb), IndexOutOfRangeError);
}

TEST_CASE("hour_of_day cycles with period 24*steps_per_hour", "[timebase]") {
    TimeBase tb = TimeBase::with_steps_per_hour(4);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> dist(0, tb.ts - 24 * 4 - 1);
    for (int i = 0; i < 200; ++i) {
        std::int64_t j = dist(rng);
        CHECK(hour_of_day(j, tb) == hour_of_day(j + 24 * 4, tb));
    }
}

TEST_CASE("month_of boundaries", "[timebase]") {
    TimeBase tb = TimeBase::hourly();
    CHECK(month_of(0, tb) == 1);
    CHECK(month_of(743, tb) == 1); // 31*24 - 1
    CHECK(month_of(744, tb) == 2);
    CHECK(month_of(8759, tb) == 12);
    CHECK_THROWS_AS(month_of(8760, tb), IndexOutOfRangeError);
}

TEST_CASE("month_of is non-decreasing with per-month counts", "[timebase]") {
    TimeBase tb = TimeBase::with_steps_per_hour(2);
    std::array<std::int64_t, 13> counts{};
    int prev = 1;
    for (std::int64_t i = 0; i < tb.ts; ++i) {
        int m = month_of(i, tb);
        REQUIRE(m >= prev);
        prev = m;
        counts[static_cast<std::size_t>(m)]++;
    }
    REQUIRE(prev == 12);
    for (int m = 1; m <= 12; ++m) {
        CHECK(counts[static_cast<std::size_t>(m)] ==
              kDaysPerMonth[static_cast<std::size_t>(m - 1)] * 24 * tb.steps_per_hour);
    }
}

TEST_CASE("day_of_week starts on Sunday", "[timebase]") {
    TimeBase tb = TimeBase::hourly();
    CHECK(day_of_week(0, tb) == 0);   // Sun Jan 1
    CHECK(day_of_week(24, tb) == 1);  // Mon Jan 2
    CHECK(day_of_week(6 * 24, tb) == 6);
    CHECK(day_of_week(7 * 24, tb) == 0);
}

TEST_CASE("parse_series happy paths", "[timebase]") {
    TimeBase tb = TimeBase::hourly();

    SECTION("all zeros") {
        std::ostringstream text;
        for (int i = 0; i < 8760; ++i) {
            text << "0.0\n";
        }
        std::istringstream in(text.str());
        YearSeries s = parse_series(in, Unit::kW, tb);
        REQUIRE(s.size() == 8760);
        for (std::size_t i = 0; i < s.size(); ++i) {
            REQUIRE(s[i] == 0.0);
        }
    }

    SECTION("comments and blank lines are skipped; sum is preserved") {
        std::ostringstream text;
        text << "#header\n\n";
        double expected_sum = 0.0;
        for (int i = 0; i < 8760; ++i) {
            double v = static_cast<double>(i % 7) * 0.5;
            expected_sum += v;
            text << format_double(v) << "\n";
            if (i % 100 == 0) {
                text << "# checkpoint\n";
            }
        }
        std::istringstream in(text.str());
        YearSeries s = parse_series(in, Unit::kW, tb);
        double sum = 0.0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            sum += s[i];
        }
        CHECK(sum == expected_sum);
    }
}

TEST_CASE("parse_series errors", "[timebase]") {
    TimeBase tb = TimeBase::hourly();

    auto text_of_n_lines = [](int n) {
        std::ostringstream text;
        for (int i = 0; i < n; ++i) {
            text << "1.5\n";
        }
        return text.str();
    };

    SECTION("wrong length") {
        std::istringstream in(text_of_n_lines(8759));
        CHECK_THROWS_AS(parse_series(in, Unit::kW, tb), WrongLengthError);
        std::istringstream in2(text_of_n_lines(8761));
        CHECK_THROWS_AS(parse_series(in2, Unit::kW, tb), WrongLengthError);
    }

    SECTION("non-finite and garbage") {
        std::istringstream in("nan\n");
        CHECK_THROWS_AS(parse_series(in, Unit::kW, TimeBase::custom(1, 1)), NonFiniteError);
        std::istringstream in2("garbage\n");
        CHECK_THROWS_AS(parse_series(in2, Unit::kW, TimeBase::custom(1, 1)), NonFiniteError);
        std::istringstream in3("inf\n");
        CHECK_THROWS_AS(parse_series(in3, Unit::kW, TimeBase::custom(1, 1)), NonFiniteError);
    }

    SECTION("negative value") {
        std::istringstream in("-0.25\n");
        CHECK_THROWS_AS(parse_series(in, Unit::kW, TimeBase::custom(1, 1)), NegativeValueError);
    }

    SECTION("fraction above one") {
        std::istringstream in("1.5\n");
        CHECK_THROWS_AS(parse_series(in, Unit::Fraction, TimeBase::custom(1, 1)),
                        OutOfRangeError);
    }

    SECTION("factor above one needs explicit opt-in") {
        std::istringstream in("1.5\n");
        CHECK_THROWS_AS(parse_series(in, Unit::Factor, TimeBase::custom(1, 1)),
                        OutOfRangeError);
        std::istringstream in2("1.5\n");
        YearSeries s = parse_series(in2, Unit::Factor, TimeBase::custom(1, 1), true);
        CHECK(s[0] == 1.5);
    }
}

TEST_CASE("serialize/parse round-trips bit-exactly", "[timebase][property]") {
    TimeBase tb = TimeBase::custom(1, 500);
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> dist(0.0, 1e6);
    for (int round = 0; round < 20; ++round) {
        std::vector<double> values(500);
        for (auto& v : values) {
            double x = dist(rng);
            v = (round % 3 == 0) ? x : x / 3.0; // include non-terminating decimals
        }
        values[0] = 0.0;
        values[1] = 1e-300;
        YearSeries original(values, Unit::kW, tb);

        std::ostringstream out;
        serialize_series(original, out);
        std::istringstream in(out.str());
        YearSeries parsed = parse_series(in, Unit::kW, tb);
        REQUIRE(parsed.values() == original.values());
    }
}

TEST_CASE("YearSeries construction validates", "[timebase]") {
    TimeBase tb = TimeBase::custom(1, 3);
    CHECK_THROWS_AS(YearSeries({1.0, 2.0}, Unit::kW, tb), WrongLengthError);
    CHECK_THROWS_AS(YearSeries({1.0, -2.0, 0.0}, Unit::kW, tb), NegativeValueError);
    YearSeries s({1.0, 2.0, 0.0}, Unit::kW, tb);
    CHECK(s.values() == std::vector<double>{1.0, 2.0, 0.0});
    YearSeries scaled = s.scaled(0.5, tb);
    CHECK(scaled.values() == std::vector<double>{0.5, 1.0, 0.0});
}
