#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace mptone {

/// Proleptic Gregorian calendar date. Only weekday arithmetic is supported;
/// holidays are inferred from gaps in price files, never computed.
class Date {
public:
    constexpr Date() = default;

    /// Throws ValidationError if the triple is not a real calendar date.
    Date(int year, int month, int day);

    /// Parses strict ISO-8601 `YYYY-MM-DD`.
    static Date parse(std::string_view iso);
    static Date from_days(std::int64_t days_since_epoch);

    int year() const noexcept { return year_; }
    int month() const noexcept { return month_; }
    int day() const noexcept { return day_; }

    /// Days since 1970-01-01.
    std::int64_t days() const noexcept;
    /// 0 = Monday ... 6 = Sunday.
    int weekday() const noexcept;
    bool is_weekend() const noexcept { return weekday() >= 5; }

    /// Months since year 0; month m - k is `month_index() - k`.
    int month_index() const noexcept { return year_ * 12 + (month_ - 1); }

    Date add_days(std::int64_t n) const { return from_days(days() + n); }

    std::string iso() const;

    friend constexpr auto operator<=>(const Date&, const Date&) = default;

private:
    int year_ = 1970;
    int month_ = 1;
    int day_ = 1;
};

bool is_valid_date(int year, int month, int day) noexcept;
int days_in_month(int year, int month) noexcept;

}  // namespace mptone
