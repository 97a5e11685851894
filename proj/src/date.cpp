#include "mptone/date.hpp"

#include <charconv>

#include <fmt/format.h>

#include "mptone/error.hpp"

namespace mptone {

namespace {

bool is_leap(int y) noexcept { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

// Howard Hinnant's civil-from-days / days-from-civil.
std::int64_t days_from_civil(int y, int m, int d) noexcept {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const auto yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

int parse_field(std::string_view s, std::string_view whole) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ValidationError(fmt::format("invalid date '{}'", whole));
    return v;
}

}  // namespace

int days_in_month(int year, int month) noexcept {
    static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month < 1 || month > 12) return 0;
    return month == 2 && is_leap(year) ? 29 : kDays[month - 1];
}

bool is_valid_date(int year, int month, int day) noexcept {
    return year >= 1 && year <= 9999 && month >= 1 && month <= 12 && day >= 1 &&
           day <= days_in_month(year, month);
}

Date::Date(int year, int month, int day) : year_(year), month_(month), day_(day) {
    if (!is_valid_date(year, month, day))
        throw ValidationError(fmt::format("invalid date {:04d}-{:02d}-{:02d}", year, month, day));
}

Date Date::parse(std::string_view iso) {
    if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-')
        throw ValidationError(fmt::format("invalid date '{}': expected YYYY-MM-DD", iso));
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
        if (iso[i] < '0' || iso[i] > '9')
            throw ValidationError(fmt::format("invalid date '{}': expected YYYY-MM-DD", iso));
    const int y = parse_field(iso.substr(0, 4), iso);
    const int m = parse_field(iso.substr(5, 2), iso);
    const int d = parse_field(iso.substr(8, 2), iso);
    if (!is_valid_date(y, m, d)) throw ValidationError(fmt::format("invalid date '{}'", iso));
    return Date(y, m, d);
}

Date Date::from_days(std::int64_t z) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const auto doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp < 10 ? mp + 3 : mp - 9;
    return Date(static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d));
}

std::int64_t Date::days() const noexcept { return days_from_civil(year_, month_, day_); }

int Date::weekday() const noexcept {
    // 1970-01-01 was a Thursday (3 with Monday = 0).
    const std::int64_t w = (days() + 3) % 7;
    return static_cast<int>(w < 0 ? w + 7 : w);
}

std::string Date::iso() const { return fmt::format("{:04d}-{:02d}-{:02d}", year_, month_, day_); }

}  // namespace mptone
