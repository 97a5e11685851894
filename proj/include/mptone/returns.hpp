#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "mptone/date.hpp"
#include "mptone/frame.hpp"

namespace mptone {

/// Simple return from the last close before the event session to the close
/// `horizon - 1` sessions after it.
struct EventReturn {
    Date event_date;
    int horizon = 1;
    double value = 0.0;
};

/// Trading sessions extracted from a daily frame: rows whose close is present.
/// A publish date that is not a session rolls forward to the next session for
/// the event close and backward for the baseline close.
class PriceSeries {
public:
    explicit PriceSeries(const Frame& prices, std::string_view close_column = "close");

    std::size_t sessions() const noexcept { return dates_.size(); }
    const std::vector<Date>& dates() const noexcept { return dates_; }
    const std::vector<double>& closes() const noexcept { return closes_; }

    /// Throws ValidationError for horizon < 1, RangeError when the event has
    /// no session on/after it, none before it, or fewer than `horizon`
    /// sessions from it; ArithmeticError when the baseline close is zero.
    EventReturn cumulative_return(Date event_date, int horizon) const;

private:
    std::vector<Date> dates_;
    std::vector<double> closes_;
};

EventReturn event_return(const Frame& prices, Date event_date, std::string_view close_column = "close");

EventReturn cumulative_return(const Frame& prices, Date event_date, int horizon,
                              std::string_view close_column = "close");

}  // namespace mptone
