#include "mptone/returns.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "mptone/error.hpp"

namespace mptone {

PriceSeries::PriceSeries(const Frame& prices, std::string_view close_column) {
    const auto close = prices.column(close_column);
    for (std::size_t i = 0; i < prices.rows(); ++i) {
        if (is_missing(close[i])) continue;
        dates_.push_back(prices.index()[i]);
        closes_.push_back(close[i]);
    }
}

EventReturn PriceSeries::cumulative_return(Date event_date, int horizon) const {
    if (horizon < 1) throw ValidationError(fmt::format("horizon must be >= 1, got {}", horizon));
    const auto it = std::lower_bound(dates_.begin(), dates_.end(), event_date);
    if (it == dates_.end())
        throw RangeError(fmt::format("event {} is after the last trading day", event_date.iso()));
    if (it == dates_.begin())
        throw RangeError(fmt::format("event {} has no trading day before it", event_date.iso()));
    const auto d = static_cast<std::size_t>(it - dates_.begin());
    const std::size_t last = d + static_cast<std::size_t>(horizon) - 1;
    if (last >= dates_.size())
        throw RangeError(fmt::format("event {} needs {} trading days from {}, only {} available", event_date.iso(),
                                     horizon, dates_[d].iso(), dates_.size() - d));
    const double base = closes_[d - 1];
    if (base == 0.0) throw ArithmeticError(fmt::format("zero close on {}", dates_[d - 1].iso()));
    return {event_date, horizon, (closes_[last] - base) / base};
}

EventReturn event_return(const Frame& prices, Date event_date, std::string_view close_column) {
    return PriceSeries(prices, close_column).cumulative_return(event_date, 1);
}

EventReturn cumulative_return(const Frame& prices, Date event_date, int horizon, std::string_view close_column) {
    return PriceSeries(prices, close_column).cumulative_return(event_date, horizon);
}

}  // namespace mptone
