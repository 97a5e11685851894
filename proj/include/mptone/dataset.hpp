#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mptone/corpus.hpp"
#include "mptone/frame.hpp"

namespace mptone {

struct LagTerm {
    std::string name;
    int order = 0;

    friend bool operator==(const LagTerm&, const LagTerm&) = default;
};

/// Per-variable lag orders, dependent variable first. For the dependent
/// variable the order p means regressors y(-1)..y(-p); for every other
/// variable q means x, x(-1)..x(-q).
class LagSpec {
public:
    LagSpec() = default;
    /// Throws ValidationError on an empty list, duplicate or empty names, or
    /// negative orders.
    explicit LagSpec(std::vector<LagTerm> terms);

    /// `name:order,name:order,...`.
    static LagSpec parse(std::string_view text);

    const std::vector<LagTerm>& terms() const noexcept { return terms_; }
    const LagTerm& dependent() const { return terms_.front(); }
    std::span<const LagTerm> exogenous() const { return std::span(terms_).subspan(1); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Throws ValidationError unless the dependent order is at least 1.
    void require_ardl() const;

    /// Number of regression coefficients including the intercept.
    std::size_t coefficient_count() const noexcept;
    /// Largest order across all terms.
    int max_order() const noexcept;

    /// Same names with the given orders (dependent first).
    LagSpec with_orders(std::span<const int> orders) const;
    std::vector<int> orders() const;

    std::string to_string() const;

    friend bool operator==(const LagSpec&, const LagSpec&) = default;

private:
    std::vector<LagTerm> terms_;
};

/// Column name of lag k: `name` for k = 0, `name(-k)` otherwise.
std::string lagged_name(std::string_view name, int k);

/// out[t] = series[t - k]; the first k entries are missing. Throws
/// RangeError when k >= length and ValidationError when k < 0.
std::vector<double> lag(std::span<const double> series, int k);

struct EventDataset {
    Frame data;
    /// Publication events considered (tone entries, defined or not).
    std::size_t events = 0;
    /// Events excluded because their tone is undefined.
    std::size_t undefined_tone = 0;
    /// Rows lost to missing lags, controls, or price history.
    std::size_t dropped = 0;
};

struct AlignOptions {
    std::string tone_name = "tone";
    std::string close_column = "close";
};

/// One row per publication event with a defined tone. The dependent column is
/// the horizon-n cumulative return; dependent and tone lags count publication
/// events, control lags count calendar months before the event month.
/// Incomplete rows are dropped and counted. Throws ValidationError when a
/// variable named in the spec is not available or when nothing survives.
EventDataset align_event_dataset(const ToneSeries& tone, const Frame& controls, const Frame& prices,
                                 const LagSpec& spec, int horizon, const AlignOptions& options = {});

/// Generic version for a frame already in observation order: every term is
/// a column of `levels` lagged by rows. Incomplete rows dropped.
EventDataset build_lag_frame(const Frame& levels, const LagSpec& spec);

}  // namespace mptone
