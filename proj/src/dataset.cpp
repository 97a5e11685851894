#include "mptone/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include <fmt/format.h>

#include "mptone/error.hpp"
#include "mptone/io.hpp"
#include "mptone/returns.hpp"

namespace mptone {

LagSpec::LagSpec(std::vector<LagTerm> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw ValidationError("lag spec is empty");
    std::set<std::string_view> seen;
    for (const auto& t : terms_) {
        if (t.name.empty()) throw ValidationError("lag spec has an empty variable name");
        if (t.order < 0) throw ValidationError(fmt::format("negative lag order for '{}'", t.name));
        if (!seen.insert(t.name).second) throw ValidationError(fmt::format("duplicate variable '{}' in lag spec", t.name));
    }
}

LagSpec LagSpec::parse(std::string_view text) {
    std::vector<LagTerm> terms;
    for (auto cell : io::split_csv(text)) {
        const auto colon = cell.find(':');
        if (colon == std::string_view::npos)
            throw ValidationError(fmt::format("lag spec entry '{}' must be name:order", cell));
        const auto name = io::trim(cell.substr(0, colon));
        const auto num = io::trim(cell.substr(colon + 1));
        int order = 0;
        auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), order);
        if (ec != std::errc{} || ptr != num.data() + num.size())
            throw ValidationError(fmt::format("lag spec entry '{}': bad order", cell));
        terms.push_back({std::string(name), order});
    }
    return LagSpec(std::move(terms));
}

void LagSpec::require_ardl() const {
    if (terms_.empty() || terms_.front().order < 1)
        throw ValidationError(fmt::format("ARDL needs at least one lag of the dependent variable: {}", to_string()));
}

std::size_t LagSpec::coefficient_count() const noexcept {
    if (terms_.empty()) return 0;
    std::size_t k = 1 + static_cast<std::size_t>(terms_.front().order);
    for (std::size_t i = 1; i < terms_.size(); ++i) k += static_cast<std::size_t>(terms_[i].order) + 1;
    return k;
}

int LagSpec::max_order() const noexcept {
    int m = 0;
    for (const auto& t : terms_) m = std::max(m, t.order);
    return m;
}

LagSpec LagSpec::with_orders(std::span<const int> orders) const {
    if (orders.size() != terms_.size())
        throw ValidationError(fmt::format("expected {} lag orders, got {}", terms_.size(), orders.size()));
    std::vector<LagTerm> t = terms_;
    for (std::size_t i = 0; i < t.size(); ++i) t[i].order = orders[i];
    return LagSpec(std::move(t));
}

std::vector<int> LagSpec::orders() const {
    std::vector<int> o;
    o.reserve(terms_.size());
    for (const auto& t : terms_) o.push_back(t.order);
    return o;
}

std::string LagSpec::to_string() const {
    std::string s;
    for (const auto& t : terms_) {
        if (!s.empty()) s += ',';
        s += fmt::format("{}:{}", t.name, t.order);
    }
    return s;
}

std::string lagged_name(std::string_view name, int k) {
    return k == 0 ? std::string(name) : fmt::format("{}(-{})", name, k);
}

std::vector<double> lag(std::span<const double> series, int k) {
    if (k < 0) throw ValidationError(fmt::format("lag order must be >= 0, got {}", k));
    if (static_cast<std::size_t>(k) >= series.size())
        throw RangeError(fmt::format("lag {} needs a series longer than {}", k, series.size()));
    std::vector<double> out(series.size(), kMissing);
    const auto uk = static_cast<std::size_t>(k);
    for (std::size_t t = uk; t < series.size(); ++t) out[t] = series[t - uk];
    return out;
}

namespace {

// Adds `name(-0..-max)` columns built by `value_at(row, k)`, then drops
// incomplete rows.
template <class Builder>
EventDataset finish(std::vector<Date> index, const LagSpec& spec, Builder&& value_at, std::size_t events,
                    std::size_t undefined) {
    const std::size_t rows = index.size();
    Frame full(std::move(index), Frequency::event);
    for (std::size_t ti = 0; ti < spec.size(); ++ti) {
        const auto& term = spec.terms()[ti];
        for (int k = 0; k <= term.order; ++k) {
            std::vector<double> col(rows);
            for (std::size_t r = 0; r < rows; ++r) col[r] = value_at(ti, r, k);
            full.add_column(lagged_name(term.name, k), std::move(col));
        }
    }
    std::vector<std::size_t> keep;
    for (std::size_t r = 0; r < rows; ++r) {
        bool ok = true;
        for (std::size_t c = 0; c < full.cols() && ok; ++c) ok = !is_missing(full.column(c)[r]);
        if (ok) keep.push_back(r);
    }
    if (keep.empty())
        throw ValidationError(fmt::format("no complete observations remain after aligning lags {}", spec.to_string()));
    EventDataset out;
    out.data = full.select_rows(keep);
    out.events = events;
    out.undefined_tone = undefined;
    out.dropped = rows - keep.size();
    return out;
}

}  // namespace

EventDataset align_event_dataset(const ToneSeries& tone, const Frame& controls, const Frame& prices,
                                 const LagSpec& spec, int horizon, const AlignOptions& options) {
    if (horizon < 1) throw ValidationError(fmt::format("horizon must be >= 1, got {}", horizon));
    const auto& dep = spec.dependent().name;

    // Event-time series, one value per defined publication event.
    std::vector<Date> dates;
    std::vector<double> tone_values;
    std::size_t undefined = 0;
    for (const auto& e : tone.entries) {
        if (!e.defined) {
            ++undefined;
            continue;
        }
        dates.push_back(e.date);
        tone_values.push_back(e.tone);
    }
    if (dates.empty()) throw ValidationError("no publication event has a defined tone");

    const PriceSeries px(prices, options.close_column);
    std::vector<double> dep_values(dates.size(), kMissing);
    for (std::size_t i = 0; i < dates.size(); ++i) {
        try {
            dep_values[i] = px.cumulative_return(dates[i], horizon).value;
        } catch (const RangeError&) {
            // Counted as a dropped row below.
        }
    }

    std::map<int, std::size_t> month_row;
    for (std::size_t r = 0; r < controls.rows(); ++r)
        if (!month_row.emplace(controls.index()[r].month_index(), r).second)
            throw ValidationError(fmt::format("controls have two rows for month {}-{:02d}", controls.index()[r].year(),
                                              controls.index()[r].month()));

    enum class Source { dependent, tone, control };
    std::vector<Source> source(spec.size());
    std::vector<std::span<const double>> control_cols(spec.size());
    for (std::size_t ti = 0; ti < spec.size(); ++ti) {
        const auto& name = spec.terms()[ti].name;
        if (ti == 0) {
            source[ti] = Source::dependent;
        } else if (name == options.tone_name) {
            source[ti] = Source::tone;
        } else if (controls.has_column(name)) {
            source[ti] = Source::control;
            control_cols[ti] = controls.column(name);
        } else {
            throw ValidationError(fmt::format("variable '{}' is not a control column or the tone series", name));
        }
        if (name == dep && ti != 0) throw ValidationError(fmt::format("'{}' used twice", dep));
    }

    auto value_at = [&](std::size_t ti, std::size_t r, int k) -> double {
        const auto uk = static_cast<std::size_t>(k);
        switch (source[ti]) {
            case Source::dependent: return r >= uk ? dep_values[r - uk] : kMissing;
            case Source::tone: return r >= uk ? tone_values[r - uk] : kMissing;
            case Source::control: {
                const auto it = month_row.find(dates[r].month_index() - k);
                return it == month_row.end() ? kMissing : control_cols[ti][it->second];
            }
        }
        return kMissing;
    };
    return finish(dates, spec, value_at, tone.entries.size(), undefined);
}

EventDataset build_lag_frame(const Frame& levels, const LagSpec& spec) {
    std::vector<std::span<const double>> cols;
    for (const auto& t : spec.terms()) cols.push_back(levels.column(t.name));
    auto value_at = [&](std::size_t ti, std::size_t r, int k) -> double {
        const auto uk = static_cast<std::size_t>(k);
        return r >= uk ? cols[ti][r - uk] : kMissing;
    };
    return finish(levels.index(), spec, value_at, levels.rows(), 0);
}

}  // namespace mptone
