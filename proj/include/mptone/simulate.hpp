#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "mptone/corpus.hpp"
#include "mptone/date.hpp"
#include "mptone/frame.hpp"
#include "mptone/lexicon.hpp"

namespace mptone {

/// Synthetic market with planted tone effect. Event-day returns follow
///   r = b0 + theta * tone + sum_j b_j * control_j(event month) + eps
/// and, unless `persistent`, the next session reverses the tone component so
/// that cumulative returns over two or more sessions carry no tone effect.
struct SimulationOptions {
    std::uint64_t seed = 1;
    Date start{2016, 1, 4};
    std::size_t trading_days = 2000;
    std::size_t events = 56;
    /// Monthly control history before the first price month.
    std::size_t warmup_months = 6;
    double theta = 0.03;
    bool persistent = false;
    double holiday_rate = 0.02;
    double event_noise_sd = 0.01;
    double daily_mean = 0.0003;
    double daily_sd = 0.012;
    int max_positive = 40;
    int max_negative = 60;
};

/// Control columns produced by the generator, in CSV order.
const std::vector<std::string>& synthetic_control_names();

struct SyntheticEvent {
    Date date;
    SentimentCounts counts;
    std::string text;
};

struct SyntheticMarket {
    /// Daily `close`, business days with random holidays.
    Frame prices;
    /// Monthly controls indexed by the first of each month.
    Frame controls;
    std::vector<SyntheticEvent> events;
    /// Tone computed from the planted counts (identical to scoring `text`).
    ToneSeries tone;
};

/// At most one event per calendar month, never in the first or last price
/// month. Throws ValidationError when the calendar has too few months for
/// the requested events, or when the lexicon has no usable words.
SyntheticMarket simulate_market(const SimulationOptions& options, const Lexicon& lexicon, const Stoplist& stoplist);

/// prices.csv, controls.csv and corpus/YYYY-MM-DD_statement.txt under `dir`.
void write_synthetic(const SyntheticMarket& market, const std::filesystem::path& dir);

}  // namespace mptone
