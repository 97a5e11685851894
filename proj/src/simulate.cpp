#include "mptone/simulate.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <map>
#include <optional>
#include <utility>

#include <fmt/format.h>

#include "mptone/error.hpp"
#include "mptone/io.hpp"
#include "mptone/random.hpp"

namespace mptone {

namespace {

constexpr std::array<std::string_view, 72> kFiller = {
    "monetary",   "policy",     "committee",  "inflation",   "rate",        "bank",       "state",
    "economy",    "economic",   "market",     "markets",     "interest",    "external",   "account",
    "current",    "fiscal",     "deficit",    "reserves",    "exchange",    "outlook",    "demand",
    "supply",     "prices",     "food",       "energy",      "credit",      "private",    "sector",
    "government", "borrowing",  "liquidity",  "financial",   "global",      "commodity",  "oil",
    "imports",    "exports",    "remittances", "percent",    "basis",       "points",     "decided",
    "meeting",    "assessment", "projections", "developments", "budget",    "tax",        "revenue",
    "agriculture", "manufacturing", "services", "wheat",     "cotton",      "rupee",      "dollar",
    "billion",    "million",    "quarter",    "year",        "data",        "survey",     "index",
    "consumer",   "wholesale",  "core",       "headline",    "real",        "nominal",    "money",
    "deposits",   "loans"};

constexpr std::array<std::string_view, 12> kMonthNames = {"January", "February", "March",     "April",
                                                          "May",     "June",     "July",      "August",
                                                          "September", "October", "November", "December"};

struct ControlDgp {
    std::string_view name;
    double mean;
    double rho;
    double innovation_sd;
    double beta;
    bool random_walk;
};

// Magnitudes loosely follow a small emerging-market macro panel.
constexpr std::array<ControlDgp, 5> kControls = {{
    {"kibor", 10.0, 1.0, 0.5, -0.0005, true},
    {"cpi", 0.1, 0.95, 0.03, 0.02, false},
    {"epu", 128.0, 0.9, 27.0, -0.00002, false},
    {"ipi", -2.8, 0.3, 11.9, 0.0001, false},
    {"cci", 42.0, 0.8, 4.0, 0.0002, false},
}};
constexpr double kIntercept = 0.001;

std::vector<std::string> usable(const Lexicon::TermSet& terms, const Stoplist& stoplist) {
    std::vector<std::string> out;
    for (const auto& t : terms)
        if (!stoplist.contains(t) && !is_calendar_word(t)) out.push_back(t);
    return out;
}

std::string capitalize(std::string w) {
    if (!w.empty()) w[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(w[0])));
    return w;
}

std::string make_text(Rng& rng, Date date, int positive, int negative, const std::vector<std::string>& pos,
                      const std::vector<std::string>& neg, const std::vector<std::string>& filler,
                      const std::vector<std::string>& stop) {
    std::vector<std::string> words;
    for (int i = 0; i < positive; ++i) words.push_back(pos[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(pos.size()) - 1))]);
    for (int i = 0; i < negative; ++i) words.push_back(neg[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(neg.size()) - 1))]);
    const int fill = rng.uniform_int(60, 160);
    for (int i = 0; i < fill; ++i) {
        const auto& src = (!stop.empty() && rng.bernoulli(0.4)) ? stop : filler;
        words.push_back(src[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(src.size()) - 1))]);
    }
    std::shuffle(words.begin(), words.end(), rng.engine());

    std::string text = fmt::format("Monetary Policy Statement\n{} {}, {}\n\n", kMonthNames[static_cast<std::size_t>(date.month() - 1)],
                                   date.day(), date.year());
    bool sentence_start = true;
    int line = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
        text += sentence_start ? capitalize(words[i]) : words[i];
        sentence_start = false;
        const double u = rng.uniform();
        if (u < 0.06) {
            text += fmt::format(" {:.1f}%", rng.uniform(0.0, 25.0));
        } else if (u < 0.08) {
            text += fmt::format(" in {}", kMonthNames[static_cast<std::size_t>(rng.uniform_int(0, 11))]);
        } else if (u < 0.09) {
            text += fmt::format(" (FY{})", date.year() % 100);
        }
        if (rng.uniform() < 0.08) {
            text += ".";
            sentence_start = true;
        } else if (rng.uniform() < 0.06) {
            text += ",";
        }
        if (++line >= 12) {
            text += "\n";
            line = 0;
        } else {
            text += " ";
        }
    }
    while (!text.empty() && (text.back() == ' ' || text.back() == '\n')) text.pop_back();
    text += ".\n";
    return text;
}

}  // namespace

const std::vector<std::string>& synthetic_control_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& c : kControls) v.emplace_back(c.name);
        return v;
    }();
    return names;
}

SyntheticMarket simulate_market(const SimulationOptions& opt, const Lexicon& lexicon, const Stoplist& stoplist) {
    if (opt.trading_days < 30) throw ValidationError("synthetic market needs at least 30 trading days");
    if (opt.max_positive < 2 || opt.max_negative < 2) throw ValidationError("sentiment count bounds must be >= 2");
    const auto pos = usable(lexicon.positive_terms(), stoplist);
    const auto neg = usable(lexicon.negative_terms(), stoplist);
    if (pos.empty() || neg.empty()) throw ValidationError("lexicon has no usable positive or negative terms");
    std::vector<std::string> filler;
    for (auto w : kFiller)
        if (lexicon.classify(w) == Polarity::neutral && !is_calendar_word(w)) filler.emplace_back(w);
    const std::vector<std::string> stop(stoplist.begin(), stoplist.end());

    Rng cal(derive_seed(opt.seed, 1));
    Rng macro(derive_seed(opt.seed, 2));
    Rng ev(derive_seed(opt.seed, 3));
    Rng mkt(derive_seed(opt.seed, 4));
    Rng txt(derive_seed(opt.seed, 5));

    // Trading calendar.
    std::vector<Date> sessions;
    for (Date d = opt.start; sessions.size() < opt.trading_days; d = d.add_days(1)) {
        if (d.is_weekend()) continue;
        if (!sessions.empty() && cal.bernoulli(opt.holiday_rate)) continue;
        sessions.push_back(d);
    }

    // Monthly controls.
    const int first_month = sessions.front().month_index() - static_cast<int>(opt.warmup_months);
    const int last_month = sessions.back().month_index();
    const auto months = static_cast<std::size_t>(last_month - first_month + 1);
    std::vector<Date> month_index;
    for (int m = first_month; m <= last_month; ++m) month_index.emplace_back(m / 12, m % 12 + 1, 1);
    std::vector<std::vector<double>> ctrl(kControls.size(), std::vector<double>(months));
    for (std::size_t j = 0; j < kControls.size(); ++j) {
        const auto& c = kControls[j];
        double v = c.mean;
        for (std::size_t t = 0; t < months; ++t) {
            const double shock = macro.normal(0.0, c.innovation_sd);
            v = c.random_walk ? std::max(1.0, v + shock) : c.mean + c.rho * (v - c.mean) + shock;
            ctrl[j][t] = v;
        }
    }

    // Event months: a sorted random subset of the interior price months.
    std::vector<int> candidates;
    for (int m = sessions.front().month_index() + 1; m < last_month; ++m) candidates.push_back(m);
    if (candidates.size() < opt.events)
        throw ValidationError(fmt::format("{} trading days span {} usable months, fewer than {} events",
                                          opt.trading_days, candidates.size(), opt.events));
    std::shuffle(candidates.begin(), candidates.end(), ev.engine());
    candidates.resize(opt.events);
    std::sort(candidates.begin(), candidates.end());

    auto session_of = [&](Date d) {
        return static_cast<std::size_t>(std::lower_bound(sessions.begin(), sessions.end(), d) - sessions.begin());
    };
    std::vector<Date> event_dates;
    std::vector<std::size_t> event_sessions;
    for (int m : candidates) {
        const int y = m / 12;
        const int mo = m % 12 + 1;
        Date d;
        std::size_t s = 0;
        for (int attempt = 0;; ++attempt) {
            d = Date(y, mo, ev.uniform_int(1, days_in_month(y, mo)));
            s = session_of(d);
            const bool clear = event_sessions.empty() || s >= event_sessions.back() + 3;
            if (clear && s + 2 < sessions.size()) break;
            if (attempt > 1000) throw ValidationError("could not place synthetic events without overlap");
        }
        event_dates.push_back(d);
        event_sessions.push_back(s);
    }

    SyntheticMarket out;
    std::map<std::size_t, std::size_t> event_at;
    for (std::size_t i = 0; i < opt.events; ++i) {
        event_at[event_sessions[i]] = i;
        SyntheticEvent e;
        e.date = event_dates[i];
        const int p = ev.uniform_int(2, opt.max_positive);
        const int n = ev.uniform_int(2, opt.max_negative);
        e.text = make_text(txt, e.date, p, n, pos, neg, filler, stop);
        // Scored rather than assumed, so the planted tone is exactly what the
        // corpus pipeline will measure.
        e.counts = count_sentiment(lexicon, normalize_text(e.text, stoplist));
        out.events.push_back(std::move(e));
    }

    // Prices. A transitory tone effect is undone on the session after the
    // event: the two-session return is (1 + r - theta * tone)(1 + u) - 1.
    std::vector<double> close(sessions.size());
    close[0] = 40000.0;
    std::optional<std::pair<std::size_t, double>> reversal;
    for (std::size_t s = 1; s < sessions.size(); ++s) {
        const double u = mkt.normal(opt.daily_mean, opt.daily_sd);
        const auto hit = event_at.find(s);
        if (hit != event_at.end()) {
            const auto& e = out.events[hit->second];
            const double t = tone(e.counts).value;
            const auto month = static_cast<std::size_t>(e.date.month_index() - first_month);
            double r = kIntercept + opt.theta * t + mkt.normal(0.0, opt.event_noise_sd);
            for (std::size_t j = 0; j < kControls.size(); ++j) r += kControls[j].beta * ctrl[j][month];
            close[s] = close[s - 1] * (1.0 + r);
            if (!opt.persistent) reversal.emplace(s - 1, 1.0 + r - opt.theta * t);
        } else if (reversal) {
            close[s] = close[reversal->first] * reversal->second * (1.0 + u);
            reversal.reset();
        } else {
            close[s] = close[s - 1] * (1.0 + u);
        }
    }

    out.prices = Frame(sessions, Frequency::daily);
    out.prices.add_column("close", std::move(close));
    out.controls = Frame(month_index, Frequency::monthly);
    for (std::size_t j = 0; j < kControls.size(); ++j) out.controls.add_column(std::string(kControls[j].name), ctrl[j]);
    for (const auto& e : out.events) {
        const ToneScore t = tone(e.counts);
        out.tone.entries.push_back({e.date, t.value, t.defined, e.counts, 1});
    }
    return out;
}

void write_synthetic(const SyntheticMarket& market, const std::filesystem::path& dir) {
    io::write_file(dir / "prices.csv", frame_csv(market.prices));
    io::write_file(dir / "controls.csv", frame_csv(market.controls));
    for (const auto& e : market.events)
        io::write_file(dir / "corpus" / fmt::format("{}_statement.txt", e.date.iso()), e.text);
}

}  // namespace mptone
