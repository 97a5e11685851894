#include "experiments.hpp"

#include <cmath>

#include "mptone/adf.hpp"
#include "mptone/ardl.hpp"
#include "mptone/dataset.hpp"
#include "mptone/diagnostics.hpp"
#include "mptone/frame.hpp"
#include "mptone/ols.hpp"
#include "mptone/random.hpp"

namespace experiments {

namespace {

constexpr std::size_t kBurnIn = 100;

std::vector<double> ar1(mptone::Rng& rng, std::size_t n, double rho) {
    std::vector<double> y(n);
    double prev = 0.0;
    for (std::size_t t = 0; t < n + kBurnIn; ++t) {
        prev = rho * prev + rng.normal();
        if (t >= kBurnIn) y[t - kBurnIn] = prev;
    }
    return y;
}

}  // namespace

std::vector<double> adf_pvalues(std::size_t reps, std::uint64_t base_seed, std::size_t n, double rho) {
    const int max_lag = mptone::schwert_max_lag(n);
    return mptone::run_replications(reps, base_seed, [&](std::size_t, std::uint64_t seed) {
        mptone::Rng rng(seed);
        // A random walk starts at zero; burn-in only matters when stationary.
        std::vector<double> y(n);
        if (rho == 1.0) {
            double level = 0.0;
            for (auto& v : y) v = level += rng.normal();
        } else {
            y = ar1(rng, n, rho);
        }
        return mptone::adf_test(y, max_lag, mptone::AdfTrend::constant).p_value;
    });
}

std::vector<double> ljung_box_pvalues(std::size_t reps, std::uint64_t base_seed, std::size_t n, int lag, double rho) {
    return mptone::run_replications(reps, base_seed, [&](std::size_t, std::uint64_t seed) {
        mptone::Rng rng(seed);
        const std::vector<double> e = ar1(rng, n, rho);
        const int lags[] = {lag};
        return mptone::ljung_box(e, lags).front().p_value;
    });
}

std::vector<double> bpg_pvalues(std::size_t reps, std::uint64_t base_seed, std::size_t n, bool heteroskedastic) {
    return mptone::run_replications(reps, base_seed, [&](std::size_t, std::uint64_t seed) {
        mptone::Rng rng(seed);
        mptone::Design d;
        d.x.resize(static_cast<Eigen::Index>(n), 2);
        d.names = {"C", "x"};
        Eigen::VectorXd y(static_cast<Eigen::Index>(n));
        for (Eigen::Index i = 0; i < y.size(); ++i) {
            const double x = rng.uniform(1.0, 10.0);
            const double sd = heteroskedastic ? 0.5 * x : 1.0;
            d.x(i, 0) = 1.0;
            d.x(i, 1) = x;
            y(i) = 1.0 + 2.0 * x + rng.normal(0.0, sd);
        }
        const auto fit = mptone::ols(y, d);
        return mptone::breusch_pagan_godfrey(fit, d).obs_r_squared_p;
    });
}

ArdlSample ardl10_sample(std::uint64_t seed, std::size_t n) {
    mptone::Rng rng(seed);
    ArdlSample s;
    double prev = 0.0;
    for (std::size_t t = 0; t < n + kBurnIn; ++t) {
        const double x = rng.normal();
        prev = 0.2 + 0.5 * prev + 0.8 * x + rng.normal();
        if (t >= kBurnIn) {
            s.y.push_back(prev);
            s.x.push_back(x);
        }
    }
    return s;
}

double ardl10_winner_rate(std::size_t reps, std::uint64_t base_seed, std::size_t n) {
    const mptone::LagSpec grid = mptone::LagSpec::parse("y:2,x:2");
    const auto wins = mptone::run_replications(reps, base_seed, [&](std::size_t, std::uint64_t seed) {
        const ArdlSample s = ardl10_sample(seed, n);
        std::vector<mptone::Date> idx;
        for (std::size_t i = 0; i < n; ++i) idx.push_back(mptone::Date(2000, 1, 1).add_days(static_cast<std::int64_t>(i)));
        mptone::Frame levels(idx, mptone::Frequency::event);
        levels.add_column("y", s.y);
        levels.add_column("x", s.x);
        const auto data = mptone::build_lag_frame(levels, grid);
        mptone::SearchOptions opt;
        opt.top_k = 1;
        const auto r = mptone::ardl_search(data.data, grid, opt);
        return r.ranked.front().spec.orders() == std::vector<int>{1, 0} ? 1 : 0;
    });
    double hits = 0;
    for (int w : wins) hits += w;
    return hits / static_cast<double>(reps);
}

}  // namespace experiments
