#include "mptone/adf.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <fmt/format.h>

#include "mptone/distributions.hpp"
#include "mptone/error.hpp"
#include "mptone/mackinnon.hpp"
#include "mptone/ols.hpp"

namespace mptone {

namespace {

std::size_t row_of(AdfTrend t) noexcept { return static_cast<std::size_t>(t); }

// Test regression for augmentation order `lag` over difference indices
// first..n_diff-1. The lagged level is always the column named "level".
RegressionResult fit_adf(std::span<const double> y, int lag, std::size_t first, AdfTrend trend) {
    const std::size_t n_diff = y.size() - 1;
    const auto rows = static_cast<Eigen::Index>(n_diff - first);
    const bool constant = trend != AdfTrend::none;
    const bool linear = trend == AdfTrend::constant_trend;
    const Eigen::Index k = (constant ? 1 : 0) + (linear ? 1 : 0) + 1 + lag;

    Design d;
    d.intercept = constant;
    d.x.resize(rows, k);
    if (constant) d.names.emplace_back("C");
    if (linear) d.names.emplace_back("trend");
    d.names.emplace_back("level");
    for (int j = 1; j <= lag; ++j) d.names.push_back(fmt::format("diff(-{})", j));

    Eigen::VectorXd response(rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const std::size_t i = first + static_cast<std::size_t>(r);
        response(r) = y[i + 1] - y[i];
        Eigen::Index c = 0;
        if (constant) d.x(r, c++) = 1.0;
        if (linear) d.x(r, c++) = static_cast<double>(r + 1);
        d.x(r, c++) = y[i];
        for (int j = 1; j <= lag; ++j) {
            const std::size_t ij = i - static_cast<std::size_t>(j);
            d.x(r, c++) = y[ij + 1] - y[ij];
        }
    }
    return ols(response, d, "diff");
}

}  // namespace

std::string_view to_string(AdfTrend t) noexcept {
    switch (t) {
        case AdfTrend::none: return "none";
        case AdfTrend::constant: return "constant";
        case AdfTrend::constant_trend: return "constant+trend";
    }
    return "?";
}

AdfTrend parse_adf_trend(std::string_view s) {
    if (s == "none" || s == "n") return AdfTrend::none;
    if (s == "constant" || s == "c") return AdfTrend::constant;
    if (s == "trend" || s == "ct" || s == "constant+trend") return AdfTrend::constant_trend;
    throw ValidationError(fmt::format("unknown ADF specification '{}' (none, constant, trend)", s));
}

double mackinnon_p_value(double stat, AdfTrend trend) noexcept {
    const std::size_t r = row_of(trend);
    if (std::isnan(stat)) return stat;
    if (stat > mackinnon::kTauMax[r]) return 1.0;
    if (stat < mackinnon::kTauMin[r]) return 0.0;
    double z = 0.0;
    if (stat <= mackinnon::kTauStar[r]) {
        const auto& c = mackinnon::kSmallP[r];
        z = c[0] + stat * (c[1] + stat * c[2]);
    } else {
        const auto& c = mackinnon::kLargeP[r];
        z = c[0] + stat * (c[1] + stat * (c[2] + stat * c[3]));
    }
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

AdfCriticalValues mackinnon_critical_values(AdfTrend trend, std::size_t observations) noexcept {
    const auto& rows = mackinnon::kCritical[row_of(trend)];
    const double inv = 1.0 / static_cast<double>(observations);
    double out[3];
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& b = rows[i];
        out[i] = b[0] + inv * (b[1] + inv * (b[2] + inv * b[3]));
    }
    return {out[0], out[1], out[2]};
}

int schwert_max_lag(std::size_t n) noexcept {
    return static_cast<int>(std::floor(12.0 * std::pow(static_cast<double>(n) / 100.0, 0.25)));
}

AdfResult adf_test(std::span<const double> y, int max_lag, AdfTrend trend, std::optional<int> fixed_lag) {
    if (max_lag < 0) throw ValidationError(fmt::format("ADF max lag must be >= 0, got {}", max_lag));
    if (fixed_lag && (*fixed_lag < 0 || *fixed_lag > max_lag))
        throw ValidationError(fmt::format("ADF lag {} outside 0..{}", *fixed_lag, max_lag));
    if (y.size() <= static_cast<std::size_t>(max_lag) + 10)
        throw ValidationError(fmt::format("ADF needs more than {} observations for max lag {}, got {}", max_lag + 10,
                                          max_lag, y.size()));
    for (double v : y)
        if (!std::isfinite(v)) throw ValidationError("ADF series contains missing or non-finite values");
    bool varies = false;
    for (double v : y) varies = varies || v != y[0];
    if (!varies) throw ValidationError("ADF series is constant (no variation)");

    int lag = fixed_lag.value_or(0);
    if (!fixed_lag) {
        double best = std::numeric_limits<double>::infinity();
        const auto common = static_cast<std::size_t>(max_lag);
        for (int l = 0; l <= max_lag; ++l) {
            const double a = fit_adf(y, l, common, trend).aic;
            if (a < best) {
                best = a;
                lag = l;
            }
        }
    }
    const RegressionResult fit = fit_adf(y, lag, static_cast<std::size_t>(lag), trend);
    const std::size_t level = fit.require("level");

    AdfResult r;
    r.statistic = fit.t_stats(static_cast<Eigen::Index>(level));
    r.lag = lag;
    r.trend = trend;
    r.observations = fit.n;
    r.p_value = mackinnon_p_value(r.statistic, trend);
    r.critical = mackinnon_critical_values(trend, fit.n);
    return r;
}

}  // namespace mptone
