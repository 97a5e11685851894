#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

namespace mptone {

enum class AdfTrend { none, constant, constant_trend };

std::string_view to_string(AdfTrend t) noexcept;
/// Accepts "none"/"n", "constant"/"c", "trend"/"ct"/"constant+trend".
AdfTrend parse_adf_trend(std::string_view text);

struct AdfCriticalValues {
    double pct1 = 0.0;
    double pct5 = 0.0;
    double pct10 = 0.0;
};

struct AdfResult {
    /// t statistic on the lagged level.
    double statistic = 0.0;
    /// Augmentation order (lagged differences) actually used.
    int lag = 0;
    double p_value = 0.0;
    AdfCriticalValues critical;
    AdfTrend trend = AdfTrend::constant;
    /// Observations in the final test regression.
    std::size_t observations = 0;
};

/// MacKinnon (1994) approximate p-value for a tau statistic.
double mackinnon_p_value(double statistic, AdfTrend trend) noexcept;

/// MacKinnon (2010) finite-sample critical values for `observations`.
AdfCriticalValues mackinnon_critical_values(AdfTrend trend, std::size_t observations) noexcept;

/// 12 (n / 100)^(1/4), floored.
int schwert_max_lag(std::size_t n) noexcept;

/// Regress diff(y)_t on y_{t-1}, diff(y)_{t-1..t-l} and deterministics. The
/// augmentation order is chosen by minimum AIC over 0..max_lag on the
/// sample common to all orders, then the chosen order is refit on its full
/// sample. A fixed order can be forced with `fixed_lag`.
///
/// Throws ValidationError when the series is not longer than max_lag + 10,
/// contains non-finite values, or is constant.
AdfResult adf_test(std::span<const double> series, int max_lag, AdfTrend trend = AdfTrend::constant,
                   std::optional<int> fixed_lag = std::nullopt);

}  // namespace mptone
