#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mptone/ols.hpp"

namespace mptone {

/// Breusch-Pagan-Godfrey: squared residuals regressed on the original design.
struct BpgResult {
    double f_stat = 0.0;
    double f_p_value = 1.0;
    /// n * R^2 of the auxiliary regression.
    double obs_r_squared = 0.0;
    double obs_r_squared_p = 1.0;
    /// Explained SS of the auxiliary regression over 2 (RSS/n)^2.
    double scaled_ess = 0.0;
    double scaled_ess_p = 1.0;
    /// Chi-square (and F numerator) degrees of freedom, k - 1.
    std::size_t df = 0;
    /// F denominator degrees of freedom, n - k.
    std::size_t df_resid = 0;
};

/// `design` must be the one `result` was fitted on and contain an intercept
/// plus at least one slope. Throws ValidationError otherwise, and as ols.
BpgResult breusch_pagan_godfrey(const RegressionResult& result, const Design& design);

struct LjungBoxRow {
    int lag = 0;
    double q = 0.0;
    double p_value = 1.0;
    /// Chi-square degrees of freedom, lag - model_df.
    int df = 0;
};

/// Q(m) = n(n+2) sum_{k<=m} r_k^2 / (n-k) with r_k the sample
/// autocorrelation of the demeaned residuals; p from chi-square(m - model_df).
/// The default model_df = 0 applies no fitted-parameter correction.
///
/// Throws ValidationError when a lag is < 1, not below n/2, or not above
/// model_df, or when the residuals have no variation.
std::vector<LjungBoxRow> ljung_box(std::span<const double> residuals, std::span<const int> lags, int model_df = 0);

/// sum (e_t - e_{t-1})^2 / sum e_t^2. Throws ValidationError for n < 2 or
/// all-zero residuals.
double durbin_watson(std::span<const double> residuals);

struct DiagnosticsReport {
    BpgResult bpg;
    std::vector<LjungBoxRow> ljung_box;
    double durbin_watson = 0.0;
};

DiagnosticsReport diagnose(const RegressionResult& result, const Design& design, std::span<const int> lb_lags,
                           int lb_model_df = 0);

}  // namespace mptone
