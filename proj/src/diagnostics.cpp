#include "mptone/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "mptone/distributions.hpp"
#include "mptone/error.hpp"

namespace mptone {

BpgResult breusch_pagan_godfrey(const RegressionResult& result, const Design& design) {
    if (!design.intercept) throw ValidationError("Breusch-Pagan-Godfrey needs a design with an intercept");
    if (design.cols() < 2) throw ValidationError("Breusch-Pagan-Godfrey needs at least one slope regressor");
    if (design.rows() != static_cast<std::size_t>(result.residuals.size()))
        throw ValidationError(fmt::format("design has {} rows but the fit has {} residuals", design.rows(),
                                          result.residuals.size()));

    const Eigen::VectorXd e2 = result.residuals.array().square().matrix();
    const RegressionResult aux = ols(e2, design, "resid^2");

    const auto n = static_cast<double>(aux.n);
    const std::size_t df = aux.k - 1;
    BpgResult out;
    out.df = df;
    out.df_resid = aux.n - aux.k;
    out.f_stat = aux.f_stat;
    out.f_p_value = aux.f_p_value;
    out.obs_r_squared = n * aux.r_squared;
    out.obs_r_squared_p = dist::sf(dist::ChiSquare{static_cast<double>(df)}, out.obs_r_squared);

    double ess = 0.0;
    if (aux.tss > 0.0) ess = (aux.fitted.array() - e2.mean()).square().sum();
    const double sigma2 = result.rss / n;
    out.scaled_ess = sigma2 > 0.0 ? ess / (2.0 * sigma2 * sigma2) : 0.0;
    out.scaled_ess_p = dist::sf(dist::ChiSquare{static_cast<double>(df)}, out.scaled_ess);
    return out;
}

std::vector<LjungBoxRow> ljung_box(std::span<const double> e, std::span<const int> lags, int model_df) {
    const std::size_t n = e.size();
    if (model_df < 0) throw ValidationError("Ljung-Box model df must be >= 0");
    int top = 0;
    for (int m : lags) {
        if (m < 1) throw ValidationError(fmt::format("Ljung-Box lag must be >= 1, got {}", m));
        if (2 * static_cast<std::size_t>(m) >= n)
            throw ValidationError(fmt::format("Ljung-Box lag {} is not below n/2 for n = {}", m, n));
        if (m <= model_df)
            throw ValidationError(fmt::format("Ljung-Box lag {} leaves no degrees of freedom after {}", m, model_df));
        top = std::max(top, m);
    }

    double mean = 0.0;
    for (double v : e) mean += v;
    mean /= static_cast<double>(n);
    std::vector<double> d(n);
    double c0 = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        d[t] = e[t] - mean;
        c0 += d[t] * d[t];
    }
    if (!(c0 > 0.0)) throw ValidationError("Ljung-Box residuals have no variation");

    // Running sum so Q is nondecreasing in the lag by construction.
    const auto nn = static_cast<double>(n);
    std::vector<double> q_at(static_cast<std::size_t>(top) + 1, 0.0);
    double acc = 0.0;
    for (int k = 1; k <= top; ++k) {
        double ck = 0.0;
        for (std::size_t t = static_cast<std::size_t>(k); t < n; ++t) ck += d[t] * d[t - static_cast<std::size_t>(k)];
        const double r = ck / c0;
        acc += r * r / (nn - k);
        q_at[static_cast<std::size_t>(k)] = nn * (nn + 2.0) * acc;
    }

    std::vector<LjungBoxRow> rows;
    rows.reserve(lags.size());
    for (int m : lags) {
        LjungBoxRow row;
        row.lag = m;
        row.df = m - model_df;
        row.q = q_at[static_cast<std::size_t>(m)];
        row.p_value = dist::sf(dist::ChiSquare{static_cast<double>(row.df)}, row.q);
        rows.push_back(row);
    }
    return rows;
}

double durbin_watson(std::span<const double> e) {
    if (e.size() < 2) throw ValidationError("Durbin-Watson needs at least 2 residuals");
    double num = 0.0;
    double den = e[0] * e[0];
    for (std::size_t t = 1; t < e.size(); ++t) {
        const double diff = e[t] - e[t - 1];
        num += diff * diff;
        den += e[t] * e[t];
    }
    if (den == 0.0) throw ValidationError("Durbin-Watson undefined for all-zero residuals");
    return num / den;
}

DiagnosticsReport diagnose(const RegressionResult& result, const Design& design, std::span<const int> lb_lags,
                           int lb_model_df) {
    DiagnosticsReport r;
    r.bpg = breusch_pagan_godfrey(result, design);
    const std::span<const double> e(result.residuals.data(), static_cast<std::size_t>(result.residuals.size()));
    r.ljung_box = ljung_box(e, lb_lags, lb_model_df);
    r.durbin_watson = durbin_watson(e);
    return r;
}

}  // namespace mptone
