#include "mptone/ols.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "mptone/distributions.hpp"
#include "mptone/error.hpp"

namespace mptone {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// |R_ii| below this fraction of the largest pivot marks a dependent column.
// Columns are scaled to unit norm first, so this is scale free.
constexpr double kRankTolerance = 1e-10;

}  // namespace

Design make_design(const Frame& frame, std::span<const std::string> columns, bool intercept) {
    const auto n = static_cast<Eigen::Index>(frame.rows());
    const auto off = intercept ? 1 : 0;
    Design d;
    d.intercept = intercept;
    d.x.resize(n, static_cast<Eigen::Index>(columns.size()) + off);
    if (intercept) {
        d.x.col(0).setOnes();
        d.names.emplace_back("C");
    }
    for (std::size_t j = 0; j < columns.size(); ++j) {
        const auto col = frame.column(columns[j]);
        for (Eigen::Index i = 0; i < n; ++i) d.x(i, static_cast<Eigen::Index>(j) + off) = col[static_cast<std::size_t>(i)];
        d.names.push_back(columns[j]);
    }
    return d;
}

Eigen::VectorXd column_vector(const Frame& frame, std::string_view name) {
    const auto col = frame.column(name);
    Eigen::VectorXd v(static_cast<Eigen::Index>(col.size()));
    for (std::size_t i = 0; i < col.size(); ++i) v(static_cast<Eigen::Index>(i)) = col[i];
    return v;
}

std::optional<std::size_t> RegressionResult::index_of(std::string_view name) const noexcept {
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names.begin());
}

std::size_t RegressionResult::require(std::string_view name) const {
    if (auto i = index_of(name)) return *i;
    throw ValidationError(fmt::format("regression of '{}' has no coefficient '{}'", dependent, name));
}

double gaussian_log_likelihood(double rss, std::size_t n) noexcept {
    const auto nn = static_cast<double>(n);
    if (rss <= 0.0) return std::numeric_limits<double>::infinity();
    return -0.5 * nn * (1.0 + std::log(2.0 * std::numbers::pi) + std::log(rss / nn));
}

double aic_value(double rss, std::size_t n, std::size_t k) noexcept {
    if (rss <= 0.0) return -std::numeric_limits<double>::infinity();
    const auto nn = static_cast<double>(n);
    return -2.0 * gaussian_log_likelihood(rss, n) / nn + 2.0 * static_cast<double>(k) / nn;
}

double aic(const RegressionResult& result) {
    if (result.rss <= 0.0)
        std::cerr << "warning: perfect fit for '" << result.dependent << "' (RSS = 0); AIC is -inf\n";
    return aic_value(result.rss, result.n, result.k);
}

RegressionResult ols(const Eigen::VectorXd& y, const Design& design, std::string dependent_name) {
    const Eigen::Index n = design.x.rows();
    const Eigen::Index k = design.x.cols();
    if (y.size() != n)
        throw ValidationError(fmt::format("'{}' has {} observations but the design has {} rows", dependent_name, y.size(), n));
    if (static_cast<std::size_t>(k) != design.names.size())
        throw ValidationError("design column names do not match its width");
    if (k == 0) throw ValidationError("design has no columns");
    if (n <= k)
        throw ValidationError(fmt::format("regression of '{}' needs more observations ({}) than coefficients ({})",
                                          dependent_name, n, k));
    if (!y.allFinite()) throw ValidationError(fmt::format("'{}' contains non-finite values", dependent_name));
    for (Eigen::Index j = 0; j < k; ++j)
        if (!design.x.col(j).allFinite())
            throw ValidationError(fmt::format("regressor '{}' contains non-finite values", design.names[static_cast<std::size_t>(j)]));

    // Equilibrate so the rank test does not depend on units.
    Eigen::VectorXd scale(k);
    for (Eigen::Index j = 0; j < k; ++j) {
        const double norm = design.x.col(j).norm();
        scale(j) = norm > 0.0 ? norm : 1.0;
    }
    const Eigen::MatrixXd xs = design.x * scale.cwiseInverse().asDiagonal();

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(xs);
    qr.setThreshold(kRankTolerance);
    const Eigen::Index rank = qr.rank();
    if (rank < k) {
        std::vector<std::size_t> dependent;
        const auto& perm = qr.colsPermutation().indices();
        for (Eigen::Index j = rank; j < k; ++j) dependent.push_back(static_cast<std::size_t>(perm(j)));
        std::sort(dependent.begin(), dependent.end());
        std::string names;
        for (auto j : dependent) names += (names.empty() ? "" : ", ") + design.names[j];
        throw ValidationError(fmt::format("design for '{}' is rank deficient ({} of {}); linearly dependent column(s): {}",
                                          dependent_name, rank, k, names));
    }

    RegressionResult r;
    r.dependent = std::move(dependent_name);
    r.names = design.names;
    r.intercept = design.intercept;
    r.n = static_cast<std::size_t>(n);
    r.k = static_cast<std::size_t>(k);

    const Eigen::VectorXd beta_scaled = qr.solve(y);
    r.coefficients = beta_scaled.cwiseQuotient(scale);
    r.fitted = design.x * r.coefficients;
    r.residuals = y - r.fitted;
    r.rss = r.residuals.squaredNorm();

    // (Xs'Xs)^-1 = P R^-1 R^-T P'.
    const Eigen::MatrixXd rmat = qr.matrixR().topLeftCorner(k, k).template triangularView<Eigen::Upper>();
    const Eigen::MatrixXd rinv =
        rmat.template triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(k, k));
    const Eigen::MatrixXd inner = rinv * rinv.transpose();
    const Eigen::MatrixXd cov_scaled = qr.colsPermutation() * inner * qr.colsPermutation().transpose();

    const double df = static_cast<double>(n - k);
    const double s2 = r.rss / df;
    r.sigma = std::sqrt(s2);
    r.std_errors.resize(k);
    r.t_stats.resize(k);
    r.p_values.resize(k);
    const dist::StudentT tdist{df};
    for (Eigen::Index j = 0; j < k; ++j) {
        const double var = s2 * cov_scaled(j, j) / (scale(j) * scale(j));
        const double se = std::sqrt(std::max(var, 0.0));
        r.std_errors(j) = se;
        r.t_stats(j) = se > 0.0 ? r.coefficients(j) / se : kNaN;
        r.p_values(j) = se > 0.0 ? dist::two_sided_p(tdist, r.t_stats(j)) : kNaN;
    }

    const double nn = static_cast<double>(n);
    r.mean_dependent = y.mean();
    const double centered = (y.array() - r.mean_dependent).matrix().squaredNorm();
    r.sd_dependent = std::sqrt(centered / (nn - 1.0));
    r.tss = design.intercept ? centered : y.squaredNorm();
    r.r_squared = r.tss > 0.0 ? std::clamp(1.0 - r.rss / r.tss, 0.0, 1.0) : 0.0;
    const double df_model = static_cast<double>(design.intercept ? k - 1 : k);
    const double df_total = design.intercept ? nn - 1.0 : nn;
    r.adj_r_squared = 1.0 - (1.0 - r.r_squared) * df_total / df;
    if (df_model > 0) {
        if (r.r_squared >= 1.0) {
            r.f_stat = std::numeric_limits<double>::infinity();
            r.f_p_value = 0.0;
        } else {
            r.f_stat = (r.r_squared / df_model) / ((1.0 - r.r_squared) / df);
            r.f_p_value = dist::sf(dist::FisherF{df_model, df}, r.f_stat);
        }
    } else {
        r.f_stat = kNaN;
        r.f_p_value = kNaN;
    }

    if (r.rss > 0.0) {
        double num = 0.0;
        for (Eigen::Index t = 1; t < n; ++t) {
            const double d = r.residuals(t) - r.residuals(t - 1);
            num += d * d;
        }
        r.durbin_watson = num / r.rss;
    } else {
        r.durbin_watson = kNaN;
    }
    r.log_likelihood = gaussian_log_likelihood(r.rss, r.n);
    r.aic = aic_value(r.rss, r.n, r.k);
    return r;
}

std::pair<double, double> confidence_interval(const RegressionResult& result, std::size_t index, double level) {
    if (!(level > 0.0 && level < 1.0)) throw ValidationError("confidence level must be in (0, 1)");
    const double q = dist::quantile(dist::StudentT{static_cast<double>(result.df_resid())}, 0.5 + 0.5 * level);
    const auto i = static_cast<Eigen::Index>(index);
    const double half = q * result.std_errors(i);
    return {result.coefficients(i) - half, result.coefficients(i) + half};
}

}  // namespace mptone
