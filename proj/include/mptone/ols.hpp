#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mptone/frame.hpp"

namespace mptone {

/// Regressor matrix with column labels. When `intercept` is set the first
/// column is the constant and is labelled "C".
struct Design {
    Eigen::MatrixXd x;
    std::vector<std::string> names;
    bool intercept = true;

    std::size_t rows() const noexcept { return static_cast<std::size_t>(x.rows()); }
    std::size_t cols() const noexcept { return static_cast<std::size_t>(x.cols()); }
};

/// Builds [1, columns...] (or just columns) from a frame.
Design make_design(const Frame& frame, std::span<const std::string> columns, bool intercept = true);

Eigen::VectorXd column_vector(const Frame& frame, std::string_view name);

struct RegressionResult {
    std::string dependent;
    std::vector<std::string> names;
    bool intercept = true;
    std::size_t n = 0;
    std::size_t k = 0;

    Eigen::VectorXd coefficients;
    Eigen::VectorXd std_errors;
    Eigen::VectorXd t_stats;
    Eigen::VectorXd p_values;
    Eigen::VectorXd residuals;
    Eigen::VectorXd fitted;

    double rss = 0.0;
    double tss = 0.0;
    double r_squared = 0.0;
    double adj_r_squared = 0.0;
    double f_stat = 0.0;
    double f_p_value = 0.0;
    double durbin_watson = 0.0;
    double log_likelihood = 0.0;
    double aic = 0.0;
    double sigma = 0.0;
    double mean_dependent = 0.0;
    double sd_dependent = 0.0;

    std::size_t df_resid() const noexcept { return n - k; }
    std::optional<std::size_t> index_of(std::string_view name) const noexcept;
    /// Throws ValidationError when the coefficient is absent.
    std::size_t require(std::string_view name) const;
};

/// Least squares by column-pivoted Householder QR on the column-equilibrated
/// design; classical standard errors, Student-t p-values with n - k df,
/// F test of all non-intercept slopes.
///
/// Throws ValidationError when n <= k, when any cell is non-finite, or when
/// the design is rank deficient (the message names the dependent columns).
RegressionResult ols(const Eigen::VectorXd& y, const Design& design, std::string dependent_name = "y");

/// Gaussian log-likelihood at the ML variance, -(n/2)(1 + ln 2pi + ln(RSS/n)).
double gaussian_log_likelihood(double rss, std::size_t n) noexcept;

/// Per-observation AIC, -2 loglik / n + 2 k / n. Negative infinity when
/// RSS = 0.
double aic_value(double rss, std::size_t n, std::size_t k) noexcept;

/// AIC of a fit; logs a warning to stderr on a perfect fit (RSS = 0).
double aic(const RegressionResult& result);

/// Two-sided confidence interval for coefficient `index`.
std::pair<double, double> confidence_interval(const RegressionResult& result, std::size_t index, double level);

}  // namespace mptone
