#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "mptone/error.hpp"
#include "mptone/ols.hpp"
#include "mptone/random.hpp"
#include "oracle/oracles.hpp"

using namespace mptone;

namespace {

Design design_from(const std::vector<std::vector<double>>& slopes, std::size_t n) {
    Design d;
    d.x.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(slopes.size() + 1));
    d.x.col(0).setOnes();
    d.names = {"C"};
    for (std::size_t j = 0; j < slopes.size(); ++j) {
        for (std::size_t i = 0; i < n; ++i) d.x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j + 1)) = slopes[j][i];
        d.names.push_back("x" + std::to_string(j + 1));
    }
    return d;
}

std::vector<std::vector<double>> columns_of(const Design& d) {
    std::vector<std::vector<double>> out(d.cols(), std::vector<double>(d.rows()));
    for (std::size_t j = 0; j < d.cols(); ++j)
        for (std::size_t i = 0; i < d.rows(); ++i)
            out[j][i] = d.x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    return out;
}

void expect_fit_invariants(const RegressionResult& r, const Eigen::VectorXd& y, const Design& d) {
    const Eigen::VectorXd xte = d.x.transpose() * r.residuals;
    for (Eigen::Index j = 0; j < xte.size(); ++j)
        EXPECT_LE(std::fabs(xte(j)), 1e-8 * y.norm() * d.x.col(j).norm()) << "column " << j;
    EXPECT_GE(r.r_squared, 0.0);
    EXPECT_LE(r.r_squared, 1.0);
    EXPECT_LE(r.adj_r_squared, r.r_squared);
    for (Eigen::Index j = 0; j < r.coefficients.size(); ++j)
        if (r.std_errors(j) > 0) EXPECT_DOUBLE_EQ(r.t_stats(j), r.coefficients(j) / r.std_errors(j));
}

}  // namespace

TEST(Ols, ExactLine) {
    const Eigen::VectorXd y = (Eigen::VectorXd(4) << 1, 3, 5, 7).finished();
    const Design d = design_from({{0, 1, 2, 3}}, 4);
    const auto r = ols(y, d);
    EXPECT_NEAR(r.coefficients(0), 1.0, 1e-14);
    EXPECT_NEAR(r.coefficients(1), 2.0, 1e-14);
    EXPECT_NEAR(r.r_squared, 1.0, 1e-14);
    EXPECT_LE(r.residuals.cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Ols, ConstantResponse) {
    const Eigen::VectorXd y = Eigen::VectorXd::Constant(5, 3.0);
    const Design d = design_from({{0.3, 1, 2.5, 3, 7}}, 5);
    const auto r = ols(y, d);
    EXPECT_NEAR(r.coefficients(1), 0.0, 1e-14);
    EXPECT_EQ(r.r_squared, 0.0);
}

TEST(Ols, SeededLineMatchesNormalEquations) {
    Rng rng(derive_seed(20240101, 42));
    const std::size_t n = 200;
    std::vector<double> x(n);
    Eigen::VectorXd y(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = rng.uniform(-3, 3);
        y(static_cast<Eigen::Index>(i)) = 1.0 + 2.0 * x[i] + rng.normal(0.0, 0.1);
    }
    const Design d = design_from({x}, n);
    const auto r = ols(y, d);
    const std::vector<double> yv(y.data(), y.data() + n);
    const auto o = oracle::normal_equations(yv, columns_of(d));
    for (int j = 0; j < 2; ++j) {
        EXPECT_NEAR(r.coefficients(j), static_cast<double>(o.beta[j]), 1e-8 * std::fabs(static_cast<double>(o.beta[j])));
        EXPECT_NEAR(r.std_errors(j), static_cast<double>(o.se[j]), 1e-8 * static_cast<double>(o.se[j]));
    }
    const auto [lo0, hi0] = confidence_interval(r, 0, 0.999);
    const auto [lo1, hi1] = confidence_interval(r, 1, 0.999);
    EXPECT_LT(lo0, 1.0);
    EXPECT_GT(hi0, 1.0);
    EXPECT_LT(lo1, 2.0);
    EXPECT_GT(hi1, 2.0);
    expect_fit_invariants(r, y, d);
}

TEST(Ols, RandomProblemsMatchOracle) {
    for (std::uint64_t rep = 0; rep < 25; ++rep) {
        Rng rng(derive_seed(7, rep));
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(15, 200));
        const std::size_t slopes = static_cast<std::size_t>(rng.uniform_int(1, 9));
        std::vector<std::vector<double>> cols(slopes, std::vector<double>(n));
        Eigen::VectorXd y(static_cast<Eigen::Index>(n));
        for (auto& c : cols)
            for (auto& v : c) v = rng.normal(0, rng.uniform(0.5, 5));
        for (std::size_t i = 0; i < n; ++i) {
            double s = rng.normal();
            for (std::size_t j = 0; j < slopes; ++j) s += 0.3 * static_cast<double>(j) * cols[j][i];
            y(static_cast<Eigen::Index>(i)) = s;
        }
        const Design d = design_from(cols, n);
        const auto r = ols(y, d);
        const std::vector<double> yv(y.data(), y.data() + n);
        const auto o = oracle::normal_equations(yv, columns_of(d));
        for (std::size_t j = 0; j < d.cols(); ++j) {
            const auto jj = static_cast<Eigen::Index>(j);
            EXPECT_NEAR(r.coefficients(jj), static_cast<double>(o.beta[j]), 1e-8 * std::max(1.0, std::fabs(static_cast<double>(o.beta[j]))));
            EXPECT_NEAR(r.std_errors(jj), static_cast<double>(o.se[j]), 1e-8 * static_cast<double>(o.se[j]));
        }
        EXPECT_NEAR(r.r_squared, static_cast<double>(o.r_squared), 1e-8);
        EXPECT_NEAR(r.f_stat, static_cast<double>(o.f_stat), 1e-8 * static_cast<double>(o.f_stat));
        expect_fit_invariants(r, y, d);
    }
}

TEST(Ols, NestedDesignsNeverIncreaseRss) {
    for (std::uint64_t rep = 0; rep < 20; ++rep) {
        Rng rng(derive_seed(11, rep));
        const std::size_t n = 60;
        std::vector<std::vector<double>> cols(6, std::vector<double>(n));
        for (auto& c : cols)
            for (auto& v : c) v = rng.normal();
        Eigen::VectorXd y(n);
        for (std::size_t i = 0; i < n; ++i) y(static_cast<Eigen::Index>(i)) = cols[0][i] + rng.normal();
        double prev_rss = ols(y, design_from({cols[0]}, n)).rss;
        double prev_r2 = ols(y, design_from({cols[0]}, n)).r_squared;
        for (std::size_t k = 2; k <= cols.size(); ++k) {
            const std::vector<std::vector<double>> sub(cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(k));
            const auto r = ols(y, design_from(sub, n));
            EXPECT_LE(r.rss, prev_rss * (1 + 1e-12));
            EXPECT_GE(r.r_squared, prev_r2 - 1e-12);
            prev_rss = r.rss;
            prev_r2 = r.r_squared;
        }
    }
}

TEST(Ols, Errors) {
    const Eigen::VectorXd y = (Eigen::VectorXd(4) << 1, 2, 4, 3).finished();
    const Design dup = design_from({{1, 2, 3, 4}, {2, 4, 6, 8}}, 4);
    try {
        ols(y, dup, "returns");
        FAIL();
    } catch (const ValidationError& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("returns"), std::string::npos) << msg;
        EXPECT_NE(msg.find("x"), std::string::npos) << msg;
    }
    const Design wide = design_from({{1, 2, 3, 5}, {0, 1, 0, 1}, {3, 1, 4, 1}}, 4);
    EXPECT_THROW(ols(y, wide), ValidationError);
}

TEST(Aic, InvertedFixtureLandsInRange) {
    // ln(RSS/n) = AIC - 2k/n - 1 - ln(2 pi) for a target AIC of -6.3.
    const std::size_t n = 52, k = 27;
    const double rss = n * std::exp(-6.3 - 2.0 * k / n - 1.0 - std::log(2.0 * M_PI));
    const double a = aic_value(rss, n, k);
    EXPECT_NEAR(a, -6.3, 1e-12);
    EXPECT_GE(a, -6.4);
    EXPECT_LE(a, -6.2);
}

TEST(Aic, Identities) {
    EXPECT_NEAR(aic_value(2.0, 100, 5) - aic_value(1.0, 100, 5), std::log(2.0), 1e-14);
    EXPECT_NEAR(aic_value(0.7, 80, 6) - aic_value(0.7, 80, 5), 2.0 / 80.0, 1e-14);
    EXPECT_NEAR(aic_value(0.3, 50, 3) - aic_value(1.9, 50, 3), std::log(0.3 / 1.9), 1e-14);
    EXPECT_EQ(aic_value(0.0, 10, 2), -std::numeric_limits<double>::infinity());
}

TEST(Aic, MatchesLogLikelihood) {
    const Eigen::VectorXd y = (Eigen::VectorXd(6) << 1, 3, 2, 5, 4, 6).finished();
    const auto r = ols(y, design_from({{1, 2, 3, 4, 5, 6}}, 6));
    EXPECT_DOUBLE_EQ(r.log_likelihood, gaussian_log_likelihood(r.rss, 6));
    EXPECT_DOUBLE_EQ(r.aic, -2.0 * r.log_likelihood / 6 + 2.0 * 2 / 6);
    EXPECT_DOUBLE_EQ(aic(r), r.aic);
}
