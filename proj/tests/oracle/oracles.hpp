#pragma once

// Independent reference computations for the test suite. None of these call
// into the code they check: OLS goes through long-double normal equations,
// CDFs through adaptive quadrature of the density, and the ARDL ranking
// through its own lag construction and enumeration.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mptone/distributions.hpp"

namespace oracle {

struct NormalEquationsFit {
    std::vector<long double> beta;
    std::vector<long double> se;
    long double rss = 0;
    long double tss = 0;
    long double r_squared = 0;
    /// Joint test of every column but the first (the intercept).
    long double f_stat = 0;
};

/// `columns` are the design columns, intercept first when `intercept`.
NormalEquationsFit normal_equations(std::span<const double> y, const std::vector<std::vector<double>>& columns,
                                    bool intercept = true);

/// Adaptive Gauss-Kronrod (7/15) on [a, b] in long double.
long double integrate(const std::function<long double(long double)>& f, long double a, long double b,
                      long double tol = 1e-16L);

/// CDF by integrating the density. Same parameter convention as
/// mptone::dist::dist_cdf.
long double quadrature_cdf(mptone::dist::Family family, double param1, double param2, double x);

struct GridPoint {
    double param1;
    double param2;
    double x;
};

/// 200 (parameters, x) points per family: 8 parameter sets times 25
/// abscissae spanning both tails.
std::vector<GridPoint> cdf_grid(mptone::dist::Family family);

struct NaiveModel {
    std::vector<int> orders;
    double aic = 0.0;
};

/// Every candidate of the grid {1..p} x prod {0..q_j}, built straight from
/// raw level series (dependent first) on the sample trimmed at the largest
/// maximum order, fitted by mptone::ols and sorted by AIC with ties going to
/// the smaller lag vector.
std::vector<NaiveModel> naive_ardl_ranking(const std::vector<std::vector<double>>& levels,
                                           const std::vector<int>& max_orders);

/// Two-pass long-double mean and sample standard deviation.
struct Moments {
    long double mean = 0;
    long double sd = 0;
};
Moments moments(std::span<const double> x);

}  // namespace oracle
