#pragma once

#include <variant>

namespace mptone::dist {

/// Regularized incomplete beta I_x(a, b) together with its complement
/// 1 - I_x(a, b). Whichever of the pair is small is computed directly, so
/// both tails keep full relative precision.
struct BetaPair {
    double lower;
    double upper;
};
BetaPair incomplete_beta(double a, double b, double x);

/// Regularized incomplete gamma P(a, x) and Q(a, x) = 1 - P(a, x).
struct GammaPair {
    double lower;
    double upper;
};
GammaPair incomplete_gamma(double a, double x);

/// log B(a, b), accurate when one argument is large.
double log_beta(double a, double b);

struct Normal {
    double mean = 0.0;
    double sd = 1.0;
};
/// `df` may be +infinity (standard normal).
struct StudentT {
    double df;
};
struct FisherF {
    double df1;
    double df2;
};
struct ChiSquare {
    double df;
};

using Distribution = std::variant<Normal, StudentT, FisherF, ChiSquare>;

/// Each throws ValidationError for non-positive or NaN degrees of freedom
/// (or sd), and returns a value in [0, 1].
double cdf(const Normal& d, double x);
double cdf(const StudentT& d, double x);
double cdf(const FisherF& d, double x);
double cdf(const ChiSquare& d, double x);
double cdf(const Distribution& d, double x);

/// Upper tail P(X > x), computed without cancellation.
double sf(const Normal& d, double x);
double sf(const StudentT& d, double x);
double sf(const FisherF& d, double x);
double sf(const ChiSquare& d, double x);
double sf(const Distribution& d, double x);

double pdf(const StudentT& d, double x);

/// Inverse CDF, p in (0, 1).
double quantile(const StudentT& d, double p);
double quantile(const Normal& d, double p);

/// Two-sided p-value of a t statistic.
double two_sided_p(const StudentT& d, double t);

enum class Family { normal, student_t, fisher_f, chi_square };

/// Dispatcher by family tag: normal uses (param1 = mean, param2 = sd), t and
/// chi-square use param1 = df, F uses (df1, df2).
double dist_cdf(Family family, double param1, double param2, double x);

}  // namespace mptone::dist
