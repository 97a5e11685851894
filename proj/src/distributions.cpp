#include "mptone/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "mptone/error.hpp"

namespace mptone::dist {

namespace {

constexpr double kEps = 1e-16;
constexpr double kTiny = 1e-300;
constexpr int kMaxIter = 200000;

double log_gamma(double x) {
#if defined(__GLIBC__)
    int sign = 0;
    return ::lgamma_r(x, &sign);  // std::lgamma writes the global signgam
#else
    return std::lgamma(x);
#endif
}

// Stirling remainder of log Gamma(z) for z >= 10.
double stirling_tail(double z) {
    const double z2 = 1.0 / (z * z);
    return (1.0 / 12.0 - z2 * (1.0 / 360.0 - z2 * (1.0 / 1260.0 - z2 / 1680.0))) / z;
}

// Continued fraction for I_x(a, b), modified Lentz. Converges quickly for
// x < (a + 1) / (a + b + 2).
double beta_fraction(double a, double b, double x) {
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) return h;
    }
    throw ArithmeticError(fmt::format("incomplete beta did not converge (a={}, b={}, x={})", a, b, x));
}

// x and y = 1 - x supplied separately so callers can avoid cancellation.
BetaPair incomplete_beta_xy(double a, double b, double x, double y) {
    if (!(a > 0.0) || !(b > 0.0)) throw ValidationError("incomplete beta needs a, b > 0");
    if (x <= 0.0) return {0.0, 1.0};
    if (y <= 0.0) return {1.0, 0.0};
    const double log_front = a * std::log(x) + b * std::log(y) - log_beta(a, b);
    const double front = std::exp(log_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        const double lower = std::clamp(front * beta_fraction(a, b, x) / a, 0.0, 1.0);
        return {lower, 1.0 - lower};
    }
    const double upper = std::clamp(front * beta_fraction(b, a, y) / b, 0.0, 1.0);
    return {1.0 - upper, upper};
}

void check_df(double df, const char* what) {
    if (!(df > 0.0)) throw ValidationError(fmt::format("{} must be positive, got {}", what, df));
}

}  // namespace

double log_beta(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw ValidationError("log_beta needs a, b > 0");
    const double big = std::max(a, b);
    const double small = std::min(a, b);
    if (big < 10.0) return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
    // log Gamma(big) - log Gamma(big + small) through Stirling, which keeps the
    // difference accurate when both terms are huge.
    const double s = big + small;
    const double diff = -small * std::log(s) - (big - 0.5) * std::log1p(small / big) + small +
                        stirling_tail(big) - stirling_tail(s);
    return log_gamma(small) + diff;
}

BetaPair incomplete_beta(double a, double b, double x) {
    if (x < 0.0 || x > 1.0 || std::isnan(x)) throw ValidationError("incomplete beta needs x in [0, 1]");
    return incomplete_beta_xy(a, b, x, 1.0 - x);
}

GammaPair incomplete_gamma(double a, double x) {
    if (!(a > 0.0)) throw ValidationError("incomplete gamma needs a > 0");
    if (std::isnan(x)) throw ValidationError("incomplete gamma: x is NaN");
    if (x <= 0.0) return {0.0, 1.0};
    if (std::isinf(x)) return {1.0, 0.0};
    const double log_front = -x + a * std::log(x) - log_gamma(a);
    if (x < a + 1.0) {
        double ap = a;
        double del = 1.0 / a;
        double sum = del;
        for (int n = 0; n < kMaxIter; ++n) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::fabs(del) < std::fabs(sum) * kEps) {
                const double lower = std::clamp(sum * std::exp(log_front), 0.0, 1.0);
                return {lower, 1.0 - lower};
            }
        }
        throw ArithmeticError(fmt::format("incomplete gamma series did not converge (a={}, x={})", a, x));
    }
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) {
            const double upper = std::clamp(std::exp(log_front) * h, 0.0, 1.0);
            return {1.0 - upper, upper};
        }
    }
    throw ArithmeticError(fmt::format("incomplete gamma fraction did not converge (a={}, x={})", a, x));
}

// --- Normal -----------------------------------------------------------------

double cdf(const Normal& d, double x) {
    check_df(d.sd, "normal sd");
    return 0.5 * std::erfc(-(x - d.mean) / (d.sd * std::numbers::sqrt2));
}

double sf(const Normal& d, double x) {
    check_df(d.sd, "normal sd");
    return 0.5 * std::erfc((x - d.mean) / (d.sd * std::numbers::sqrt2));
}

double quantile(const Normal& d, double p) {
    check_df(d.sd, "normal sd");
    if (!(p > 0.0 && p < 1.0)) throw ValidationError("quantile needs p in (0, 1)");
    // Acklam's rational approximation, then Newton steps on erfc.
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                                   1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                                   6.680131188771972e+01,  -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                                   -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double e[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                                   3.754408661907416e+00};
    double z;
    if (p < 0.02425) {
        const double q = std::sqrt(-2.0 * std::log(p));
        z = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((e[0] * q + e[1]) * q + e[2]) * q + e[3]) * q + 1.0);
    } else if (p > 1.0 - 0.02425) {
        const double q = std::sqrt(-2.0 * std::log1p(-p));
        z = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((e[0] * q + e[1]) * q + e[2]) * q + e[3]) * q + 1.0);
    } else {
        const double q = p - 0.5;
        const double r = q * q;
        z = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    }
    for (int i = 0; i < 2; ++i) {
        const double err = 0.5 * std::erfc(-z / std::numbers::sqrt2) - p;
        const double dens = std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
        z -= err / dens;
    }
    return d.mean + d.sd * z;
}

// --- Student t ----------------------------------------------------------------

namespace {

// P(T > |x|) for x != 0.
double t_tail(double df, double x) {
    if (std::isinf(df)) return sf(Normal{}, std::fabs(x));
    const double x2 = x * x;
    if (x2 < df) {
        // I_{x^2/(df+x^2)}(1/2, df/2) = P(|T| <= |x|).
        const auto r = incomplete_beta_xy(0.5, 0.5 * df, x2 / (df + x2), df / (df + x2));
        return 0.5 * r.upper;
    }
    const auto r = incomplete_beta_xy(0.5 * df, 0.5, df / (df + x2), x2 / (df + x2));
    return 0.5 * r.lower;
}

}  // namespace

double cdf(const StudentT& d, double x) {
    check_df(d.df, "t degrees of freedom");
    if (std::isnan(x)) throw ValidationError("t cdf: x is NaN");
    if (x == 0.0) return 0.5;
    if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
    const double tail = t_tail(d.df, x);
    return x > 0 ? 1.0 - tail : tail;
}

double sf(const StudentT& d, double x) { return cdf(d, -x); }

double pdf(const StudentT& d, double x) {
    check_df(d.df, "t degrees of freedom");
    if (std::isinf(d.df)) return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
    const double v = d.df;
    return std::exp(-0.5 * (v + 1.0) * std::log1p(x * x / v) - 0.5 * std::log(v) - log_beta(0.5 * v, 0.5));
}

double two_sided_p(const StudentT& d, double t) {
    check_df(d.df, "t degrees of freedom");
    if (std::isnan(t)) return std::numeric_limits<double>::quiet_NaN();
    if (t == 0.0) return 1.0;
    if (std::isinf(t)) return 0.0;
    return std::min(1.0, 2.0 * t_tail(d.df, t));
}

double quantile(const StudentT& d, double p) {
    check_df(d.df, "t degrees of freedom");
    if (!(p > 0.0 && p < 1.0)) throw ValidationError("quantile needs p in (0, 1)");
    if (std::isinf(d.df)) return quantile(Normal{}, p);
    if (p == 0.5) return 0.0;
    double lo = -1.0, hi = 1.0;
    while (cdf(d, lo) > p) lo *= 2.0;
    while (cdf(d, hi) < p) hi *= 2.0;
    double x = std::clamp(quantile(Normal{}, p), lo, hi);
    for (int i = 0; i < 200; ++i) {
        const double f = cdf(d, x) - p;
        if (f == 0.0) return x;
        if (f < 0) lo = x; else hi = x;
        const double dens = pdf(d, x);
        double next = dens > 0 ? x - f / dens : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::fabs(next - x) <= 1e-15 * std::max(1.0, std::fabs(x))) return next;
        x = next;
    }
    return x;
}

// --- F and chi-square -----------------------------------------------------------

double cdf(const FisherF& d, double x) {
    check_df(d.df1, "F numerator df");
    check_df(d.df2, "F denominator df");
    if (std::isnan(x)) throw ValidationError("F cdf: x is NaN");
    if (x <= 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    const double num = d.df1 * x;
    return incomplete_beta_xy(0.5 * d.df1, 0.5 * d.df2, num / (num + d.df2), d.df2 / (num + d.df2)).lower;
}

double sf(const FisherF& d, double x) {
    check_df(d.df1, "F numerator df");
    check_df(d.df2, "F denominator df");
    if (std::isnan(x)) throw ValidationError("F sf: x is NaN");
    if (x <= 0.0) return 1.0;
    if (std::isinf(x)) return 0.0;
    const double num = d.df1 * x;
    return incomplete_beta_xy(0.5 * d.df1, 0.5 * d.df2, num / (num + d.df2), d.df2 / (num + d.df2)).upper;
}

double cdf(const ChiSquare& d, double x) {
    check_df(d.df, "chi-square df");
    if (std::isnan(x)) throw ValidationError("chi-square cdf: x is NaN");
    return incomplete_gamma(0.5 * d.df, 0.5 * x).lower;
}

double sf(const ChiSquare& d, double x) {
    check_df(d.df, "chi-square df");
    if (std::isnan(x)) throw ValidationError("chi-square sf: x is NaN");
    return incomplete_gamma(0.5 * d.df, 0.5 * x).upper;
}

double cdf(const Distribution& d, double x) {
    return std::visit([x](const auto& dist) { return cdf(dist, x); }, d);
}

double sf(const Distribution& d, double x) {
    return std::visit([x](const auto& dist) { return sf(dist, x); }, d);
}

double dist_cdf(Family family, double param1, double param2, double x) {
    switch (family) {
        case Family::normal: return cdf(Normal{param1, param2}, x);
        case Family::student_t: return cdf(StudentT{param1}, x);
        case Family::fisher_f: return cdf(FisherF{param1, param2}, x);
        case Family::chi_square: return cdf(ChiSquare{param1}, x);
    }
    throw ValidationError("unknown distribution family");
}

}  // namespace mptone::dist
