#include "mptone/summary.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "mptone/error.hpp"

namespace mptone {

ColumnSummary summarize(std::string name, std::span<const double> values) {
    std::vector<double> x;
    x.reserve(values.size());
    for (double v : values)
        if (!is_missing(v)) x.push_back(v);
    if (x.size() < 2)
        throw ValidationError(fmt::format("column '{}' has {} values; summary needs at least 2", name, x.size()));

    const auto n = static_cast<double>(x.size());
    double sum = 0.0;
    for (double v : x) sum += v;
    double mean = sum / n;
    // Second pass removes the rounding error of the first mean.
    double corr = 0.0;
    for (double v : x) corr += v - mean;
    mean += corr / n;
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);

    ColumnSummary s;
    s.name = std::move(name);
    s.observations = x.size();
    s.mean = mean;
    s.std_dev = std::sqrt(ss / (n - 1.0));
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    s.min = *lo;
    s.max = *hi;
    // Rounding can push the mean of a constant column a ulp outside [min, max].
    s.mean = std::clamp(s.mean, s.min, s.max);
    return s;
}

std::vector<ColumnSummary> summary_stats(const Frame& frame) {
    std::vector<ColumnSummary> out;
    out.reserve(frame.cols());
    for (std::size_t c = 0; c < frame.cols(); ++c) out.push_back(summarize(frame.names()[c], frame.column(c)));
    return out;
}

}  // namespace mptone
