#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mptone/frame.hpp"

namespace mptone {

struct ColumnSummary {
    std::string name;
    std::size_t observations = 0;
    double mean = 0.0;
    /// Sample standard deviation (n - 1 denominator).
    double std_dev = 0.0;
    double min = 0.0;
    double max = 0.0;
};

/// Missing cells are skipped. Throws ValidationError naming the series when
/// fewer than two values remain.
ColumnSummary summarize(std::string name, std::span<const double> values);

std::vector<ColumnSummary> summary_stats(const Frame& frame);

}  // namespace mptone
