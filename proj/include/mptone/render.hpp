#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "mptone/ols.hpp"

namespace mptone::render {

/// "***", "**", "*" or "" for p below levels[2], levels[1], levels[0].
std::string stars(double p, const std::array<double, 3>& levels);

/// Text-table number: 4 decimals, or %.2E when 0 < |v| < 1e-3. NaN is "NA".
std::string cell(double v);
/// CSV number at full round-trip precision; NaN is empty.
std::string full(double v);

/// Fixed-width table: first column left-aligned, the rest right-aligned.
class TextTable {
public:
    explicit TextTable(std::vector<std::string> header) : header_(std::move(header)) {}
    void add_row(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
    void add_rule() { rows_.emplace_back(); }
    std::string str() const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// Coefficient table plus fit statistics, in the layout of a regression
/// software printout.
std::string regression_table(std::string_view title, const RegressionResult& r, const std::array<double, 3>& levels);

struct Point {
    std::string label;
    double value;
};

/// Deterministic standalone SVG documents.
std::string svg_line_chart(std::string_view title, std::string_view y_label, const std::vector<Point>& points);
std::string svg_bar_chart(std::string_view title, std::string_view y_label, const std::vector<Point>& bars);
/// Markers joined by a line, labels on the x axis.
std::string svg_scatter_line(std::string_view title, std::string_view y_label, const std::vector<Point>& points);

}  // namespace mptone::render
