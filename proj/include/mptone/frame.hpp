#pragma once

#include <cmath>
#include <cstddef>
#include <filesystem>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mptone/date.hpp"

namespace mptone {

enum class Frequency { daily, monthly, event };

std::string_view to_string(Frequency f) noexcept;

/// Missing cells are quiet NaN; loaders never produce NaN for a present cell.
inline constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();
inline bool is_missing(double v) noexcept { return std::isnan(v); }

/// Date-indexed table of named numeric columns.
///
/// Invariants: index strictly increasing, column names unique, every
/// column exactly as long as the index. All mutators check them.
class Frame {
public:
    Frame() = default;
    Frame(std::vector<Date> index, Frequency frequency);

    void add_column(std::string name, std::vector<double> values);

    const std::vector<Date>& index() const noexcept { return index_; }
    Frequency frequency() const noexcept { return frequency_; }
    std::size_t rows() const noexcept { return index_.size(); }
    std::size_t cols() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    bool has_column(std::string_view name) const noexcept;
    /// Throws ValidationError naming the column when absent.
    std::span<const double> column(std::string_view name) const;
    std::span<const double> column(std::size_t i) const { return columns_.at(i); }

    /// Row subset in the given (increasing) order.
    Frame select_rows(std::span<const std::size_t> rows) const;
    /// Column subset in the given order.
    Frame select_columns(std::span<const std::string> names) const;

    /// Number of rows with no missing cell.
    std::size_t complete_rows() const noexcept;

private:
    std::vector<Date> index_;
    Frequency frequency_ = Frequency::daily;
    std::vector<std::string> names_;
    std::vector<std::vector<double>> columns_;
};

/// CSV with a `date` first column (ISO dates) and numeric columns; blank
/// cells are missing. Rows are sorted by date; a repeated date is a
/// ValidationError, as is any unparsable cell (message names row and column).
Frame parse_frame_csv(std::string_view text, Frequency frequency, std::string_view source = "<csv>");
Frame load_frame(const std::filesystem::path& path, Frequency frequency);

/// Inverse of parse_frame_csv; numbers at `significant_digits` (default 10).
std::string frame_csv(const Frame& frame, int significant_digits = 10);

}  // namespace mptone
