#include "mptone/frame.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

#include "mptone/error.hpp"
#include "mptone/io.hpp"

namespace mptone {

std::string_view to_string(Frequency f) noexcept {
    switch (f) {
        case Frequency::daily: return "daily";
        case Frequency::monthly: return "monthly";
        case Frequency::event: return "event";
    }
    return "?";
}

Frame::Frame(std::vector<Date> index, Frequency frequency)
    : index_(std::move(index)), frequency_(frequency) {
    for (std::size_t i = 1; i < index_.size(); ++i)
        if (!(index_[i - 1] < index_[i]))
            throw ValidationError(fmt::format("frame index not strictly increasing at {} ({})", i, index_[i].iso()));
}

void Frame::add_column(std::string name, std::vector<double> values) {
    if (name.empty()) throw ValidationError("empty column name");
    if (has_column(name)) throw ValidationError(fmt::format("duplicate column '{}'", name));
    if (values.size() != index_.size())
        throw ValidationError(fmt::format("column '{}' has {} values for {} index rows", name, values.size(), index_.size()));
    names_.push_back(std::move(name));
    columns_.push_back(std::move(values));
}

bool Frame::has_column(std::string_view name) const noexcept {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::span<const double> Frame::column(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw ValidationError(fmt::format("missing column '{}'", name));
    return columns_[static_cast<std::size_t>(it - names_.begin())];
}

Frame Frame::select_rows(std::span<const std::size_t> rows) const {
    std::vector<Date> idx;
    idx.reserve(rows.size());
    for (auto r : rows) idx.push_back(index_.at(r));
    Frame out(std::move(idx), frequency_);
    for (std::size_t c = 0; c < names_.size(); ++c) {
        std::vector<double> v;
        v.reserve(rows.size());
        for (auto r : rows) v.push_back(columns_[c][r]);
        out.add_column(names_[c], std::move(v));
    }
    return out;
}

Frame Frame::select_columns(std::span<const std::string> names) const {
    Frame out(index_, frequency_);
    for (const auto& n : names) {
        auto col = column(n);
        out.add_column(n, std::vector<double>(col.begin(), col.end()));
    }
    return out;
}

std::size_t Frame::complete_rows() const noexcept {
    std::size_t count = 0;
    for (std::size_t r = 0; r < rows(); ++r) {
        bool ok = true;
        for (const auto& c : columns_)
            if (is_missing(c[r])) {
                ok = false;
                break;
            }
        count += ok;
    }
    return count;
}

Frame parse_frame_csv(std::string_view text, Frequency frequency, std::string_view source) {
    const auto lines = io::split_lines(text);
    std::size_t first = 0;
    while (first < lines.size() && io::trim(lines[first]).empty()) ++first;
    if (first == lines.size()) throw ValidationError(fmt::format("{}: empty CSV", source));

    const auto header = io::split_csv(lines[first]);
    if (header.empty() || header[0] != "date")
        throw ValidationError(fmt::format("{}: first column must be 'date'", source));
    const std::size_t ncols = header.size() - 1;

    struct Row {
        Date date;
        std::vector<double> values;
        std::size_t line;
    };
    std::vector<Row> rows;
    for (std::size_t li = first + 1; li < lines.size(); ++li) {
        if (io::trim(lines[li]).empty()) continue;
        const auto cells = io::split_csv(lines[li]);
        if (cells.size() != header.size())
            throw ValidationError(fmt::format("{}: row {} has {} cells, expected {}", source, li + 1, cells.size(), header.size()));
        Row row;
        row.line = li + 1;
        try {
            row.date = Date::parse(cells[0]);
        } catch (const ValidationError&) {
            throw ValidationError(fmt::format("{}: row {} column 'date': invalid date '{}'", source, li + 1, cells[0]));
        }
        row.values.resize(ncols, kMissing);
        for (std::size_t c = 0; c < ncols; ++c) {
            if (cells[c + 1].empty()) continue;
            const auto v = io::parse_double(cells[c + 1]);
            if (!v)
                throw ValidationError(fmt::format("{}: row {} column '{}': cannot parse '{}'", source, li + 1,
                                                  header[c + 1], cells[c + 1]));
            row.values[c] = *v;
        }
        rows.push_back(std::move(row));
    }
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.date < b.date; });
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].date == rows[i - 1].date)
            throw ValidationError(fmt::format("{}: duplicate date {} (rows {} and {})", source, rows[i].date.iso(),
                                              rows[i - 1].line, rows[i].line));

    std::vector<Date> index;
    index.reserve(rows.size());
    for (const auto& r : rows) index.push_back(r.date);
    Frame frame(std::move(index), frequency);
    for (std::size_t c = 0; c < ncols; ++c) {
        std::vector<double> col;
        col.reserve(rows.size());
        for (const auto& r : rows) col.push_back(r.values[c]);
        frame.add_column(std::string(header[c + 1]), std::move(col));
    }
    return frame;
}

Frame load_frame(const std::filesystem::path& path, Frequency frequency) {
    return parse_frame_csv(io::read_file(path), frequency, path.string());
}

std::string frame_csv(const Frame& frame, int significant_digits) {
    std::string out = "date";
    for (const auto& n : frame.names()) out += "," + n;
    out += '\n';
    for (std::size_t r = 0; r < frame.rows(); ++r) {
        out += frame.index()[r].iso();
        for (std::size_t c = 0; c < frame.cols(); ++c) {
            out += ',';
            out += io::format_number(frame.column(c)[r], significant_digits);
        }
        out += '\n';
    }
    return out;
}

}  // namespace mptone
