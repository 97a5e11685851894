#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mptone::io {

/// Whole file as bytes. Throws IoError naming the path.
std::string read_file(const std::filesystem::path& path);

/// Writes atomically enough for our purposes (truncate + write). Creates
/// parent directories. Throws IoError.
void write_file(const std::filesystem::path& path, std::string_view contents);

/// Offset of the first byte that breaks UTF-8 well-formedness, or nullopt.
std::optional<std::size_t> first_invalid_utf8(std::string_view bytes) noexcept;

/// Splits on `\n`, dropping a trailing `\r` from each line.
std::vector<std::string_view> split_lines(std::string_view text);

/// Comma split with surrounding whitespace trimmed. No quoting support:
/// none of our formats need embedded commas.
std::vector<std::string_view> split_csv(std::string_view line);

std::string_view trim(std::string_view s) noexcept;

/// Strict decimal parse of the whole cell; nullopt on any trailing garbage
/// or non-finite result.
std::optional<double> parse_double(std::string_view cell) noexcept;

/// `%.{digits}g` rendering; NaN renders as the empty string.
std::string format_number(double v, int significant_digits);

}  // namespace mptone::io
