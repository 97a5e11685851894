#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mptone/adf.hpp"
#include "mptone/dataset.hpp"

namespace mptone {

inline constexpr std::string_view kVersion = "0.3.1";
/// Environment variable naming the default config file.
inline constexpr const char* kConfigEnv = "MPTONE_CONFIG";

/// Everything a run depends on. Paths are absolute after loading.
struct RunConfig {
    std::filesystem::path documents_dir;
    std::optional<std::filesystem::path> manifest;
    std::filesystem::path lexicon_positive;
    std::filesystem::path lexicon_negative;
    /// Falls back to the bundled english_v1 list.
    std::optional<std::filesystem::path> stopwords;
    std::filesystem::path prices;
    std::filesystem::path controls;
    std::filesystem::path output_dir = "mptone-out";

    int horizon = 1;
    std::vector<int> compare_horizons{2, 3};
    /// Dependent first; the names `returns` and `tone` are reserved, every
    /// other term is a column of the controls file.
    LagSpec max_lags = LagSpec::parse("returns:4,tone:3,cci:3,cpi:4,ipi:2,kibor:3,epu:1");
    AdfTrend adf_trend = AdfTrend::constant;
    /// Schwert rule when unset.
    std::optional<int> adf_max_lag;
    std::vector<int> ljung_box_lags{1, 2, 3, 4, 5, 10, 24};
    /// Star thresholds, loosest first: one star below [0], two below [1],
    /// three below [2].
    std::array<double, 3> significance{0.10, 0.05, 0.01};
    std::size_t grid_cap = 100000;
    std::uint64_t seed = 20240101;
    std::size_t top_k = 20;

    /// Control variables named in max_lags, in spec order.
    std::vector<std::string> control_names() const;
};

/// Parses `key = value` lines (`#` comments, blank lines ignored). Relative
/// paths are resolved against `base_dir`. Unknown keys and malformed values
/// are ValidationErrors naming the line.
RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir);
RunConfig load_config(const std::filesystem::path& path);

/// Applies one setting with the same rules as the file parser.
void set_config_value(RunConfig& config, std::string_view key, std::string_view value,
                      const std::filesystem::path& base_dir);

/// Checks cross-field invariants (ValidationError) and that every input
/// path exists (IoError).
void validate_config(const RunConfig& config);

/// Sorted `key=value` lines covering every field.
std::string canonical_config(const RunConfig& config);
/// FNV-1a 64 of canonical_config.
std::uint64_t config_hash(const RunConfig& config);
std::string config_hash_hex(const RunConfig& config);

/// Bundled data directory (stopwords, tables, fixtures).
std::filesystem::path data_dir();

}  // namespace mptone
