#include "mptone/config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>

#include <fmt/format.h>

#include "mptone/error.hpp"
#include "mptone/io.hpp"

#ifndef MPTONE_DATA_DIR
#define MPTONE_DATA_DIR "data"
#endif

namespace mptone {

namespace fs = std::filesystem;

namespace {

template <class T>
T parse_integer(std::string_view key, std::string_view v) {
    T out{};
    const auto* end = v.data() + v.size();
    const auto [ptr, ec] = std::from_chars(v.data(), end, out);
    if (ec != std::errc{} || ptr != end || v.empty())
        throw ValidationError(fmt::format("config key '{}': '{}' is not a valid integer", key, v));
    return out;
}

std::vector<int> parse_int_list(std::string_view key, std::string_view v) {
    std::vector<int> out;
    if (io::trim(v).empty() || v == "none") return out;
    for (auto cell : io::split_csv(v)) out.push_back(parse_integer<int>(key, cell));
    return out;
}

double parse_real(std::string_view key, std::string_view v) {
    const auto d = io::parse_double(v);
    if (!d) throw ValidationError(fmt::format("config key '{}': '{}' is not a number", key, v));
    return *d;
}

fs::path resolve(const fs::path& base, std::string_view v) {
    fs::path p{std::string(v)};
    if (p.is_relative()) p = base / p;
    return p.lexically_normal();
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

void require_file(const fs::path& p, std::string_view key) {
    if (!fs::exists(p)) throw IoError(fmt::format("{} '{}' does not exist", key, p.string()));
}

}  // namespace

std::vector<std::string> RunConfig::control_names() const {
    std::vector<std::string> out;
    for (const auto& t : max_lags.exogenous())
        if (t.name != "tone") out.push_back(t.name);
    return out;
}

fs::path data_dir() {
    if (const char* env = std::getenv("MPTONE_DATA_DIR"); env && *env) return fs::path(env);
    return fs::path(MPTONE_DATA_DIR);
}

void set_config_value(RunConfig& c, std::string_view key, std::string_view value, const fs::path& base) {
    const std::string_view v = io::trim(value);
    if (key == "documents_dir") c.documents_dir = resolve(base, v);
    else if (key == "manifest") c.manifest = v.empty() ? std::nullopt : std::optional(resolve(base, v));
    else if (key == "lexicon_positive") c.lexicon_positive = resolve(base, v);
    else if (key == "lexicon_negative") c.lexicon_negative = resolve(base, v);
    else if (key == "stopwords") c.stopwords = v.empty() ? std::nullopt : std::optional(resolve(base, v));
    else if (key == "prices") c.prices = resolve(base, v);
    else if (key == "controls") c.controls = resolve(base, v);
    else if (key == "output_dir") c.output_dir = resolve(base, v);
    else if (key == "horizon") c.horizon = parse_integer<int>(key, v);
    else if (key == "compare_horizons") c.compare_horizons = parse_int_list(key, v);
    else if (key == "max_lags") c.max_lags = LagSpec::parse(v);
    else if (key == "adf_trend") c.adf_trend = parse_adf_trend(v);
    else if (key == "adf_max_lag") c.adf_max_lag = (v == "auto" || v.empty()) ? std::nullopt : std::optional(parse_integer<int>(key, v));
    else if (key == "ljung_box_lags") c.ljung_box_lags = parse_int_list(key, v);
    else if (key == "significance") {
        const auto cells = io::split_csv(v);
        if (cells.size() != 3) throw ValidationError("config key 'significance' needs three levels, e.g. 0.10,0.05,0.01");
        for (std::size_t i = 0; i < 3; ++i) c.significance[i] = parse_real(key, cells[i]);
    } else if (key == "grid_cap") c.grid_cap = parse_integer<std::size_t>(key, v);
    else if (key == "seed") c.seed = parse_integer<std::uint64_t>(key, v);
    else if (key == "top_k") c.top_k = parse_integer<std::size_t>(key, v);
    else throw ValidationError(fmt::format("unknown config key '{}'", key));
}

RunConfig parse_config(std::string_view text, const fs::path& base_dir) {
    RunConfig c;
    std::size_t line_no = 0;
    for (auto raw : io::split_lines(text)) {
        ++line_no;
        const auto line = io::trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ValidationError(fmt::format("config line {}: expected key = value", line_no));
        const auto key = io::trim(line.substr(0, eq));
        try {
            set_config_value(c, key, line.substr(eq + 1), base_dir);
        } catch (const ValidationError& e) {
            throw ValidationError(fmt::format("config line {}: {}", line_no, e.what()));
        }
    }
    return c;
}

RunConfig load_config(const fs::path& path) {
    const std::string text = io::read_file(path);
    return parse_config(text, fs::absolute(path).parent_path());
}

void validate_config(const RunConfig& c) {
    if (c.horizon < 1) throw ValidationError(fmt::format("horizon must be >= 1, got {}", c.horizon));
    for (int h : c.compare_horizons)
        if (h < 1) throw ValidationError(fmt::format("compare_horizons entries must be >= 1, got {}", h));
    if (c.max_lags.dependent().name != "returns")
        throw ValidationError("max_lags must start with the dependent variable 'returns'");
    const auto ex = c.max_lags.exogenous();
    if (std::none_of(ex.begin(), ex.end(), [](const LagTerm& t) { return t.name == "tone"; }))
        throw ValidationError("max_lags must include 'tone'");
    c.max_lags.require_ardl();
    if (c.adf_max_lag && *c.adf_max_lag < 0) throw ValidationError("adf_max_lag must be >= 0");
    for (int m : c.ljung_box_lags)
        if (m < 1) throw ValidationError(fmt::format("ljung_box_lags entries must be >= 1, got {}", m));
    const auto& s = c.significance;
    if (!(s[0] < 1.0 && s[0] > s[1] && s[1] > s[2] && s[2] > 0.0))
        throw ValidationError("significance levels must be strictly decreasing within (0, 1)");
    if (c.top_k < 1) throw ValidationError("top_k must be >= 1");
    if (c.grid_cap < 1) throw ValidationError("grid_cap must be >= 1");

    require_file(c.documents_dir, "documents_dir");
    if (c.manifest) require_file(*c.manifest, "manifest");
    require_file(c.lexicon_positive, "lexicon_positive");
    require_file(c.lexicon_negative, "lexicon_negative");
    if (c.stopwords) require_file(*c.stopwords, "stopwords");
    require_file(c.prices, "prices");
    require_file(c.controls, "controls");
}

// The output directory is deliberately left out: where results are written
// does not change them.
std::string canonical_config(const RunConfig& c) {
    std::map<std::string, std::string> kv;
    kv["documents_dir"] = c.documents_dir.generic_string();
    kv["manifest"] = c.manifest ? c.manifest->generic_string() : "";
    kv["lexicon_positive"] = c.lexicon_positive.generic_string();
    kv["lexicon_negative"] = c.lexicon_negative.generic_string();
    kv["stopwords"] = c.stopwords ? c.stopwords->generic_string() : "<bundled>";
    kv["prices"] = c.prices.generic_string();
    kv["controls"] = c.controls.generic_string();
    kv["horizon"] = std::to_string(c.horizon);
    kv["compare_horizons"] = join(c.compare_horizons);
    kv["max_lags"] = c.max_lags.to_string();
    kv["adf_trend"] = std::string(to_string(c.adf_trend));
    kv["adf_max_lag"] = c.adf_max_lag ? std::to_string(*c.adf_max_lag) : "auto";
    kv["ljung_box_lags"] = join(c.ljung_box_lags);
    kv["significance"] = fmt::format("{:.17g},{:.17g},{:.17g}", c.significance[0], c.significance[1], c.significance[2]);
    kv["grid_cap"] = std::to_string(c.grid_cap);
    kv["seed"] = std::to_string(c.seed);
    kv["top_k"] = std::to_string(c.top_k);
    std::string out;
    for (const auto& [k, v] : kv) out += k + "=" + v + "\n";
    return out;
}

std::uint64_t config_hash(const RunConfig& c) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : canonical_config(c)) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string config_hash_hex(const RunConfig& c) { return fmt::format("{:016x}", config_hash(c)); }

}  // namespace mptone
