#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mptone/adf.hpp"
#include "mptone/ardl.hpp"
#include "mptone/config.hpp"
#include "mptone/corpus.hpp"
#include "mptone/dataset.hpp"
#include "mptone/diagnostics.hpp"
#include "mptone/frame.hpp"
#include "mptone/lexicon.hpp"
#include "mptone/ols.hpp"
#include "mptone/summary.hpp"

namespace mptone {

// ---- tone -----------------------------------------------------------------

struct ToneRun {
    std::vector<Document> documents;
    ToneSeries series;
    /// Unset when no document contains a sentiment word.
    std::optional<PolarityShares> shares;
    std::map<int, std::size_t> per_year;
};

Stoplist config_stoplist(const RunConfig& config);
/// Lists, ingests and scores the corpus. Throws ValidationError on an empty
/// corpus.
ToneRun run_tone(const RunConfig& config);
/// tone_series.csv, document_counts.csv, polarity_shares.txt,
/// documents_per_year.csv and the three charts.
void write_tone_outputs(const ToneRun& run, const std::filesystem::path& out);

// ---- inputs shared by adf and estimate ------------------------------------

struct MarketInputs {
    ToneSeries tone;
    Frame controls;
    Frame prices;
};

MarketInputs load_market(const RunConfig& config, ToneSeries tone);

// ---- adf ------------------------------------------------------------------

struct NamedSeries {
    std::string name;
    std::vector<double> values;
};

struct AdfRow {
    std::string variable;
    std::size_t observations = 0;
    std::optional<AdfResult> result;
    /// Set instead of `result` when the test could not run.
    std::string error;
};

/// One row per series. The lag bound is `max_lag` when given, else the
/// Schwert rule, reduced where needed so that short series still qualify.
/// A series the test rejects (constant, too short) gets an error row.
std::vector<AdfRow> adf_table(std::span<const NamedSeries> series, AdfTrend trend, std::optional<int> max_lag);

/// Event returns at the configured horizon, defined tones, then each
/// configured control over its full monthly history.
std::vector<NamedSeries> adf_series(const MarketInputs& inputs, const RunConfig& config);

std::string adf_text(const std::vector<AdfRow>& rows, AdfTrend trend);
std::string adf_csv(const std::vector<AdfRow>& rows);

// ---- estimate -------------------------------------------------------------

struct ModelVariant {
    std::string key;
    std::string title;
    LagSpec spec;
    RegressionResult fit;
    std::size_t dropped = 0;
};

struct HorizonComparison {
    int horizon = 0;
    ModelVariant without_controls;
    ModelVariant with_controls;
};

struct EstimateRun {
    std::size_t events = 0;
    std::size_t undefined_tone = 0;
    /// Event-level levels of every configured variable.
    std::vector<ColumnSummary> summary;
    ModelVariant baseline;
    ModelVariant lagged_dependent;
    ModelVariant with_controls;
    ModelVariant ardl;
    SearchResult search;
    /// Common sample of the lag search.
    Frame ardl_data;
    DiagnosticsReport diagnostics;
    /// Configured Ljung-Box lags not below n/2, left out of the table.
    std::vector<int> skipped_lb_lags;
    std::vector<HorizonComparison> horizons;
};

/// The three base OLS variants, the ARDL search and fit, diagnostics on the
/// ARDL residuals, and the horizon comparison. Throws ValidationError naming
/// the offending variable when the data cannot be assembled, and when the
/// lag-search sample has fewer than k + 5 rows.
EstimateRun run_estimate(const MarketInputs& inputs, const RunConfig& config);

std::string estimate_text(const EstimateRun& run, const RunConfig& config);
void write_estimate_outputs(const EstimateRun& run, const RunConfig& config, const std::filesystem::path& out);

// ---- report ---------------------------------------------------------------

struct FullRun {
    ToneRun tone;
    std::vector<AdfRow> adf;
    EstimateRun estimate;
};

FullRun run_all(const RunConfig& config);
std::string report_markdown(const FullRun& run, const RunConfig& config);
/// Every artifact of the tone, adf and estimate steps plus report.md and
/// run_metadata.txt.
void write_report(const FullRun& run, const RunConfig& config, const std::filesystem::path& out);

}  // namespace mptone
