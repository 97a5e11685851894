#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <string>

#include "mptone/config.hpp"
#include "mptone/error.hpp"
#include "mptone/io.hpp"
#include "mptone/pipeline.hpp"
#include "mptone/random.hpp"
#include "support/test_support.hpp"

namespace fs = std::filesystem;
using namespace mptone;
using testing_support::data_path;
using testing_support::TempDir;

namespace {

RunConfig fixture_corpus_config(const fs::path& docs) {
    RunConfig c = load_config(data_path("synthetic/mptone.conf"));
    c.documents_dir = docs;
    return c;
}

const RunConfig& synthetic_config() {
    static const RunConfig c = load_config(data_path("synthetic/mptone.conf"));
    return c;
}

std::map<std::string, std::string> tree(const fs::path& root) {
    std::map<std::string, std::string> out;
    for (const auto& e : fs::recursive_directory_iterator(root))
        if (e.is_regular_file()) out[fs::relative(e.path(), root).generic_string()] = io::read_file(e.path());
    return out;
}

}  // namespace

TEST(CmdTone, FixtureCorpus) {
    TempDir out;
    const RunConfig c = fixture_corpus_config(data_path("fixtures/corpus"));
    const ToneRun run = run_tone(c);
    write_tone_outputs(run, out.path());
    EXPECT_EQ(io::read_file(out.path() / "tone_series.csv"),
              "date,tone,defined\n2016-01-30,-0.20000000000000001,1\n2016-03-26,0.59999999999999998,1\n2017-01-28,-1,1\n");
    for (const char* f : {"document_counts.csv", "polarity_shares.txt", "documents_per_year.csv", "tone.svg",
                          "documents_per_year.svg", "polarity.svg"})
        EXPECT_TRUE(fs::exists(out.path() / f)) << f;

    TempDir again;
    write_tone_outputs(run_tone(c), again.path());
    EXPECT_EQ(tree(out.path()), tree(again.path()));
}

TEST(CmdTone, SingleEmptyDocument) {
    TempDir docs;
    docs.write("2016-05-05_empty.txt", "");
    TempDir out;
    const ToneRun run = run_tone(fixture_corpus_config(docs.path()));
    EXPECT_FALSE(run.shares.has_value());
    write_tone_outputs(run, out.path());
    EXPECT_EQ(io::read_file(out.path() / "tone_series.csv"), "date,tone,defined\n2016-05-05,0,0\n");
}

TEST(CmdTone, EmptyCorpusIsAnError) {
    TempDir docs;
    EXPECT_THROW(run_tone(fixture_corpus_config(docs.path())), ValidationError);
}

TEST(CmdAdf, StationaryAndRandomWalkColumns) {
    Rng rng(derive_seed(20240101, 484));
    NamedSeries stationary{"stationary", {}}, walk{"walk", {}}, flat{"flat", std::vector<double>(300, 1.0)};
    double a = 0.0, w = 0.0;
    for (int t = 0; t < 300; ++t) {
        stationary.values.push_back(a = 0.3 * a + rng.normal());
        walk.values.push_back(w += rng.normal());
    }
    const std::vector<NamedSeries> series{stationary, walk, flat};
    const auto rows = adf_table(series, AdfTrend::constant, std::nullopt);
    ASSERT_EQ(rows.size(), 3u);
    ASSERT_TRUE(rows[0].result && rows[1].result);
    EXPECT_LT(rows[0].result->p_value, 0.05);
    EXPECT_GE(rows[1].result->p_value, 0.05);
    EXPECT_FALSE(rows[2].result.has_value());
    EXPECT_FALSE(rows[2].error.empty());
    EXPECT_NE(adf_text(rows, AdfTrend::constant).find("flat"), std::string::npos);

    const std::vector<NamedSeries> one{stationary};
    EXPECT_EQ(adf_table(one, AdfTrend::constant, 3).size(), 1u);
}

TEST(CmdAdf, SyntheticInputsCoverEveryVariable) {
    const RunConfig& c = synthetic_config();
    const MarketInputs in = load_market(c, run_tone(c).series);
    const auto series = adf_series(in, c);
    ASSERT_EQ(series.size(), 7u);
    EXPECT_EQ(series[0].name, "returns");
    EXPECT_EQ(series[1].name, "tone");
    for (const auto& row : adf_table(series, c.adf_trend, c.adf_max_lag)) EXPECT_TRUE(row.result) << row.variable;
}

TEST(CmdEstimate, RecoversPlantedToneOnBundledData) {
    const RunConfig& c = synthetic_config();
    const EstimateRun run = run_estimate(load_market(c, run_tone(c).series), c);
    const auto& f = run.ardl.fit;
    const auto [lo, hi] = confidence_interval(f, f.require("tone"), 0.999);
    EXPECT_LT(lo, 0.03);
    EXPECT_GT(hi, 0.03);
    EXPECT_EQ(run.events, 56u);
    EXPECT_EQ(run.search.candidates, ardl_grid_size(c.max_lags));
    EXPECT_EQ(run.search.observations, 52u);
    ASSERT_EQ(run.horizons.size(), 2u);
    EXPECT_EQ(run.horizons[0].horizon, 2);
    EXPECT_EQ(run.horizons[1].horizon, 3);
    EXPECT_EQ(run.baseline.fit.names, (std::vector<std::string>{"C", "tone"}));
    EXPECT_EQ(run.with_controls.fit.k, 1u + 4 + 1 + 5);
    for (const auto& row : run.diagnostics.ljung_box) {
        EXPECT_GE(row.p_value, 0.0);
        EXPECT_LE(row.p_value, 1.0);
    }
}

TEST(CmdEstimate, GridCapAndAssemblyErrors) {
    RunConfig c = synthetic_config();
    const MarketInputs in = load_market(c, run_tone(c).series);
    c.grid_cap = 10;
    EXPECT_THROW(run_estimate(in, c), ValidationError);
    c = synthetic_config();
    c.max_lags = LagSpec::parse("returns:1,tone:1,gdp:1");
    try {
        run_estimate(in, c);
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("gdp"), std::string::npos) << e.what();
    }
}

TEST(CmdReport, ContainsEveryTableKindAndIsIdempotent) {
    RunConfig c = synthetic_config();
    TempDir a, b;
    write_report(run_all(c), c, a.path());
    write_report(run_all(c), c, b.path());
    const auto ta = tree(a.path());
    EXPECT_EQ(ta, tree(b.path()));
    const std::string& md = ta.at("report.md");
    for (const char* heading : {"## Summary statistics", "## Unit-root tests", "## Main regression",
                                "## Event-horizon regressions", "## Heteroskedasticity", "## Serial correlation",
                                "## Lag selection"})
        EXPECT_NE(md.find(heading), std::string::npos) << heading;
    EXPECT_NE(md.find(config_hash_hex(c)), std::string::npos);
    EXPECT_NE(ta.at("run_metadata.txt").find("version=" + std::string(kVersion)), std::string::npos);
}
