#include "mptone/pipeline.hpp"

#include <algorithm>
#include <tuple>

#include <fmt/format.h>

#include "mptone/error.hpp"
#include "mptone/io.hpp"
#include "mptone/mackinnon.hpp"
#include "mptone/render.hpp"
#include "mptone/returns.hpp"

namespace mptone {

namespace fs = std::filesystem;
using render::cell;
using render::full;

// ---- tone -----------------------------------------------------------------

Stoplist config_stoplist(const RunConfig& config) {
    return load_stoplist(config.stopwords.value_or(data_dir() / "stopwords" / "english_v1.txt"));
}

ToneRun run_tone(const RunConfig& config) {
    const auto entries = list_corpus(config.documents_dir, config.manifest);
    const Stoplist stop = config_stoplist(config);
    const Lexicon lexicon = load_lexicon(config.lexicon_positive, config.lexicon_negative);

    ToneRun run;
    run.documents = ingest_corpus(entries, stop);
    run.series = score_corpus(run.documents, lexicon);
    run.per_year = documents_per_year(run.documents);
    std::vector<SentimentCounts> counts;
    for (const auto& d : run.documents) counts.push_back(*d.counts);
    try {
        run.shares = corpus_polarity_shares(counts);
    } catch (const ValidationError&) {
        run.shares.reset();
    }
    return run;
}

void write_tone_outputs(const ToneRun& run, const fs::path& out) {
    io::write_file(out / "tone_series.csv", tone_series_csv(run.series));

    std::vector<const Document*> docs;
    for (const auto& d : run.documents) docs.push_back(&d);
    std::sort(docs.begin(), docs.end(), [](const Document* a, const Document* b) {
        return std::tie(a->publish_date, a->id) < std::tie(b->publish_date, b->id);
    });
    std::string counts = "id,date,positive,negative,total_tokens,tone,defined\n";
    for (const Document* d : docs) {
        const ToneScore t = tone(*d->counts);
        counts += fmt::format("{},{},{},{},{},{},{}\n", d->id, d->publish_date.iso(), d->counts->positive,
                              d->counts->negative, d->counts->total_tokens, full(t.value), t.defined ? 1 : 0);
    }
    io::write_file(out / "document_counts.csv", counts);

    if (run.shares)
        io::write_file(out / "polarity_shares.txt",
                       fmt::format("positive_share={:.4f}% negative_share={:.4f}%\n", run.shares->positive_pct,
                                   run.shares->negative_pct));
    else
        io::write_file(out / "polarity_shares.txt", "positive_share=NA negative_share=NA (no sentiment words)\n");

    std::string years = "year,documents\n";
    std::vector<render::Point> bars;
    for (const auto& [y, n] : run.per_year) {
        years += fmt::format("{},{}\n", y, n);
        bars.push_back({std::to_string(y), static_cast<double>(n)});
    }
    io::write_file(out / "documents_per_year.csv", years);
    io::write_file(out / "documents_per_year.svg", render::svg_bar_chart("Number of documents per year", "Documents", bars));

    std::vector<render::Point> line;
    for (const auto& e : run.series.entries) line.push_back({e.date.iso(), e.defined ? e.tone : kMissing});
    io::write_file(out / "tone.svg", render::svg_line_chart("Tone of policy communication", "Tone", line));

    if (run.shares)
        io::write_file(out / "polarity.svg",
                       render::svg_bar_chart("Share of positive and negative words", "Percent",
                                             {{"Positive", run.shares->positive_pct},
                                              {"Negative", run.shares->negative_pct}}));
}

// ---- inputs ---------------------------------------------------------------

MarketInputs load_market(const RunConfig& config, ToneSeries tone) {
    MarketInputs in;
    in.tone = std::move(tone);
    in.prices = load_frame(config.prices, Frequency::daily);
    in.controls = load_frame(config.controls, Frequency::monthly);
    return in;
}

// ---- adf ------------------------------------------------------------------

std::vector<AdfRow> adf_table(std::span<const NamedSeries> series, AdfTrend trend, std::optional<int> max_lag) {
    std::vector<AdfRow> rows;
    for (const auto& s : series) {
        AdfRow row;
        row.variable = s.name;
        row.observations = s.values.size();
        try {
            int bound = 0;
            if (max_lag) {
                bound = *max_lag;
            } else {
                bound = schwert_max_lag(s.values.size());
                const auto room = static_cast<long>(s.values.size()) - 11;
                if (room < 0) throw ValidationError(fmt::format("ADF needs at least 11 observations, got {}", s.values.size()));
                bound = static_cast<int>(std::min<long>(bound, room));
            }
            row.result = adf_test(s.values, bound, trend);
        } catch (const Error& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<NamedSeries> adf_series(const MarketInputs& in, const RunConfig& config) {
    std::vector<NamedSeries> out;
    const PriceSeries px(in.prices);
    NamedSeries ret{"returns", {}};
    NamedSeries tn{"tone", {}};
    for (const auto& e : in.tone.entries) {
        if (!e.defined) continue;
        tn.values.push_back(e.tone);
        try {
            ret.values.push_back(px.cumulative_return(e.date, config.horizon).value);
        } catch (const RangeError&) {
        }
    }
    out.push_back(std::move(ret));
    out.push_back(std::move(tn));
    for (const auto& name : config.control_names()) {
        NamedSeries s{name, {}};
        for (double v : in.controls.column(name))
            if (!is_missing(v)) s.values.push_back(v);
        out.push_back(std::move(s));
    }
    return out;
}

std::string adf_text(const std::vector<AdfRow>& rows, AdfTrend trend) {
    std::string out = fmt::format("Augmented Dickey-Fuller unit-root tests (deterministics: {})\n\n", to_string(trend));
    render::TextTable t({"Variable", "Obs", "Lag", "t-Statistic", "Prob.", "1% c.v.", "5% c.v.", "10% c.v."});
    std::string notes;
    for (const auto& r : rows) {
        if (r.result) {
            const auto& a = *r.result;
            t.add_row({r.variable, std::to_string(r.observations), std::to_string(a.lag), cell(a.statistic),
                       cell(a.p_value), cell(a.critical.pct1), cell(a.critical.pct5), cell(a.critical.pct10)});
        } else {
            t.add_row({r.variable, std::to_string(r.observations), "-", "NA", "NA", "NA", "NA", "NA"});
            notes += fmt::format("  {}: {}\n", r.variable, r.error);
        }
    }
    out += t.str();
    out += fmt::format("MacKinnon response surfaces, table {}.\n", mackinnon::kTableVersion);
    if (!notes.empty()) out += "Not tested:\n" + notes;
    return out;
}

std::string adf_csv(const std::vector<AdfRow>& rows) {
    std::string out = "variable,observations,trend,lag,statistic,p_value,cv_1pct,cv_5pct,cv_10pct,error\n";
    for (const auto& r : rows) {
        if (r.result) {
            const auto& a = *r.result;
            out += fmt::format("{},{},{},{},{},{},{},{},{},\n", r.variable, r.observations, to_string(a.trend), a.lag,
                               full(a.statistic), full(a.p_value), full(a.critical.pct1), full(a.critical.pct5),
                               full(a.critical.pct10));
        } else {
            std::string msg = r.error;
            std::replace(msg.begin(), msg.end(), ',', ';');
            out += fmt::format("{},{},,,,,,,,{}\n", r.variable, r.observations, msg);
        }
    }
    return out;
}

// ---- estimate -------------------------------------------------------------

namespace {

LagSpec spec_of(const std::string& dep, int dep_order, int tone_order, const std::vector<std::string>& controls,
                int control_order) {
    std::vector<LagTerm> terms{{dep, dep_order}, {"tone", tone_order}};
    for (const auto& c : controls) terms.push_back({c, control_order});
    return LagSpec(std::move(terms));
}

ModelVariant fit_variant(const MarketInputs& in, std::string key, std::string title, const LagSpec& spec, int horizon) {
    const EventDataset ds = align_event_dataset(in.tone, in.controls, in.prices, spec, horizon);
    const auto cols = ardl_regressors(spec);
    const Design design = make_design(ds.data, cols, true);
    const std::string dep = horizon == 1 ? spec.dependent().name : fmt::format("{}_{}", spec.dependent().name, horizon);
    ModelVariant v{std::move(key), std::move(title), spec,
                   ols(column_vector(ds.data, spec.dependent().name), design, dep), ds.dropped};
    return v;
}

std::string lag_vector(const LagSpec& s) {
    std::string out = "(";
    const auto o = s.orders();
    for (std::size_t i = 0; i < o.size(); ++i) out += (i ? "," : "") + std::to_string(o[i]);
    return out + ")";
}

std::string bracket(double se) { return "[" + cell(se) + "]"; }

}  // namespace

EstimateRun run_estimate(const MarketInputs& in, const RunConfig& config) {
    const LagSpec& ml = config.max_lags;
    const std::string dep = ml.dependent().name;
    const int p = ml.dependent().order;
    const auto controls = config.control_names();
    const int h = config.horizon;

    EstimateRun run;
    {
        const EventDataset levels =
            align_event_dataset(in.tone, in.controls, in.prices, spec_of(dep, 0, 0, controls, 0), h);
        run.summary = summary_stats(levels.data);
        run.events = levels.events;
        run.undefined_tone = levels.undefined_tone;
    }
    run.baseline = fit_variant(in, "baseline", "Simple OLS", spec_of(dep, 0, 0, {}, 0), h);
    run.lagged_dependent =
        fit_variant(in, "lagged_dependent", "OLS with lagged values of the dependent variable", spec_of(dep, p, 0, {}, 0), h);
    run.with_controls = fit_variant(in, "with_controls",
                                    "OLS with lagged values of the dependent variable and control variables",
                                    spec_of(dep, p, 0, controls, 0), h);

    const EventDataset common = align_event_dataset(in.tone, in.controls, in.prices, ml, h);
    const std::size_t need = ml.coefficient_count() + 5;
    if (common.data.rows() < need)
        throw ValidationError(fmt::format("lag search sample has {} rows; {} needs at least {}", common.data.rows(),
                                          ml.to_string(), need));
    run.ardl_data = common.data;
    run.search = ardl_search(common.data, ml, SearchOptions{config.top_k, config.grid_cap});
    const LagSpec best = run.search.ranked.front().spec;
    run.ardl.key = "ardl";
    run.ardl.title = fmt::format("ARDL{} selected by AIC", lag_vector(best));
    run.ardl.spec = best;
    run.ardl.fit = ardl_fit(common.data, best);
    run.ardl.dropped = common.dropped;

    const Design design = make_design(common.data, ardl_regressors(best), true);
    std::vector<int> lb;
    for (int m : config.ljung_box_lags) {
        if (2 * static_cast<std::size_t>(m) < run.ardl.fit.n)
            lb.push_back(m);
        else
            run.skipped_lb_lags.push_back(m);
    }
    run.diagnostics = diagnose(run.ardl.fit, design, lb);

    for (int n : config.compare_horizons) {
        HorizonComparison c;
        c.horizon = n;
        c.without_controls = fit_variant(in, fmt::format("horizon{}_without", n), fmt::format("n = {} without control variables", n),
                                         spec_of(dep, 0, 0, {}, 0), n);
        c.with_controls = fit_variant(in, fmt::format("horizon{}_with", n), fmt::format("n = {} with control variables", n),
                                      spec_of(dep, 0, 0, controls, 0), n);
        run.horizons.push_back(std::move(c));
    }
    return run;
}

namespace {

std::string summary_text(const std::vector<ColumnSummary>& s) {
    render::TextTable t({"Variable", "Obs", "Mean", "Std. Dev.", "Min", "Max"});
    for (const auto& c : s)
        t.add_row({c.name, std::to_string(c.observations), cell(c.mean), cell(c.std_dev), cell(c.min), cell(c.max)});
    return "Summary statistics (event observations)\n\n" + t.str();
}

std::string horizon_text(const EstimateRun& run, const RunConfig& config) {
    render::TextTable t({"Day", "b0", "Tone", "R-squared", "Obs.", "|", "b0", "Tone", "R-squared", "Obs."});
    auto coef = [&](const RegressionResult& r, std::string_view name) {
        const auto i = static_cast<Eigen::Index>(r.require(name));
        return std::pair{cell(r.coefficients(i)) + render::stars(r.p_values(i), config.significance),
                         bracket(r.std_errors(i))};
    };
    for (const auto& c : run.horizons) {
        const auto& a = c.without_controls.fit;
        const auto& b = c.with_controls.fit;
        const auto [a0, a0se] = coef(a, "C");
        const auto [at, atse] = coef(a, "tone");
        const auto [b0, b0se] = coef(b, "C");
        const auto [bt, btse] = coef(b, "tone");
        t.add_row({fmt::format("n={}", c.horizon), a0, at, cell(a.r_squared), std::to_string(a.n), "|", b0, bt,
                   cell(b.r_squared), std::to_string(b.n)});
        t.add_row({"", a0se, atse, "", "", "|", b0se, btse, "", ""});
    }
    return "Tone and cumulative returns over n sessions (left: without controls, right: with controls)\n\n" + t.str() +
           "Standard errors in brackets.\n";
}

std::string bpg_text(const BpgResult& b) {
    render::TextTable t({"Test statistic", "Value", "Prob."});
    t.add_row({fmt::format("F-statistic F({},{})", b.df, b.df_resid), cell(b.f_stat), cell(b.f_p_value)});
    t.add_row({fmt::format("Obs*R-squared Chi-Sq({})", b.df), cell(b.obs_r_squared), cell(b.obs_r_squared_p)});
    t.add_row({fmt::format("Scaled explained SS Chi-Sq({})", b.df), cell(b.scaled_ess), cell(b.scaled_ess_p)});
    return "Heteroskedasticity test: Breusch-Pagan-Godfrey\n\n" + t.str();
}

std::string lb_text(const EstimateRun& run) {
    render::TextTable t({"Lag", "Q-Stat", "df", "Prob."});
    for (const auto& r : run.diagnostics.ljung_box)
        t.add_row({std::to_string(r.lag), cell(r.q), std::to_string(r.df), cell(r.p_value)});
    std::string out = "Ljung-Box Q test on ARDL residuals\n\n" + t.str();
    if (!run.skipped_lb_lags.empty()) {
        out += "Lags not below n/2, omitted:";
        for (int m : run.skipped_lb_lags) out += fmt::format(" {}", m);
        out += "\n";
    }
    return out;
}

std::string topk_text(const EstimateRun& run) {
    render::TextTable t({"Rank", "Lags", "AIC", "k"});
    for (std::size_t i = 0; i < run.search.ranked.size(); ++i) {
        const auto& m = run.search.ranked[i];
        t.add_row({std::to_string(i + 1), lag_vector(m.spec), fmt::format("{:.6f}", m.aic), std::to_string(m.coefficients)});
    }
    return fmt::format("Top {} models by AIC ({} candidates, {} not estimable, common sample {} rows)\nLag order: {}\n\n",
                       run.search.ranked.size(), run.search.candidates, run.search.skipped, run.search.observations,
                       run.ardl.spec.to_string()) +
           t.str();
}

std::string sample_text(const EstimateRun& run) {
    std::string out = fmt::format("Publication events: {}; undefined tone (excluded): {}\n", run.events, run.undefined_tone);
    for (const ModelVariant* v : {&run.baseline, &run.lagged_dependent, &run.with_controls, &run.ardl})
        out += fmt::format("Rows dropped for {}: {}\n", v->key, v->dropped);
    for (const auto& c : run.horizons)
        out += fmt::format("Rows dropped for n = {}: {} without controls, {} with controls\n", c.horizon,
                           c.without_controls.dropped, c.with_controls.dropped);
    return out;
}

const std::string kSep = "\n" + std::string(78, '=') + "\n\n";

void model_rows(std::string& out, const ModelVariant& v) {
    const auto& r = v.fit;
    for (std::size_t i = 0; i < r.names.size(); ++i) {
        const auto j = static_cast<Eigen::Index>(i);
        out += fmt::format("{},{},{},{},{},{}\n", v.key, r.names[i], full(r.coefficients(j)), full(r.std_errors(j)),
                           full(r.t_stats(j)), full(r.p_values(j)));
    }
}

void stat_row(std::string& out, const ModelVariant& v) {
    const auto& r = v.fit;
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", v.key, r.dependent, v.spec.to_string(), r.n, r.k,
                       full(r.r_squared), full(r.adj_r_squared), full(r.f_stat), full(r.f_p_value),
                       full(r.durbin_watson), full(r.log_likelihood), full(r.aic), full(r.mean_dependent),
                       full(r.sd_dependent));
}

}  // namespace

std::string estimate_text(const EstimateRun& run, const RunConfig& config) {
    const auto& lv = config.significance;
    std::string out = sample_text(run);
    out += kSep + summary_text(run.summary);
    out += kSep + render::regression_table(run.baseline.title, run.baseline.fit, lv);
    out += kSep + render::regression_table(run.lagged_dependent.title, run.lagged_dependent.fit, lv);
    out += kSep + render::regression_table(run.with_controls.title, run.with_controls.fit, lv);
    out += kSep + render::regression_table(run.ardl.title, run.ardl.fit, lv);
    out += kSep + topk_text(run);
    out += kSep + horizon_text(run, config);
    out += kSep + bpg_text(run.diagnostics.bpg);
    out += kSep + lb_text(run);
    return out;
}

void write_estimate_outputs(const EstimateRun& run, const RunConfig& config, const fs::path& out) {
    io::write_file(out / "estimate.txt", estimate_text(run, config));

    std::string s = "variable,observations,mean,std_dev,min,max\n";
    for (const auto& c : run.summary)
        s += fmt::format("{},{},{},{},{},{}\n", c.name, c.observations, full(c.mean), full(c.std_dev), full(c.min),
                         full(c.max));
    io::write_file(out / "summary_stats.csv", s);

    std::string models = "model,variable,coefficient,std_error,t_stat,p_value\n";
    std::string stats = "model,dependent,spec,n,k,r_squared,adj_r_squared,f_stat,f_p_value,durbin_watson,log_likelihood,aic,mean_dependent,sd_dependent\n";
    std::vector<const ModelVariant*> all{&run.baseline, &run.lagged_dependent, &run.with_controls, &run.ardl};
    for (const auto& c : run.horizons) {
        all.push_back(&c.without_controls);
        all.push_back(&c.with_controls);
    }
    for (const ModelVariant* v : all) {
        model_rows(models, *v);
        stat_row(stats, *v);
    }
    io::write_file(out / "models.csv", models);
    io::write_file(out / "model_stats.csv", stats);

    std::string hz = "horizon,controls,intercept,intercept_se,tone,tone_se,tone_p_value,r_squared,observations\n";
    for (const auto& c : run.horizons) {
        for (const auto* v : {&c.without_controls, &c.with_controls}) {
            const auto& r = v->fit;
            const auto i0 = static_cast<Eigen::Index>(r.require("C"));
            const auto it = static_cast<Eigen::Index>(r.require("tone"));
            hz += fmt::format("{},{},{},{},{},{},{},{},{}\n", c.horizon, v == &c.with_controls ? 1 : 0,
                              full(r.coefficients(i0)), full(r.std_errors(i0)), full(r.coefficients(it)),
                              full(r.std_errors(it)), full(r.p_values(it)), full(r.r_squared), r.n);
        }
    }
    io::write_file(out / "horizons.csv", hz);

    const auto& b = run.diagnostics.bpg;
    io::write_file(out / "bpg.csv", fmt::format("statistic,value,df,p_value\nf_stat,{},{},{}\nobs_r_squared,{},{},{}\n"
                                                "scaled_explained_ss,{},{},{}\n",
                                                full(b.f_stat), b.df, full(b.f_p_value), full(b.obs_r_squared), b.df,
                                                full(b.obs_r_squared_p), full(b.scaled_ess), b.df, full(b.scaled_ess_p)));
    std::string lb = "lag,q,df,p_value\n";
    for (const auto& r : run.diagnostics.ljung_box) lb += fmt::format("{},{},{},{}\n", r.lag, full(r.q), r.df, full(r.p_value));
    io::write_file(out / "ljung_box.csv", lb);

    std::string top = "rank,spec,aic,coefficients\n";
    std::vector<render::Point> pts;
    for (std::size_t i = 0; i < run.search.ranked.size(); ++i) {
        const auto& m = run.search.ranked[i];
        top += fmt::format("{},{},{},{}\n", i + 1, m.spec.to_string(), full(m.aic), m.coefficients);
        pts.push_back({lag_vector(m.spec), m.aic});
    }
    io::write_file(out / "aic_top.csv", top);
    io::write_file(out / "aic_top.svg",
                   render::svg_scatter_line(fmt::format("Akaike information criteria (top {} models)", pts.size()), "AIC", pts));
    io::write_file(out / "ardl_dataset.csv", frame_csv(run.ardl_data));
}

// ---- report ---------------------------------------------------------------

FullRun run_all(const RunConfig& config) {
    FullRun r;
    r.tone = run_tone(config);
    const MarketInputs in = load_market(config, r.tone.series);
    const auto series = adf_series(in, config);
    r.adf = adf_table(series, config.adf_trend, config.adf_max_lag);
    r.estimate = run_estimate(in, config);
    return r;
}

std::string report_markdown(const FullRun& run, const RunConfig& config) {
    const auto& e = run.estimate;
    const auto& lv = config.significance;
    auto block = [](std::string_view heading, const std::string& body) {
        return fmt::format("## {}\n\n```\n{}```\n\n", heading, body);
    };
    std::string md = "# Policy communication tone and stock returns\n\n";
    md += fmt::format("- tool version: {}\n- config hash: {}\n- ADF table: {}\n- documents: {}\n- publication dates: {}\n",
                      kVersion, config_hash_hex(config), mackinnon::kTableVersion, run.tone.documents.size(),
                      run.tone.series.entries.size());
    if (run.tone.shares)
        md += fmt::format("- positive words: {:.2f}%, negative words: {:.2f}%\n", run.tone.shares->positive_pct,
                          run.tone.shares->negative_pct);
    md += fmt::format("- lag search: {} over {} candidates\n\n", config.max_lags.to_string(), e.search.candidates);
    md += block("Sample", sample_text(e));
    md += block("Summary statistics", summary_text(e.summary));
    md += block("Unit-root tests", adf_text(run.adf, config.adf_trend));
    md += block("Main regression", render::regression_table(e.ardl.title, e.ardl.fit, lv));
    md += block("Lag selection", topk_text(e));
    md += block("Event-horizon regressions", horizon_text(e, config));
    md += block("Heteroskedasticity", bpg_text(e.diagnostics.bpg));
    md += block("Serial correlation", lb_text(e));
    md += block("Base models",
                render::regression_table(e.baseline.title, e.baseline.fit, lv) + "\n" +
                    render::regression_table(e.lagged_dependent.title, e.lagged_dependent.fit, lv) + "\n" +
                    render::regression_table(e.with_controls.title, e.with_controls.fit, lv));
    std::string hz;
    for (const auto& c : e.horizons)
        hz += render::regression_table(c.without_controls.title, c.without_controls.fit, lv) + "\n" +
              render::regression_table(c.with_controls.title, c.with_controls.fit, lv) + "\n";
    if (!hz.empty()) md += block("Event-horizon regressions, full output", hz);
    md += "Charts: tone.svg, documents_per_year.svg, polarity.svg, aic_top.svg. "
          "Machine-readable tables: *.csv in this directory.\n";
    return md;
}

void write_report(const FullRun& run, const RunConfig& config, const fs::path& out) {
    write_tone_outputs(run.tone, out);
    io::write_file(out / "adf.txt", adf_text(run.adf, config.adf_trend));
    io::write_file(out / "adf.csv", adf_csv(run.adf));
    write_estimate_outputs(run.estimate, config, out);
    io::write_file(out / "report.md", report_markdown(run, config));
    io::write_file(out / "run_metadata.txt",
                   fmt::format("version={}\nconfig_hash={}\nmackinnon_table={}\n{}", kVersion, config_hash_hex(config),
                               mackinnon::kTableVersion, canonical_config(config)));
}

}  // namespace mptone
