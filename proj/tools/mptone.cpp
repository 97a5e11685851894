// mptone: tone of policy documents and its effect on stock returns.
//
//   mptone tone|adf|estimate|report --config run.conf [--out DIR] [...]
//   mptone simulate --out DIR [--seed N] [--events N] [--trading-days N]
//
// Exit status: 0 success, 1 invalid input or arguments, 2 file I/O failure.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "mptone/config.hpp"
#include "mptone/error.hpp"
#include "mptone/io.hpp"
#include "mptone/pipeline.hpp"
#include "mptone/simulate.hpp"

namespace fs = std::filesystem;
using namespace mptone;

namespace {

struct Overrides {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<int> horizon;
    std::string max_lags;
    std::optional<std::size_t> top_k;
};

RunConfig resolve_config(const Overrides& o) {
    std::string path = o.config;
    if (path.empty())
        if (const char* env = std::getenv(kConfigEnv); env && *env) path = env;
    if (path.empty()) throw ValidationError(fmt::format("no config file: pass --config or set {}", kConfigEnv));
    RunConfig c = load_config(path);
    const fs::path cwd = fs::current_path();
    if (!o.out.empty()) set_config_value(c, "output_dir", o.out, cwd);
    if (o.seed) c.seed = *o.seed;
    if (o.horizon) c.horizon = *o.horizon;
    if (!o.max_lags.empty()) set_config_value(c, "max_lags", o.max_lags, cwd);
    if (o.top_k) c.top_k = *o.top_k;
    validate_config(c);
    return c;
}

int cmd_tone(const RunConfig& c) {
    const ToneRun run = run_tone(c);
    write_tone_outputs(run, c.output_dir);
    std::size_t defined = 0;
    for (const auto& e : run.series.entries) defined += e.defined ? 1 : 0;
    fmt::print("{} documents, {} dates ({} with a defined tone) -> {}\n", run.documents.size(),
               run.series.entries.size(), defined, c.output_dir.string());
    return 0;
}

int cmd_adf(const RunConfig& c) {
    const MarketInputs in = load_market(c, run_tone(c).series);
    const auto rows = adf_table(adf_series(in, c), c.adf_trend, c.adf_max_lag);
    const std::string text = adf_text(rows, c.adf_trend);
    io::write_file(c.output_dir / "adf.txt", text);
    io::write_file(c.output_dir / "adf.csv", adf_csv(rows));
    fmt::print("{}", text);
    return 0;
}

int cmd_estimate(const RunConfig& c) {
    const MarketInputs in = load_market(c, run_tone(c).series);
    const EstimateRun run = run_estimate(in, c);
    write_estimate_outputs(run, c, c.output_dir);
    const auto& f = run.ardl.fit;
    const auto i = static_cast<Eigen::Index>(f.require("tone"));
    fmt::print("{}: tone = {:.6f} (s.e. {:.6f}, p = {:.4g}), n = {} -> {}\n", run.ardl.title, f.coefficients(i),
               f.std_errors(i), f.p_values(i), f.n, c.output_dir.string());
    return 0;
}

int cmd_report(const RunConfig& c) {
    const FullRun run = run_all(c);
    write_report(run, c, c.output_dir);
    fmt::print("report written to {} (config {})\n", (c.output_dir / "report.md").string(), config_hash_hex(c));
    return 0;
}

struct SimulateArgs {
    std::string out;
    std::uint64_t seed = 20240101;
    std::size_t events = 56;
    std::size_t trading_days = 2000;
    double theta = 0.03;
    bool persistent = false;
    std::string lexicon_positive;
    std::string lexicon_negative;
    std::string stopwords;
};

int cmd_simulate(const SimulateArgs& a) {
    if (a.out.empty()) throw ValidationError("simulate needs --out DIR");
    const fs::path data = data_dir();
    const fs::path pos = a.lexicon_positive.empty() ? data / "lexicon" / "fixture_positive.txt" : fs::path(a.lexicon_positive);
    const fs::path neg = a.lexicon_negative.empty() ? data / "lexicon" / "fixture_negative.txt" : fs::path(a.lexicon_negative);
    const fs::path stop = a.stopwords.empty() ? data / "stopwords" / "english_v1.txt" : fs::path(a.stopwords);
    SimulationOptions opt;
    opt.seed = a.seed;
    opt.events = a.events;
    opt.trading_days = a.trading_days;
    opt.theta = a.theta;
    opt.persistent = a.persistent;
    const SyntheticMarket m = simulate_market(opt, load_lexicon(pos, neg), load_stoplist(stop));
    const fs::path out = fs::absolute(a.out).lexically_normal();
    write_synthetic(m, out);
    auto rel = [&](const fs::path& p) { return fs::absolute(p).lexically_normal().lexically_relative(out).generic_string(); };
    io::write_file(out / "mptone.conf",
                   fmt::format("# Generated by `mptone simulate --seed {}`.\n"
                               "documents_dir = corpus\nlexicon_positive = {}\nlexicon_negative = {}\nstopwords = {}\n"
                               "prices = prices.csv\ncontrols = controls.csv\noutput_dir = out\nseed = {}\n",
                               a.seed, rel(pos), rel(neg), rel(stop), a.seed));
    fmt::print("{} events, {} trading days, {} control months -> {}\n", m.events.size(), m.prices.rows(),
               m.controls.rows(), out.string());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tone of central-bank policy documents and stock returns"};
    app.require_subcommand(1);
    app.fallthrough();

    Overrides o;
    app.add_option("--config", o.config, fmt::format("Run configuration file (default: ${})", kConfigEnv));
    app.add_option("--out", o.out, "Output directory (overrides output_dir)");
    app.add_option("--seed", o.seed, "Seed (overrides seed)");
    app.add_option("--horizon", o.horizon, "Return horizon in sessions (overrides horizon)");
    app.add_option("--max-lags", o.max_lags, "Lag grid, e.g. returns:4,tone:3,cci:3 (overrides max_lags)");
    app.add_option("--top-k", o.top_k, "Models listed from the lag search (overrides top_k)");

    auto* tone = app.add_subcommand("tone", "Score the corpus and write the tone series");
    auto* adf = app.add_subcommand("adf", "Unit-root tests for returns, tone and controls");
    auto* estimate = app.add_subcommand("estimate", "Base OLS models, ARDL lag search, diagnostics, horizons");
    auto* report = app.add_subcommand("report", "Full pipeline and consolidated report");
    auto* simulate = app.add_subcommand("simulate", "Write a synthetic dataset with a planted tone effect");

    SimulateArgs s;
    simulate->add_option("--events", s.events, "Publication events")->capture_default_str();
    simulate->add_option("--trading-days", s.trading_days, "Trading sessions")->capture_default_str();
    simulate->add_option("--theta", s.theta, "Planted tone coefficient")->capture_default_str();
    simulate->add_flag("--persistent", s.persistent, "Keep the tone effect in multi-session returns");
    simulate->add_option("--lexicon-positive", s.lexicon_positive, "Positive word list (default: bundled fixture)");
    simulate->add_option("--lexicon-negative", s.lexicon_negative, "Negative word list (default: bundled fixture)");
    simulate->add_option("--stopwords", s.stopwords, "Stopword list (default: bundled english_v1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*simulate) {
            s.out = o.out;
            if (o.seed) s.seed = *o.seed;
            return cmd_simulate(s);
        }
        const RunConfig c = resolve_config(o);
        if (*tone) return cmd_tone(c);
        if (*adf) return cmd_adf(c);
        if (*estimate) return cmd_estimate(c);
        if (*report) return cmd_report(c);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
