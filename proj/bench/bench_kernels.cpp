// Serial reference vs OpenMP kernel, one pair per parallel kernel.
//   mptone_bench [--benchmark_filter=Ardl]   (OMP_NUM_THREADS sets the pool)

#include <benchmark/benchmark.h>

#include <filesystem>
#include <vector>

#include "mptone/ardl.hpp"
#include "mptone/corpus.hpp"
#include "mptone/dataset.hpp"
#include "mptone/random.hpp"
#include "mptone/reference.hpp"

using namespace mptone;
namespace fs = std::filesystem;

namespace {

const fs::path kData = MPTONE_BENCH_DATA_DIR;

struct CorpusFixture {
    Lexicon lexicon = load_lexicon(kData / "lexicon/fixture_positive.txt", kData / "lexicon/fixture_negative.txt");
    std::vector<Document> documents;
    CorpusFixture() {
        const Stoplist stop = load_stoplist(kData / "stopwords/english_v1.txt");
        const auto base = ingest_corpus(list_corpus(kData / "synthetic/corpus", std::nullopt), stop);
        // 20 copies of the 56 statements, so the per-document work dominates.
        for (int copy = 0; copy < 20; ++copy) documents.insert(documents.end(), base.begin(), base.end());
    }
};

const CorpusFixture& corpus() {
    static const CorpusFixture f;
    return f;
}

struct LagFixture {
    LagSpec grid = LagSpec::parse("y:4,a:4,b:4,c:3");
    Frame data;
    LagFixture() : data(build()) {}
    Frame build() const {
        Rng rng(20240101);
        const std::size_t n = 400;
        std::vector<Date> idx;
        std::vector<double> y(n), a(n), b(n), c(n);
        for (std::size_t t = 0; t < n; ++t) {
            idx.push_back(Date(2000, 1, 3).add_days(static_cast<std::int64_t>(t)));
            a[t] = rng.normal();
            b[t] = rng.normal();
            c[t] = rng.normal();
            y[t] = (t ? 0.4 * y[t - 1] : 0.0) + 0.5 * a[t] - 0.2 * b[t] + rng.normal();
        }
        Frame levels(idx, Frequency::event);
        levels.add_column("y", y);
        levels.add_column("a", a);
        levels.add_column("b", b);
        levels.add_column("c", c);
        return build_lag_frame(levels, grid).data;
    }
};

const LagFixture& lags() {
    static const LagFixture f;
    return f;
}

double replication(std::size_t, std::uint64_t seed) {
    Rng rng(seed);
    double s = 0.0;
    for (int i = 0; i < 20000; ++i) s += rng.normal();
    return s;
}

void BM_ScoreCorpus_Serial(benchmark::State& state) {
    for (auto _ : state) {
        auto docs = corpus().documents;
        benchmark::DoNotOptimize(reference::score_corpus(docs, corpus().lexicon));
    }
}

void BM_ScoreCorpus_OpenMP(benchmark::State& state) {
    for (auto _ : state) {
        auto docs = corpus().documents;
        benchmark::DoNotOptimize(score_corpus(docs, corpus().lexicon));
    }
}

void BM_ArdlSearch_Serial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(reference::ardl_search(lags().data, lags().grid));
}

void BM_ArdlSearch_OpenMP(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(ardl_search(lags().data, lags().grid));
}

void BM_Replications_Serial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(reference::run_replications(256, 7, replication));
}

void BM_Replications_OpenMP(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(run_replications(256, 7, replication));
}

}  // namespace

BENCHMARK(BM_ScoreCorpus_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScoreCorpus_OpenMP)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ArdlSearch_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ArdlSearch_OpenMP)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Replications_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Replications_OpenMP)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
