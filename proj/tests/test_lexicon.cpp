#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "mptone/corpus.hpp"
#include "mptone/error.hpp"
#include "mptone/lexicon.hpp"
#include "support/test_support.hpp"

using namespace mptone;
using testing_support::data_path;
using testing_support::TempDir;

namespace {

Lexicon small_lexicon() {
    const std::vector<std::string> pos{"growth", "improve"};
    const std::vector<std::string> neg{"loss"};
    return Lexicon::from_terms(pos, neg, "test");
}

Lexicon fixture_lexicon() {
    return load_lexicon(data_path("lexicon/fixture_positive.txt"), data_path("lexicon/fixture_negative.txt"));
}

}  // namespace

TEST(LoadLexicon, FoldsCaseAndSkipsComments) {
    TempDir dir;
    const auto pos = dir.write("pos.txt", "# positive\nGAIN\n\nIMPROVE\ngain\n");
    const auto neg = dir.write("neg.txt", "loss\r\n");
    const Lexicon lex = load_lexicon(pos, neg);
    EXPECT_EQ(lex.positive_terms().size(), 2u);
    EXPECT_EQ(lex.negative_terms().size(), 1u);
    EXPECT_EQ(lex.classify("gain"), Polarity::positive);
    EXPECT_EQ(lex.classify("loss"), Polarity::negative);
}

TEST(LoadLexicon, OverlapNamesTheTerm) {
    TempDir dir;
    const auto pos = dir.write("pos.txt", "gain\n");
    const auto neg = dir.write("neg.txt", "Gain\n");
    try {
        load_lexicon(pos, neg);
        FAIL() << "expected ValidationError";
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("overlap: gain"), std::string::npos) << e.what();
    }
}

TEST(LoadLexicon, RejectsNonLetterTerms) {
    TempDir dir;
    const auto pos = dir.write("pos.txt", "well-being\n");
    const auto neg = dir.write("neg.txt", "loss\n");
    EXPECT_THROW(load_lexicon(pos, neg), ValidationError);
}

TEST(LoadLexicon, MissingFileIsIoError) {
    TempDir dir;
    const auto neg = dir.write("neg.txt", "loss\n");
    EXPECT_THROW(load_lexicon(dir.path() / "absent.txt", neg), IoError);
}

TEST(LoadLexicon, BundledFixturesLoad) {
    const Lexicon lex = fixture_lexicon();
    EXPECT_EQ(lex.positive_terms().size(), 39u);
    EXPECT_EQ(lex.negative_terms().size(), 47u);
}

// Counts of the 2018 Loughran-McDonald lists. The lists are not bundled; set
// MPTONE_LM_DIR (CMake or environment) to a directory holding lm_positive.txt
// and lm_negative.txt, e.g. the output of tools/lm_to_lists.py.
TEST(LoadLexicon, LoughranMcDonald2018Counts) {
    std::string dir = MPTONE_LM_DIR;
    if (const char* env = std::getenv("MPTONE_LM_DIR"); env && *env) dir = env;
    if (dir.empty()) GTEST_SKIP() << "MPTONE_LM_DIR not set";
    const Lexicon lm = load_lexicon(std::filesystem::path(dir) / "lm_positive.txt",
                                    std::filesystem::path(dir) / "lm_negative.txt");
    EXPECT_EQ(lm.positive_terms().size(), 354u);
    EXPECT_EQ(lm.negative_terms().size(), 2355u);
}

TEST(ClassifyToken, Membership) {
    const Lexicon lex = small_lexicon();
    EXPECT_EQ(classify_token(lex, "improve"), Polarity::positive);
    EXPECT_EQ(classify_token(lex, "loss"), Polarity::negative);
    EXPECT_EQ(classify_token(lex, "and"), Polarity::neutral);
}

TEST(CountSentiment, EveryOccurrenceCounts) {
    const Lexicon lex = small_lexicon();
    const std::vector<std::string> tokens{"growth", "loss", "loss", "rate"};
    EXPECT_EQ(count_sentiment(lex, tokens), (SentimentCounts{1, 2, 4}));
    EXPECT_EQ(count_sentiment(lex, std::vector<std::string>{}), (SentimentCounts{0, 0, 0}));
}

TEST(CountSentiment, FixtureDocumentHandTally) {
    // positive: improved, stronger; negative: declined, deficit, weak.
    const Stoplist stop = load_stoplist(data_path("stopwords/english_v1.txt"));
    const Document doc = ingest_document(data_path("fixtures/corpus/2016-01-30_mps.txt"), Date(2016, 1, 30), stop);
    EXPECT_EQ(count_sentiment(fixture_lexicon(), doc.tokens), (SentimentCounts{2, 3, 30}));
}

TEST(CountSentiment, PermutationInvariant) {
    const Lexicon lex = fixture_lexicon();
    std::vector<std::string> tokens{"gain", "loss", "weak", "rate", "stable", "the", "weak", "gain"};
    const SentimentCounts base = count_sentiment(lex, tokens);
    std::mt19937 gen(7);
    for (int i = 0; i < 50; ++i) {
        std::shuffle(tokens.begin(), tokens.end(), gen);
        EXPECT_EQ(count_sentiment(lex, tokens), base);
    }
}

TEST(Tone, Examples) {
    EXPECT_NEAR(tone({10, 5, 20}).value, 1.0 / 3.0, 1e-15);
    EXPECT_TRUE(tone({10, 5, 20}).defined);
    EXPECT_EQ(tone({7, 7, 14}).value, 0.0);
    EXPECT_TRUE(tone({7, 7, 14}).defined);
    EXPECT_EQ(tone({0, 0, 9}).value, 0.0);
    EXPECT_FALSE(tone({0, 0, 9}).defined);
}

TEST(Tone, IdentitiesOverSmallCounts) {
    for (std::size_t p = 0; p <= 50; ++p)
        for (std::size_t n = 0; p + n <= 50; ++n) {
            const ToneScore t = tone({p, n, p + n});
            if (p + n == 0) {
                EXPECT_FALSE(t.defined);
                EXPECT_EQ(t.value, 0.0);
                continue;
            }
            ASSERT_TRUE(t.defined);
            EXPECT_GE(t.value, -1.0);
            EXPECT_LE(t.value, 1.0);
            EXPECT_EQ(t.value == 1.0, n == 0);
            EXPECT_EQ(t.value == -1.0, p == 0);
            EXPECT_EQ(tone({n, p, p + n}).value, -t.value);
            for (std::size_t m = 2; m <= 5; ++m) EXPECT_EQ(tone({p * m, n * m, (p + n) * m}).value, t.value);
        }
}

TEST(PolarityShares, Examples) {
    const std::vector<SentimentCounts> sym{{3, 1, 4}, {1, 3, 4}};
    const PolarityShares s = corpus_polarity_shares(sym);
    EXPECT_DOUBLE_EQ(s.positive_pct, 50.0);
    EXPECT_DOUBLE_EQ(s.negative_pct, 50.0);
    const std::vector<SentimentCounts> one{{1, 3, 4}};
    EXPECT_DOUBLE_EQ(corpus_polarity_shares(one).positive_pct, 25.0);
    EXPECT_DOUBLE_EQ(corpus_polarity_shares(one).negative_pct, 75.0);
    const std::vector<SentimentCounts> none{{0, 0, 3}};
    EXPECT_THROW(corpus_polarity_shares(none), ValidationError);
}

TEST(PolarityShares, OrderInvariant) {
    std::vector<SentimentCounts> c{{3, 1, 9}, {0, 4, 9}, {7, 2, 20}, {1, 1, 2}};
    const PolarityShares base = corpus_polarity_shares(c);
    std::sort(c.begin(), c.end(), [](auto& a, auto& b) { return a.negative > b.negative; });
    EXPECT_EQ(corpus_polarity_shares(c).positive_pct, base.positive_pct);
}
