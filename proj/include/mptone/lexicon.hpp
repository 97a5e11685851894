#pragma once

#include <cstddef>
#include <filesystem>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mptone {

enum class Polarity { neutral, positive, negative };

/// Positive/negative financial sentiment word lists. Immutable after
/// construction; safe to share between threads.
class Lexicon {
public:
    using TermSet = std::set<std::string, std::less<>>;

    /// Lowercases and deduplicates. Throws ValidationError on an empty or
    /// non-alphabetic term and on any term present in both lists
    /// (message `overlap: <term>`).
    static Lexicon from_terms(std::span<const std::string> positive,
                              std::span<const std::string> negative,
                              std::string source_name);

    Polarity classify(std::string_view token) const noexcept;

    const TermSet& positive_terms() const noexcept { return positive_; }
    const TermSet& negative_terms() const noexcept { return negative_; }
    const std::string& source_name() const noexcept { return source_name_; }

private:
    TermSet positive_;
    TermSet negative_;
    std::string source_name_;
};

/// One term per line, `#` comments and blank lines ignored, case-insensitive.
/// Throws IoError if either file is missing.
Lexicon load_lexicon(const std::filesystem::path& positive_path,
                     const std::filesystem::path& negative_path);

/// Reads a word-list file (same format as lexicon files) into raw lines.
std::vector<std::string> read_word_list(const std::filesystem::path& path);

inline Polarity classify_token(const Lexicon& lexicon, std::string_view token) noexcept {
    return lexicon.classify(token);
}

struct SentimentCounts {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t total_tokens = 0;

    friend bool operator==(const SentimentCounts&, const SentimentCounts&) = default;
};

/// Every occurrence counts; total_tokens is the input length.
SentimentCounts count_sentiment(const Lexicon& lexicon, std::span<const std::string> tokens) noexcept;

struct ToneScore {
    double value = 0.0;
    /// False when the document has no sentiment words; value is then 0.
    bool defined = false;
};

/// (positive - negative) / (positive + negative).
ToneScore tone(const SentimentCounts& counts) noexcept;

struct PolarityShares {
    double positive_pct = 0.0;
    double negative_pct = 0.0;
};

/// Corpus-wide share of sentiment words that are positive/negative, in
/// percent. Throws ValidationError when no document has a sentiment word.
PolarityShares corpus_polarity_shares(std::span<const SentimentCounts> counts);

}  // namespace mptone
