#include "mptone/lexicon.hpp"

#include <algorithm>
#include <cctype>

#include <fmt/format.h>

#include "mptone/error.hpp"
#include "mptone/io.hpp"

namespace mptone {

namespace {

std::string fold_term(std::string_view raw, std::string_view list_name) {
    if (raw.empty()) throw ValidationError(fmt::format("empty term in {} list", list_name));
    std::string term;
    term.reserve(raw.size());
    for (char c : raw) {
        const auto u = static_cast<unsigned char>(c);
        if (!std::isalpha(u) || u >= 0x80)
            throw ValidationError(fmt::format("invalid term '{}' in {} list: letters only", raw, list_name));
        term.push_back(static_cast<char>(std::tolower(u)));
    }
    return term;
}

Lexicon::TermSet fold_all(std::span<const std::string> raw, std::string_view list_name) {
    Lexicon::TermSet out;
    for (const auto& t : raw) out.insert(fold_term(t, list_name));
    return out;
}

}  // namespace

Lexicon Lexicon::from_terms(std::span<const std::string> positive,
                            std::span<const std::string> negative,
                            std::string source_name) {
    Lexicon lex;
    lex.positive_ = fold_all(positive, "positive");
    lex.negative_ = fold_all(negative, "negative");
    // Both sets are sorted, so the first overlap reported is deterministic.
    std::vector<std::string> both;
    std::set_intersection(lex.positive_.begin(), lex.positive_.end(), lex.negative_.begin(),
                          lex.negative_.end(), std::back_inserter(both));
    if (!both.empty()) throw ValidationError(fmt::format("overlap: {}", both.front()));
    lex.source_name_ = std::move(source_name);
    return lex;
}

Polarity Lexicon::classify(std::string_view token) const noexcept {
    if (positive_.find(token) != positive_.end()) return Polarity::positive;
    if (negative_.find(token) != negative_.end()) return Polarity::negative;
    return Polarity::neutral;
}

std::vector<std::string> read_word_list(const std::filesystem::path& path) {
    const std::string text = io::read_file(path);
    std::vector<std::string> words;
    for (auto line : io::split_lines(text)) {
        line = io::trim(line);
        if (line.empty() || line.front() == '#') continue;
        words.emplace_back(line);
    }
    return words;
}

Lexicon load_lexicon(const std::filesystem::path& positive_path,
                     const std::filesystem::path& negative_path) {
    const auto pos = read_word_list(positive_path);
    const auto neg = read_word_list(negative_path);
    return Lexicon::from_terms(pos, neg, positive_path.stem().string() + "+" + negative_path.stem().string());
}

SentimentCounts count_sentiment(const Lexicon& lexicon, std::span<const std::string> tokens) noexcept {
    SentimentCounts c;
    c.total_tokens = tokens.size();
    for (const auto& t : tokens) {
        switch (lexicon.classify(t)) {
            case Polarity::positive: ++c.positive; break;
            case Polarity::negative: ++c.negative; break;
            case Polarity::neutral: break;
        }
    }
    return c;
}

ToneScore tone(const SentimentCounts& counts) noexcept {
    const std::size_t denom = counts.positive + counts.negative;
    if (denom == 0) return {0.0, false};
    const double diff = static_cast<double>(counts.positive) - static_cast<double>(counts.negative);
    return {diff / static_cast<double>(denom), true};
}

PolarityShares corpus_polarity_shares(std::span<const SentimentCounts> counts) {
    std::size_t pos = 0, total = 0;
    for (const auto& c : counts) {
        pos += c.positive;
        total += c.positive + c.negative;
    }
    if (total == 0) throw ValidationError("corpus has no positive or negative words");
    const double share = 100.0 * static_cast<double>(pos) / static_cast<double>(total);
    return {share, 100.0 - share};
}

}  // namespace mptone
