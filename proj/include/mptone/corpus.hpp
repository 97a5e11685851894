#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mptone/date.hpp"
#include "mptone/lexicon.hpp"

namespace mptone {

using Stoplist = std::set<std::string, std::less<>>;

/// Loads a stopword file (lexicon file format). Entries are lowercased;
/// entries that are not purely alphabetic could never match a token and
/// are rejected with ValidationError.
Stoplist load_stoplist(const std::filesystem::path& path);

/// English day and month names dropped by normalize_text.
bool is_calendar_word(std::string_view lowercase_token) noexcept;

/// Lowercase, split on maximal non-alphabetic runs, drop stopwords, drop
/// day/month names. Only ASCII letters are alphabetic; any other byte
/// (digits, punctuation, non-ASCII) separates tokens.
std::vector<std::string> normalize_text(std::string_view raw, const Stoplist& stoplist);

struct Document {
    std::string id;
    Date publish_date;
    std::string raw_text;
    std::vector<std::string> tokens;
    std::optional<SentimentCounts> counts;
};

/// Reads, validates UTF-8 (DecodeError with byte offset), and normalizes.
/// The document id is the file stem.
Document ingest_document(const std::filesystem::path& path, Date publish_date, const Stoplist& stoplist);

struct ToneEntry {
    Date date;
    double tone = 0.0;
    bool defined = false;
    SentimentCounts counts;
    std::size_t documents = 1;
};

/// One entry per distinct publish date, ascending.
struct ToneSeries {
    std::vector<ToneEntry> entries;
};

/// Fills `counts` on every document (OpenMP across documents) and merges
/// same-date documents by pooling their token counts.
ToneSeries score_corpus(std::span<Document> documents, const Lexicon& lexicon);

/// Deterministic sequential merge used by score_corpus once every document
/// carries counts.
ToneSeries assemble_tone_series(std::span<const Document> documents);

std::map<int, std::size_t> documents_per_year(std::span<const Document> documents);

/// Source listing for a corpus directory.
struct CorpusEntry {
    std::string id;
    Date date;
    std::filesystem::path path;
};

/// Reads `id,date,path` manifest rows (optional header; paths relative to the
/// manifest's directory).
std::vector<CorpusEntry> read_manifest(const std::filesystem::path& manifest);

/// `YYYY-MM-DD_*.txt` files directly under `dir`, sorted by filename.
std::vector<CorpusEntry> scan_corpus_dir(const std::filesystem::path& dir);

/// Manifest when given and present, else filename pattern. Throws
/// ValidationError on an empty listing.
std::vector<CorpusEntry> list_corpus(const std::filesystem::path& dir,
                                     const std::optional<std::filesystem::path>& manifest);

std::vector<Document> ingest_corpus(std::span<const CorpusEntry> entries, const Stoplist& stoplist);

/// `date,tone,defined` with full precision.
std::string tone_series_csv(const ToneSeries& series);

/// Reads the `date,tone,defined` format back (counts are not stored).
ToneSeries parse_tone_series_csv(std::string_view text);

}  // namespace mptone
