#include "mptone/corpus.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>

#include <fmt/format.h>

#include "mptone/error.hpp"
#include "mptone/io.hpp"

namespace mptone {

namespace {

constexpr std::array<std::string_view, 19> kCalendarWords = {
    "monday", "tuesday", "wednesday", "thursday", "friday",  "saturday", "sunday",
    "january", "february", "march", "april", "may", "june", "july", "august",
    "september", "october", "november", "december"};

bool is_ascii_alpha(unsigned char c) noexcept { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

}  // namespace

bool is_calendar_word(std::string_view token) noexcept {
    return std::find(kCalendarWords.begin(), kCalendarWords.end(), token) != kCalendarWords.end();
}

Stoplist load_stoplist(const std::filesystem::path& path) {
    Stoplist out;
    for (const auto& w : read_word_list(path)) {
        std::string folded;
        for (char c : w) {
            const auto u = static_cast<unsigned char>(c);
            if (!is_ascii_alpha(u))
                throw ValidationError(fmt::format("stopword '{}' in '{}' is not alphabetic", w, path.string()));
            folded.push_back(static_cast<char>(std::tolower(u)));
        }
        out.insert(std::move(folded));
    }
    return out;
}

std::vector<std::string> normalize_text(std::string_view raw, const Stoplist& stoplist) {
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        if (current.empty()) return;
        if (!stoplist.contains(current) && !is_calendar_word(current)) tokens.push_back(current);
        current.clear();
    };
    for (char c : raw) {
        const auto u = static_cast<unsigned char>(c);
        if (is_ascii_alpha(u))
            current.push_back(static_cast<char>(std::tolower(u)));
        else
            flush();
    }
    flush();
    return tokens;
}

Document ingest_document(const std::filesystem::path& path, Date publish_date, const Stoplist& stoplist) {
    Document doc;
    doc.raw_text = io::read_file(path);
    if (auto bad = io::first_invalid_utf8(doc.raw_text))
        throw DecodeError(fmt::format("'{}': invalid UTF-8 at byte offset {}", path.string(), *bad), *bad);
    doc.id = path.stem().string();
    doc.publish_date = publish_date;
    doc.tokens = normalize_text(doc.raw_text, stoplist);
    return doc;
}

ToneSeries assemble_tone_series(std::span<const Document> documents) {
    std::vector<const Document*> order;
    order.reserve(documents.size());
    for (const auto& d : documents) order.push_back(&d);
    std::stable_sort(order.begin(), order.end(),
                     [](const Document* a, const Document* b) { return a->publish_date < b->publish_date; });

    ToneSeries series;
    for (const Document* d : order) {
        const SentimentCounts c = d->counts.value_or(SentimentCounts{});
        if (!series.entries.empty() && series.entries.back().date == d->publish_date) {
            auto& e = series.entries.back();
            e.counts.positive += c.positive;
            e.counts.negative += c.negative;
            e.counts.total_tokens += c.total_tokens;
            ++e.documents;
        } else {
            series.entries.push_back(ToneEntry{d->publish_date, 0.0, false, c, 1});
        }
    }
    for (auto& e : series.entries) {
        const ToneScore t = tone(e.counts);
        e.tone = t.value;
        e.defined = t.defined;
    }
    return series;
}

ToneSeries score_corpus(std::span<Document> documents, const Lexicon& lexicon) {
    const auto n = static_cast<std::int64_t>(documents.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i) {
        auto& doc = documents[static_cast<std::size_t>(i)];
        doc.counts = count_sentiment(lexicon, doc.tokens);
    }
    return assemble_tone_series(documents);
}

std::map<int, std::size_t> documents_per_year(std::span<const Document> documents) {
    std::map<int, std::size_t> hist;
    for (const auto& d : documents) ++hist[d.publish_date.year()];
    return hist;
}

std::vector<CorpusEntry> read_manifest(const std::filesystem::path& manifest) {
    const std::string text = io::read_file(manifest);
    const auto base = manifest.parent_path();
    std::vector<CorpusEntry> out;
    std::size_t row = 0;
    for (auto line : io::split_lines(text)) {
        ++row;
        line = io::trim(line);
        if (line.empty() || line.front() == '#') continue;
        const auto cells = io::split_csv(line);
        if (cells.size() != 3)
            throw ValidationError(fmt::format("{}:{}: expected id,date,path", manifest.string(), row));
        if (row == 1 && cells[0] == "id" && cells[1] == "date") continue;
        Date date;
        try {
            date = Date::parse(cells[1]);
        } catch (const ValidationError& e) {
            throw ValidationError(fmt::format("{}:{}: {}", manifest.string(), row, e.what()));
        }
        std::filesystem::path p{std::string(cells[2])};
        if (p.is_relative()) p = base / p;
        out.push_back({std::string(cells[0]), date, p});
    }
    return out;
}

std::vector<CorpusEntry> scan_corpus_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec))
        throw IoError(fmt::format("corpus directory '{}' not found", dir.string()));
    std::vector<CorpusEntry> out;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
        const std::string name = entry.path().filename().string();
        if (name.size() < 12 || name[10] != '_') continue;
        Date date;
        try {
            date = Date::parse(std::string_view(name).substr(0, 10));
        } catch (const ValidationError&) {
            continue;
        }
        out.push_back({entry.path().stem().string(), date, entry.path()});
    }
    std::sort(out.begin(), out.end(),
              [](const CorpusEntry& a, const CorpusEntry& b) { return a.path.filename() < b.path.filename(); });
    return out;
}

std::vector<CorpusEntry> list_corpus(const std::filesystem::path& dir,
                                     const std::optional<std::filesystem::path>& manifest) {
    std::vector<CorpusEntry> entries;
    if (manifest && std::filesystem::exists(*manifest))
        entries = read_manifest(*manifest);
    else
        entries = scan_corpus_dir(dir);
    if (entries.empty()) throw ValidationError(fmt::format("empty corpus in '{}'", dir.string()));
    return entries;
}

std::vector<Document> ingest_corpus(std::span<const CorpusEntry> entries, const Stoplist& stoplist) {
    std::vector<Document> docs;
    docs.reserve(entries.size());
    for (const auto& e : entries) {
        Document d = ingest_document(e.path, e.date, stoplist);
        d.id = e.id;
        docs.push_back(std::move(d));
    }
    return docs;
}

std::string tone_series_csv(const ToneSeries& series) {
    std::string out = "date,tone,defined\n";
    for (const auto& e : series.entries)
        out += fmt::format("{},{},{}\n", e.date.iso(), io::format_number(e.tone, 17), e.defined ? 1 : 0);
    return out;
}

ToneSeries parse_tone_series_csv(std::string_view text) {
    ToneSeries series;
    std::size_t row = 0;
    for (auto line : io::split_lines(text)) {
        ++row;
        if (io::trim(line).empty()) continue;
        const auto cells = io::split_csv(line);
        if (row == 1 && !cells.empty() && cells[0] == "date") continue;
        if (cells.size() != 3) throw ValidationError(fmt::format("tone csv row {}: expected date,tone,defined", row));
        ToneEntry e;
        e.date = Date::parse(cells[0]);
        const auto v = io::parse_double(cells[1]);
        if (!v || *v < -1.0 || *v > 1.0)
            throw ValidationError(fmt::format("tone csv row {}: tone must be in [-1, 1]", row));
        e.tone = *v;
        if (cells[2] != "0" && cells[2] != "1")
            throw ValidationError(fmt::format("tone csv row {}: defined must be 0 or 1", row));
        e.defined = cells[2] == "1";
        if (!series.entries.empty() && !(series.entries.back().date < e.date))
            throw ValidationError(fmt::format("tone csv row {}: dates must be strictly increasing", row));
        series.entries.push_back(e);
    }
    return series;
}

}  // namespace mptone
