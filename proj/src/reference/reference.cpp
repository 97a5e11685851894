#include "mptone/reference.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "mptone/error.hpp"

namespace mptone::reference {

ToneSeries score_corpus(std::span<Document> documents, const Lexicon& lexicon) {
    for (auto& doc : documents) doc.counts = count_sentiment(lexicon, doc.tokens);
    return assemble_tone_series(documents);
}

SearchResult ardl_search(const Frame& data, const LagSpec& max_lags, const SearchOptions& options) {
    const std::size_t grid = ardl_grid_size(max_lags);
    if (grid > options.grid_cap)
        throw ValidationError(fmt::format("lag grid has {} candidates, above the cap of {}", grid, options.grid_cap));

    const std::vector<int> top = max_lags.orders();
    std::vector<int> lags(top.size(), 0);
    lags[0] = 1;

    SearchResult out;
    out.observations = data.rows();
    std::vector<RankedModel> all;
    for (bool done = false; !done;) {
        const LagSpec spec = max_lags.with_orders(lags);
        ++out.candidates;
        try {
            all.push_back({spec, ardl_fit(data, spec).aic, spec.coefficient_count()});
        } catch (const ValidationError&) {
            ++out.skipped;
        }
        // Odometer step, last position fastest; the dependent order starts at 1.
        for (std::size_t pos = lags.size();;) {
            if (pos == 0) {
                done = true;
                break;
            }
            --pos;
            if (lags[pos] < top[pos]) {
                ++lags[pos];
                break;
            }
            lags[pos] = pos == 0 ? 1 : 0;
        }
    }
    if (all.empty()) throw ValidationError("no ARDL candidate could be estimated");
    std::stable_sort(all.begin(), all.end(), [](const RankedModel& a, const RankedModel& b) {
        return aic_rank_key(a.aic) < aic_rank_key(b.aic);
    });
    all.resize(std::min(options.top_k, all.size()));
    out.ranked = std::move(all);
    return out;
}

}  // namespace mptone::reference
