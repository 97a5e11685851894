#pragma once

// Serial counterparts of the OpenMP kernels. They share no loop code with the
// parallel versions and exist so tests and benchmarks can compare the two.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mptone/ardl.hpp"
#include "mptone/corpus.hpp"
#include "mptone/random.hpp"

namespace mptone::reference {

ToneSeries score_corpus(std::span<Document> documents, const Lexicon& lexicon);

/// Odometer enumeration of the lag grid, every candidate fitted in turn,
/// then a stable sort on the AIC key alone: enumeration order is already
/// lexicographic, so stability supplies the tie-break.
SearchResult ardl_search(const Frame& data, const LagSpec& max_lags, const SearchOptions& options = {});

template <class Fn>
auto run_replications(std::size_t replications, std::uint64_t base_seed, Fn fn)
    -> std::vector<decltype(fn(std::size_t{}, std::uint64_t{}))> {
    std::vector<decltype(fn(std::size_t{}, std::uint64_t{}))> out;
    out.reserve(replications);
    for (std::size_t i = 0; i < replications; ++i) out.push_back(fn(i, derive_seed(base_seed, i)));
    return out;
}

}  // namespace mptone::reference
