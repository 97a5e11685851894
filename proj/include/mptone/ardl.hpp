#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mptone/dataset.hpp"
#include "mptone/frame.hpp"
#include "mptone/ols.hpp"

namespace mptone {

/// Regressor columns of a spec in design order: y(-1)..y(-p), then each
/// exogenous x, x(-1)..x(-q). The intercept is not listed.
std::vector<std::string> ardl_regressors(const LagSpec& spec);

/// OLS of the dependent column on [1, ardl_regressors(spec)] over all rows of
/// `data`, which must already be lag-aligned (see align_event_dataset).
/// Requires a dependent lag order of at least 1.
RegressionResult ardl_fit(const Frame& data, const LagSpec& spec);

/// Candidate grid {1..p_max} x prod {0..q_max_j}.
std::size_t ardl_grid_size(const LagSpec& max_lags);

/// Candidate at `index` in lexicographic order of the lag vector
/// (dependent order most significant, last variable varies fastest).
LagSpec ardl_candidate(const LagSpec& max_lags, std::size_t index);

struct RankedModel {
    LagSpec spec;
    double aic = 0.0;
    std::size_t coefficients = 0;
};

/// AIC values closer than 1e-10 rank as ties.
double aic_rank_key(double aic) noexcept;

/// Ascending AIC key, ties broken by the lexicographically smaller lag vector.
bool ranks_before(const RankedModel& a, const RankedModel& b);

struct SearchOptions {
    std::size_t top_k = 20;
    std::size_t grid_cap = 100000;
};

struct SearchResult {
    /// At most top_k models, best first.
    std::vector<RankedModel> ranked;
    std::size_t candidates = 0;
    /// Candidates that could not be estimated (rank deficient or n <= k).
    std::size_t skipped = 0;
    /// Common sample size shared by every candidate.
    std::size_t observations = 0;
};

/// Exhaustive AIC search on the common sample `data` (aligned at the maximum
/// lags). Candidates are estimated in parallel; the ranking does not depend
/// on scheduling. Throws ValidationError when the grid exceeds the cap or no
/// candidate can be estimated.
SearchResult ardl_search(const Frame& data, const LagSpec& max_lags, const SearchOptions& options = {});

}  // namespace mptone
