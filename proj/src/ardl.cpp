#include "mptone/ardl.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include <fmt/format.h>

#include "mptone/error.hpp"

namespace mptone {

std::vector<std::string> ardl_regressors(const LagSpec& spec) {
    std::vector<std::string> cols;
    const auto& dep = spec.dependent();
    for (int k = 1; k <= dep.order; ++k) cols.push_back(lagged_name(dep.name, k));
    for (const auto& term : spec.exogenous())
        for (int k = 0; k <= term.order; ++k) cols.push_back(lagged_name(term.name, k));
    return cols;
}

RegressionResult ardl_fit(const Frame& data, const LagSpec& spec) {
    spec.require_ardl();
    const auto cols = ardl_regressors(spec);
    const Design design = make_design(data, cols, true);
    return ols(column_vector(data, spec.dependent().name), design, spec.dependent().name);
}

std::size_t ardl_grid_size(const LagSpec& max_lags) {
    max_lags.require_ardl();
    std::size_t size = static_cast<std::size_t>(max_lags.dependent().order);
    for (const auto& t : max_lags.exogenous()) {
        const auto radix = static_cast<std::size_t>(t.order) + 1;
        if (size > std::numeric_limits<std::size_t>::max() / radix) return std::numeric_limits<std::size_t>::max();
        size *= radix;
    }
    return size;
}

LagSpec ardl_candidate(const LagSpec& max_lags, std::size_t index) {
    const auto& terms = max_lags.terms();
    std::vector<int> orders(terms.size());
    for (std::size_t i = terms.size(); i-- > 1;) {
        const auto radix = static_cast<std::size_t>(terms[i].order) + 1;
        orders[i] = static_cast<int>(index % radix);
        index /= radix;
    }
    orders[0] = static_cast<int>(index) + 1;
    return max_lags.with_orders(orders);
}

double aic_rank_key(double aic) noexcept {
    if (!std::isfinite(aic)) return aic;
    return std::nearbyint(aic * 1e10);
}

bool ranks_before(const RankedModel& a, const RankedModel& b) {
    const double ka = aic_rank_key(a.aic);
    const double kb = aic_rank_key(b.aic);
    if (ka != kb) return ka < kb;
    return a.spec.orders() < b.spec.orders();
}

SearchResult ardl_search(const Frame& data, const LagSpec& max_lags, const SearchOptions& options) {
    const std::size_t grid = ardl_grid_size(max_lags);
    if (grid > options.grid_cap)
        throw ValidationError(fmt::format("lag grid has {} candidates, above the cap of {}; reduce the maximum lags",
                                          grid, options.grid_cap));
    // Every regressor of the largest model must exist so all candidates share rows.
    for (const auto& c : ardl_regressors(max_lags)) (void)data.column(c);
    (void)data.column(max_lags.dependent().name);

    std::vector<double> aics(grid, std::numeric_limits<double>::quiet_NaN());
    const auto n = static_cast<std::int64_t>(grid);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < n; ++i) {
        const LagSpec spec = ardl_candidate(max_lags, static_cast<std::size_t>(i));
        try {
            aics[static_cast<std::size_t>(i)] = ardl_fit(data, spec).aic;
        } catch (const ValidationError&) {
            // Rank-deficient or too few rows; left as NaN and counted.
        }
    }

    SearchResult out;
    out.candidates = grid;
    out.observations = data.rows();
    std::vector<RankedModel> models;
    models.reserve(grid);
    for (std::size_t i = 0; i < grid; ++i) {
        if (std::isnan(aics[i])) {
            ++out.skipped;
            continue;
        }
        RankedModel m{ardl_candidate(max_lags, i), aics[i], 0};
        m.coefficients = m.spec.coefficient_count();
        models.push_back(std::move(m));
    }
    if (models.empty()) throw ValidationError("no ARDL candidate could be estimated");
    const std::size_t keep = std::min(options.top_k, models.size());
    std::partial_sort(models.begin(), models.begin() + static_cast<std::ptrdiff_t>(keep), models.end(), ranks_before);
    models.resize(keep);
    out.ranked = std::move(models);
    return out;
}

}  // namespace mptone
