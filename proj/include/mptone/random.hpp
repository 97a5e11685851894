#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace mptone {

/// One splitmix64 step.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed of stream `stream` under `base`. Streams are independent of the
/// order or thread in which they are consumed.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept {
    return splitmix64(splitmix64(base) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double normal(double mean = 0.0, double sd = 1.0) { return mean + sd * std_normal_(engine_); }
    double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    /// Inclusive bounds.
    int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
    bool bernoulli(double p) { return std::bernoulli_distribution(p)(engine_); }

    std::mt19937_64& engine() noexcept { return engine_; }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> std_normal_;
};

/// Runs `fn(replication_index, seed)` for every replication in parallel and
/// returns the results in replication order. Each replication gets
/// derive_seed(base_seed, index), so the output does not depend on the
/// thread count.
template <class Fn>
auto run_replications(std::size_t replications, std::uint64_t base_seed, Fn fn)
    -> std::vector<decltype(fn(std::size_t{}, std::uint64_t{}))> {
    using R = decltype(fn(std::size_t{}, std::uint64_t{}));
    std::vector<R> out(replications);
    const auto n = static_cast<std::int64_t>(replications);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        out[idx] = fn(idx, derive_seed(base_seed, idx));
    }
    return out;
}

/// Share of p-values strictly below `alpha`.
inline double rejection_rate(const std::vector<double>& p_values, double alpha) {
    if (p_values.empty()) return 0.0;
    std::size_t hits = 0;
    for (double p : p_values) hits += p < alpha ? 1 : 0;
    return static_cast<double>(hits) / static_cast<double>(p_values.size());
}

}  // namespace mptone
