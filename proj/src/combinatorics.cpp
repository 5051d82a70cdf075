#include "erlab/combinatorics.hpp"

#include <algorithm>
#include <numeric>

namespace erlab {

std::uint64_t binomial_saturating(std::int64_t n, std::int64_t k) noexcept {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    for (std::int64_t i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
        if (acc > kMax) return kMax;
    }
    return static_cast<std::uint64_t>(acc);
}

std::vector<int> random_subset(int n, int k, Rng& rng) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < k; ++i) {
        const auto j = static_cast<std::size_t>(i) + rng.uniform_below(static_cast<std::uint64_t>(n - i));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(k));
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace erlab
