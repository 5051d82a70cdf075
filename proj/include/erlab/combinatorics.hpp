#pragma once

#include "erlab/rng.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace erlab {

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial_saturating(std::int64_t n, std::int64_t k) noexcept;

/// Visits the k-subsets of [0, n) in lexicographic order. The callback
/// receives the sorted indices and returns false to stop. Returns false iff
/// stopped early.
template <typename Fn>
bool for_each_combination(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return true;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (!fn(static_cast<const std::vector<int>&>(idx))) return false;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

/// Uniform random k-subset of [0, n), sorted.
std::vector<int> random_subset(int n, int k, Rng& rng);

}  // namespace erlab
