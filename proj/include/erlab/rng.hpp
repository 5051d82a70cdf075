#pragma once

#include <cstdint>
#include <vector>

namespace erlab {

/// Identifies a random stream. Equal configs give bit-identical streams on
/// every platform.
struct RngConfig {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;

    /// Config for the i-th independent child stream (used for per-trial and
    /// per-seed parallelism so that results do not depend on scheduling).
    RngConfig child(std::uint64_t index) const noexcept;

    friend bool operator==(const RngConfig&, const RngConfig&) = default;
};

/// Counter-based generator: output i is a keyed SplitMix64 finalizer applied
/// to i, so any stream can be split without coordination.
///
/// The distribution helpers are implemented here rather than via <random>
/// distributions, whose outputs are implementation-defined.
class Rng {
public:
    explicit Rng(RngConfig config) noexcept;

    std::uint64_t next_u64() noexcept;
    /// Uniform integer in [0, bound); bound > 0. Unbiased (rejection).
    std::uint64_t uniform_below(std::uint64_t bound) noexcept;
    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() noexcept;
    /// True with probability p; p <= 0 never, p >= 1 always.
    bool bernoulli(double p) noexcept;

    template <typename T>
    void shuffle(std::vector<T>& items) noexcept {
        for (std::size_t i = items.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(uniform_below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

    const RngConfig& config() const noexcept { return config_; }

private:
    RngConfig config_;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

std::uint64_t mix64(std::uint64_t x) noexcept;

}  // namespace erlab
