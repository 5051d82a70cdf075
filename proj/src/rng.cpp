#include "erlab/rng.hpp"

namespace erlab {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t mix64(std::uint64_t x) noexcept {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

RngConfig RngConfig::child(std::uint64_t index) const noexcept {
    return RngConfig{seed, mix64(stream ^ mix64(index + kGolden))};
}

Rng::Rng(RngConfig config) noexcept
    : config_(config), key_(mix64(config.seed + kGolden) ^ mix64(config.stream * kGolden + 0x632be59bd9b4e019ULL)) {}

std::uint64_t Rng::next_u64() noexcept { return mix64(key_ + (++counter_) * kGolden); }

std::uint64_t Rng::uniform_below(std::uint64_t bound) noexcept {
    // Rejection on the top of the range keeps the result exactly uniform.
    const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % bound;
}

double Rng::uniform01() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

bool Rng::bernoulli(double p) noexcept {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return uniform01() < p;
}

}  // namespace erlab
