#pragma once

#include <cmath>
#include <cstdint>

namespace asp {

/// SplitMix64 output function. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Seed of the `index`-th independent stream under a master seed.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
    return mix64(master ^ mix64(index ^ 0xD1B54A32D192ED03ULL));
}

/// Counter-based uniform generator: output i is a pure function of (key, i),
/// so any stream can be replayed or split without shared state.
class CounterRng {
public:
    explicit constexpr CounterRng(std::uint64_t key) noexcept : key_(mix64(key)) {}

    constexpr std::uint64_t next_u64() noexcept {
        return mix64(key_ + 0x9E3779B97F4A7C15ULL * counter_++);
    }

    /// Uniform on the open interval (0, 1); never returns 0 or 1.
    double uniform() noexcept {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Exponential variate with the given mean, by inverse CDF.
    double exponential(double mean) noexcept { return -mean * std::log(uniform()); }

    [[nodiscard]] constexpr std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace asp
