#pragma once

#include <cstdint>
#include <limits>

namespace coinparadox {

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// SplitMix64 (Steele, Lea, Flood 2014). Satisfies UniformRandomBitGenerator.
/// Construction is one store, so a Monte Carlo run can afford a fresh engine per trial.
class Engine {
public:
    using result_type = std::uint64_t;

    constexpr explicit Engine(std::uint64_t seed) noexcept : state_(seed) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    constexpr result_type operator()() noexcept
    {
        state_ += kGoldenGamma;
        return mix64(state_);
    }

private:
    std::uint64_t state_;
};

/// Seed for trial `index` of a run started from `base_seed`. Depends only on
/// (base_seed, index), so serial and parallel loops see the same per-trial streams.
constexpr std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index) noexcept
{
    return mix64(base_seed ^ mix64(index + kGoldenGamma));
}

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit word.
/// Used instead of std::uniform_real_distribution, whose output is implementation-defined.
constexpr double unit_interval(std::uint64_t bits) noexcept
{
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Bernoulli draw: true with probability p. p = 1 always succeeds, p = 0 never does.
inline bool bernoulli(Engine& engine, double p)
{
    return unit_interval(engine()) < p;
}

} // namespace coinparadox
