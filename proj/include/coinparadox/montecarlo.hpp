#pragma once

#include "coinparadox/game.hpp"

#include <cstdint>
#include <span>

namespace coinparadox {

struct MonteCarloEstimate {
    std::int64_t trials = 0;
    std::int64_t successes = 0; ///< trials in which every bet won
    double estimate = 0.0;
    double standard_error = 0.0;
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    friend bool operator==(const Interval&, const Interval&) = default;
};

struct RandomizationResult {
    std::size_t bet_index = 0;
    Interval interval;
    std::int64_t trials = 0;
    std::int64_t changed = 0;
    double change_fraction = 0.0;

    friend bool operator==(const RandomizationResult&, const RandomizationResult&) = default;
};

/// Resampling window used when the caller gives none: (previous bet time, bet time].
/// The first bet reaches back to the start of the game.
Interval default_randomization_interval(const GameTrace& trace, std::size_t bet_index);

/// Fraction of `trials` simulated games in which every bet of `bets` won.
/// Trial i is simulate_game with seed derive_seed(base_seed, i); OpenMP-parallel
/// over trials, with results identical to the serial reference for any thread count.
MonteCarloEstimate monte_carlo_compound(const GameConfig& config, std::span<const double> flip_times,
                                        std::span<const Bet> bets, std::int64_t trials,
                                        std::uint64_t base_seed);

/// Moves bet `bet_index` to a uniform time in (interval.lo, interval.hi] in each
/// trial, re-resolves it against the recorded flips and counts how often its
/// win/loss status differs from the original. Trial i draws its time from
/// derive_seed(seed, i). OpenMP-parallel over trials.
RandomizationResult randomization_test(const GameTrace& trace, std::size_t bet_index, Interval interval,
                                       std::int64_t trials, std::uint64_t seed);

RandomizationResult randomization_test(const GameTrace& trace, std::size_t bet_index, std::int64_t trials,
                                       std::uint64_t seed);

/// Single-threaded reference kernels. Same contracts as above; kept for
/// cross-checking the parallel versions and as the benchmark baseline.
namespace reference {

MonteCarloEstimate monte_carlo_compound(const GameConfig& config, std::span<const double> flip_times,
                                        std::span<const Bet> bets, std::int64_t trials,
                                        std::uint64_t base_seed);

RandomizationResult randomization_test(const GameTrace& trace, std::size_t bet_index, Interval interval,
                                       std::int64_t trials, std::uint64_t seed);

} // namespace reference

} // namespace coinparadox
