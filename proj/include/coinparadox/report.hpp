#pragma once

#include "coinparadox/game.hpp"
#include "coinparadox/montecarlo.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace coinparadox {

struct AnalysisOptions {
    /// Resampling trials per bet for the randomization test; 0 skips it.
    std::int64_t randomize_trials = 0;
    std::uint64_t seed = 0;
};

struct AnalysisReport {
    std::int64_t bet_count = 0;
    std::int64_t flip_count = 0;
    std::int64_t effective_events = 0;
    std::int64_t wins = 0;
    std::int64_t effective_wins = 0; ///< occupied epochs whose bets agree and won
    double naive_compound = 1.0;
    double true_compound = 1.0;
    double naive_pvalue = 1.0;     ///< fair-guesser tail over raw bets
    double corrected_pvalue = 1.0; ///< fair-guesser tail over effective events
    std::optional<std::vector<RandomizationResult>> randomization;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

AnalysisReport analyze(const GameTrace& trace, const AnalysisOptions& options = {});

} // namespace coinparadox
