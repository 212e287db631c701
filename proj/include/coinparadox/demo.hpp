#pragma once

#include "coinparadox/game.hpp"
#include "coinparadox/montecarlo.hpp"
#include "coinparadox/report.hpp"

#include "coinparadox/json.hpp"
#include <string>

namespace coinparadox {

/// The two-bet game: one flip at t = 0 landing Heads, bets on Heads at 0.3 and 0.7,
/// horizon 1, fair coin. With `second_flip`, A flips again at 0.5 (Heads) so the
/// two bets face separate flips.
GameTrace paradox_trace(bool second_flip = false);

struct ParadoxDemo {
    GameTrace trace;
    AnalysisReport report;
    RandomizationResult second_bet_randomization;
};

ParadoxDemo run_paradox_demo(bool second_flip, std::int64_t trials, std::uint64_t seed);

std::string format_demo_text(const ParadoxDemo& demo);
Json demo_to_json(const ParadoxDemo& demo);

} // namespace coinparadox
