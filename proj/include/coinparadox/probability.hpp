#pragma once

#include "coinparadox/game.hpp"

#include <cstddef>
#include <vector>

namespace coinparadox {

/// Assignment of each bet to the flip whose outcome it faces.
struct EpochGrouping {
    std::vector<std::size_t> epoch_of_bet;               ///< flip index per bet
    std::vector<std::vector<std::size_t>> bets_per_epoch; ///< bet indices per flip index

    std::size_t occupied_epochs() const noexcept;

    friend bool operator==(const EpochGrouping&, const EpochGrouping&) = default;
};

EpochGrouping group_by_epoch(const GameTrace& trace);

/// Probability that a single bet on `prediction` wins against a fresh flip.
double marginal_win_probability(Face prediction, double coin_bias) noexcept;

/// P(bet j wins | bet i wins).
///
/// Same epoch: 1 if the predictions agree, 0 otherwise. Different epochs: the
/// flips are independent, so the answer is the marginal of bet j.
/// Throws DomainError when either index is not in the grouping, when i == j,
/// or when bet i is later than bet j.
double pairwise_conditional_probability(const GameTrace& trace, const EpochGrouping& grouping,
                                        std::size_t i, std::size_t j);

/// Compound probability that treats every bet as an independent event:
/// the product of per-bet marginals (0.5^bets for a fair coin).
double naive_compound_probability(const GameTrace& trace);

/// Compound probability conditioned on the flip schedule: one factor per occupied
/// epoch, 0 if any epoch holds contradicting predictions.
double true_compound_probability(const GameTrace& trace);

/// Number of distinct epochs holding at least one bet.
std::size_t effective_event_count(const GameTrace& trace);

/// Per-epoch summary used by the report: whether the epoch's bets agree, and
/// whether they all won.
struct EpochOutcome {
    std::size_t epoch = 0;
    bool unanimous = true;
    bool won = false; ///< unanimous and correct
};

std::vector<EpochOutcome> occupied_epoch_outcomes(const GameTrace& trace, const EpochGrouping& grouping);

} // namespace coinparadox
