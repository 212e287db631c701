#include "coinparadox/probability.hpp"

#include "coinparadox/errors.hpp"

#include <algorithm>
#include <fmt/format.h>

namespace coinparadox {

std::size_t EpochGrouping::occupied_epochs() const noexcept
{
    return static_cast<std::size_t>(
        std::count_if(bets_per_epoch.begin(), bets_per_epoch.end(), [](const auto& v) { return !v.empty(); }));
}

EpochGrouping group_by_epoch(const GameTrace& trace)
{
    auto flips = trace.flips();
    auto bets = trace.bets();
    if (flips.empty() || flips.front().time != 0.0)
        throw InvalidTraceError("trace must start with a flip at t = 0");

    EpochGrouping g;
    g.epoch_of_bet.reserve(bets.size());
    g.bets_per_epoch.resize(flips.size());
    for (std::size_t i = 0; i < bets.size(); ++i) {
        const std::size_t e = governing_flip(flips, bets[i].time);
        g.epoch_of_bet.push_back(e);
        g.bets_per_epoch[e].push_back(i);
    }
    return g;
}

double marginal_win_probability(Face prediction, double coin_bias) noexcept
{
    return prediction == Face::Heads ? coin_bias : 1.0 - coin_bias;
}

double pairwise_conditional_probability(const GameTrace& trace, const EpochGrouping& grouping,
                                        std::size_t i, std::size_t j)
{
    const auto bets = trace.bets();
    const std::size_t n = grouping.epoch_of_bet.size();
    if (i >= n || j >= n || n != bets.size())
        throw DomainError(fmt::format("bet pair ({}, {}) not in grouping of {} bets", i, j, n));
    if (i == j)
        throw DomainError("conditional probability needs two distinct bets");
    if (bets[i].time > bets[j].time)
        throw DomainError(fmt::format("bet {} (t={}) does not precede bet {} (t={})", i, bets[i].time, j,
                                      bets[j].time));

    if (grouping.epoch_of_bet[i] == grouping.epoch_of_bet[j])
        return bets[i].prediction == bets[j].prediction ? 1.0 : 0.0;
    return marginal_win_probability(bets[j].prediction, trace.config().coin_bias);
}

double naive_compound_probability(const GameTrace& trace)
{
    double q = 1.0;
    for (const Bet& b : trace.bets())
        q *= marginal_win_probability(b.prediction, trace.config().coin_bias);
    return q;
}

double true_compound_probability(const GameTrace& trace)
{
    const auto grouping = group_by_epoch(trace);
    const auto bets = trace.bets();
    double q = 1.0;
    for (const auto& members : grouping.bets_per_epoch) {
        if (members.empty())
            continue;
        const Face first = bets[members.front()].prediction;
        const bool unanimous =
            std::all_of(members.begin(), members.end(), [&](std::size_t b) { return bets[b].prediction == first; });
        if (!unanimous)
            return 0.0;
        q *= marginal_win_probability(first, trace.config().coin_bias);
    }
    return q;
}

std::size_t effective_event_count(const GameTrace& trace)
{
    return group_by_epoch(trace).occupied_epochs();
}

std::vector<EpochOutcome> occupied_epoch_outcomes(const GameTrace& trace, const EpochGrouping& grouping)
{
    const auto bets = trace.bets();
    const auto& res = trace.resolutions();
    std::vector<EpochOutcome> out;
    for (std::size_t e = 0; e < grouping.bets_per_epoch.size(); ++e) {
        const auto& members = grouping.bets_per_epoch[e];
        if (members.empty())
            continue;
        EpochOutcome o{e, true, true};
        for (std::size_t b : members) {
            o.unanimous = o.unanimous && bets[b].prediction == bets[members.front()].prediction;
            o.won = o.won && res[b];
        }
        o.won = o.won && o.unanimous;
        out.push_back(o);
    }
    return out;
}

} // namespace coinparadox
