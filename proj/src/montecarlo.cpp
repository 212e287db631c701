#include "coinparadox/montecarlo.hpp"

#include "coinparadox/errors.hpp"
#include "coinparadox/random.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <vector>

namespace coinparadox {

namespace {

/// Game inputs reduced to what a trial needs: which flip each bet faces.
struct CompoundPlan {
    GameConfig config;
    std::vector<std::size_t> epoch_of_bet;
    std::vector<Face> prediction;
    std::size_t flips_needed = 0; ///< draws up to the last occupied epoch
};

CompoundPlan prepare(const GameConfig& config, std::span<const double> flip_times, std::span<const Bet> bets,
                     std::int64_t trials)
{
    if (trials < 1)
        throw DomainError(fmt::format("trial count must be >= 1, got {}", trials));
    validate_game_inputs(config, flip_times, bets);

    std::vector<Flip> skeleton;
    skeleton.reserve(flip_times.size());
    for (double t : flip_times)
        skeleton.push_back({t, Face::Heads});

    CompoundPlan plan{config, {}, {}, 0};
    for (const Bet& b : bets) {
        const std::size_t e = governing_flip(skeleton, b.time);
        plan.epoch_of_bet.push_back(e);
        plan.prediction.push_back(b.prediction);
        plan.flips_needed = std::max(plan.flips_needed, e + 1);
    }
    return plan;
}

// One game of the plan with the given seed; draws in flip order like simulate_game.
bool all_bets_win(const CompoundPlan& plan, std::uint64_t seed, std::vector<Face>& scratch)
{
    Engine engine(seed);
    for (std::size_t f = 0; f < plan.flips_needed; ++f)
        scratch[f] = bernoulli(engine, plan.config.coin_bias) ? Face::Heads : Face::Tails;
    for (std::size_t b = 0; b < plan.epoch_of_bet.size(); ++b)
        if (scratch[plan.epoch_of_bet[b]] != plan.prediction[b])
            return false;
    return true;
}

MonteCarloEstimate finish(std::int64_t trials, std::int64_t successes)
{
    const double q = static_cast<double>(successes) / static_cast<double>(trials);
    return {trials, successes, q, std::sqrt(q * (1.0 - q) / static_cast<double>(trials))};
}

struct RandomizationSetup {
    std::span<const Flip> flips;
    double time;
    Face prediction;
    bool original;
};

RandomizationSetup prepare(const GameTrace& trace, std::size_t bet_index, Interval interval, std::int64_t trials)
{
    const auto bets = trace.bets();
    if (bet_index >= bets.size())
        throw DomainError(fmt::format("bet index {} out of range ({} bets)", bet_index, bets.size()));
    const double horizon = trace.config().horizon;
    if (!(interval.lo >= 0.0 && interval.lo <= interval.hi && interval.hi <= horizon))
        throw DomainError(
            fmt::format("resampling interval ({}, {}] not within [0, {}]", interval.lo, interval.hi, horizon));
    if (trials < 1)
        throw DomainError(fmt::format("trial count must be >= 1, got {}", trials));
    return {trace.flips(), bets[bet_index].time, bets[bet_index].prediction,
            static_cast<bool>(trace.resolutions()[bet_index])};
}

// Resampled time for trial i, in (lo, hi]. A zero-width interval always yields hi.
double resample_time(Interval interval, std::uint64_t seed, std::int64_t i)
{
    const double u = unit_interval(derive_seed(seed, static_cast<std::uint64_t>(i)));
    return interval.hi - (interval.hi - interval.lo) * u;
}

bool outcome_changes(const RandomizationSetup& s, double t)
{
    const bool wins = s.flips[governing_flip(s.flips, t)].outcome == s.prediction;
    return wins != s.original;
}

RandomizationResult finish(std::size_t bet_index, Interval interval, std::int64_t trials, std::int64_t changed)
{
    return {bet_index, interval, trials, changed, static_cast<double>(changed) / static_cast<double>(trials)};
}

} // namespace

Interval default_randomization_interval(const GameTrace& trace, std::size_t bet_index)
{
    const auto bets = trace.bets();
    if (bet_index >= bets.size())
        throw DomainError(fmt::format("bet index {} out of range ({} bets)", bet_index, bets.size()));
    const double lo = bet_index == 0 ? 0.0 : bets[bet_index - 1].time;
    return {lo, bets[bet_index].time};
}

MonteCarloEstimate monte_carlo_compound(const GameConfig& config, std::span<const double> flip_times,
                                        std::span<const Bet> bets, std::int64_t trials,
                                        std::uint64_t base_seed)
{
    const CompoundPlan plan = prepare(config, flip_times, bets, trials);
    std::int64_t successes = 0;

#pragma omp parallel reduction(+ : successes)
    {
        std::vector<Face> scratch(plan.flips_needed);
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < trials; ++i)
            successes += all_bets_win(plan, derive_seed(base_seed, static_cast<std::uint64_t>(i)), scratch) ? 1 : 0;
    }
    return finish(trials, successes);
}

RandomizationResult randomization_test(const GameTrace& trace, std::size_t bet_index, Interval interval,
                                       std::int64_t trials, std::uint64_t seed)
{
    const RandomizationSetup setup = prepare(trace, bet_index, interval, trials);
    std::int64_t changed = 0;

#pragma omp parallel for schedule(static) reduction(+ : changed)
    for (std::int64_t i = 0; i < trials; ++i)
        changed += outcome_changes(setup, resample_time(interval, seed, i)) ? 1 : 0;

    return finish(bet_index, interval, trials, changed);
}

RandomizationResult randomization_test(const GameTrace& trace, std::size_t bet_index, std::int64_t trials,
                                       std::uint64_t seed)
{
    return randomization_test(trace, bet_index, default_randomization_interval(trace, bet_index), trials, seed);
}

namespace reference {

MonteCarloEstimate monte_carlo_compound(const GameConfig& config, std::span<const double> flip_times,
                                        std::span<const Bet> bets, std::int64_t trials,
                                        std::uint64_t base_seed)
{
    if (trials < 1)
        throw DomainError(fmt::format("trial count must be >= 1, got {}", trials));
    // Full simulate_game per trial.
    std::int64_t successes = 0;
    GameConfig trial_config = config;
    for (std::int64_t i = 0; i < trials; ++i) {
        trial_config.seed = derive_seed(base_seed, static_cast<std::uint64_t>(i));
        const GameTrace trace = simulate_game(trial_config, flip_times, bets);
        if (trace.wins() == trace.bets().size())
            ++successes;
    }
    return finish(trials, successes);
}

RandomizationResult randomization_test(const GameTrace& trace, std::size_t bet_index, Interval interval,
                                       std::int64_t trials, std::uint64_t seed)
{
    const RandomizationSetup setup = prepare(trace, bet_index, interval, trials);
    std::int64_t changed = 0;
    for (std::int64_t i = 0; i < trials; ++i) {
        const double t = resample_time(interval, seed, i);
        const bool wins = coin_state_at(trace, t) == setup.prediction;
        changed += wins != setup.original ? 1 : 0;
    }
    return finish(bet_index, interval, trials, changed);
}

} // namespace reference

} // namespace coinparadox
