#include "coinparadox/game.hpp"

#include "coinparadox/errors.hpp"
#include "coinparadox/random.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace coinparadox {

Face parse_face(std::string_view token)
{
    if (token == "H" || token == "h")
        return Face::Heads;
    if (token == "T" || token == "t")
        return Face::Tails;
    throw DomainError(fmt::format("unknown face token '{}' (expected H or T)", token));
}

std::size_t GameTrace::wins() const noexcept
{
    return static_cast<std::size_t>(std::count(resolutions_.begin(), resolutions_.end(), true));
}

std::size_t governing_flip(std::span<const Flip> flips, double t)
{
    auto it = std::upper_bound(flips.begin(), flips.end(), t,
                               [](double value, const Flip& f) { return value < f.time; });
    return static_cast<std::size_t>(std::distance(flips.begin(), it)) - 1;
}

Face coin_state_at(std::span<const Flip> flips, double t)
{
    if (flips.empty())
        throw InvalidTraceError("trace has no flips");
    if (flips.front().time != 0.0)
        throw InvalidTraceError("trace does not start with a flip at t = 0");
    if (!(t >= 0.0))
        throw DomainError(fmt::format("time {} is before the start of the game", t));
    return flips[governing_flip(flips, t)].outcome;
}

Face coin_state_at(const GameTrace& trace, double t)
{
    if (!(t >= 0.0 && t <= trace.config().horizon))
        throw DomainError(fmt::format("time {} outside [0, {}]", t, trace.config().horizon));
    return coin_state_at(trace.flips(), t);
}

namespace {

void check_config(const GameConfig& config, std::vector<std::string>& offenses)
{
    if (!(std::isfinite(config.horizon) && config.horizon > 0.0))
        offenses.push_back(fmt::format("horizon must be a positive finite number, got {}", config.horizon));
    if (!(config.coin_bias >= 0.0 && config.coin_bias <= 1.0))
        offenses.push_back(fmt::format("coin_bias must lie in [0, 1], got {}", config.coin_bias));
}

bool in_range(double t, double horizon)
{
    return std::isfinite(t) && t >= 0.0 && t <= horizon;
}

void check_schedules(const GameConfig& config, std::span<const double> flip_times,
                     std::span<const Bet> bets, std::vector<std::string>& offenses)
{
    if (flip_times.empty()) {
        offenses.emplace_back("no flips: the game must begin with a flip at t = 0");
    } else if (flip_times.front() != 0.0) {
        offenses.push_back(fmt::format("flip 0: first flip must be at t = 0, got {}", flip_times.front()));
    }
    for (std::size_t i = 0; i < flip_times.size(); ++i) {
        if (!in_range(flip_times[i], config.horizon))
            offenses.push_back(fmt::format("flip {}: time {} outside [0, {}]", i, flip_times[i], config.horizon));
        if (i > 0 && !(flip_times[i] > flip_times[i - 1])) {
            if (flip_times[i] == flip_times[i - 1])
                offenses.push_back(fmt::format("flip {}: duplicate flip time {}", i, flip_times[i]));
            else
                offenses.push_back(fmt::format("flip {}: time {} precedes previous flip time {}", i,
                                               flip_times[i], flip_times[i - 1]));
        }
    }
    for (std::size_t i = 0; i < bets.size(); ++i) {
        if (!in_range(bets[i].time, config.horizon))
            offenses.push_back(fmt::format("bet {}: time {} outside [0, {}]", i, bets[i].time, config.horizon));
        if (i > 0 && bets[i].time < bets[i - 1].time)
            offenses.push_back(fmt::format("bet {}: time {} precedes previous bet time {}", i, bets[i].time,
                                           bets[i - 1].time));
    }
}

std::vector<bool> resolve(std::span<const Flip> flips, std::span<const Bet> bets)
{
    std::vector<bool> out;
    out.reserve(bets.size());
    for (const Bet& b : bets)
        out.push_back(flips[governing_flip(flips, b.time)].outcome == b.prediction);
    return out;
}

} // namespace

void validate_game_inputs(const GameConfig& config, std::span<const double> flip_times,
                          std::span<const Bet> bets)
{
    std::vector<std::string> offenses;
    check_config(config, offenses);
    check_schedules(config, flip_times, bets, offenses);
    if (!offenses.empty())
        throw ValidationError(std::move(offenses));
}

GameTrace make_trace(const GameConfig& config, std::vector<Flip> flips, std::vector<Bet> bets)
{
    std::vector<double> times;
    times.reserve(flips.size());
    for (const Flip& f : flips)
        times.push_back(f.time);
    validate_game_inputs(config, times, bets);

    GameTrace trace;
    trace.config_ = config;
    trace.resolutions_ = resolve(flips, bets);
    trace.flips_ = std::move(flips);
    trace.bets_ = std::move(bets);
    return trace;
}

std::vector<Flip> draw_flips(const GameConfig& config, std::span<const double> flip_times)
{
    Engine engine(config.seed);
    std::vector<Flip> flips;
    flips.reserve(flip_times.size());
    for (double t : flip_times)
        flips.push_back({t, bernoulli(engine, config.coin_bias) ? Face::Heads : Face::Tails});
    return flips;
}

GameTrace simulate_game(const GameConfig& config, std::span<const double> flip_times,
                        std::span<const Bet> bets)
{
    validate_game_inputs(config, flip_times, bets);
    return make_trace(config, draw_flips(config, flip_times), {bets.begin(), bets.end()});
}

} // namespace coinparadox
