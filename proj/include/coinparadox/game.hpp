#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace coinparadox {

enum class Face : std::uint8_t { Heads, Tails };

constexpr Face opposite(Face f) noexcept { return f == Face::Heads ? Face::Tails : Face::Heads; }

constexpr char to_char(Face f) noexcept { return f == Face::Heads ? 'H' : 'T'; }

/// Parses "H" / "T" (case-insensitive). Throws DomainError on anything else.
Face parse_face(std::string_view token);

struct Flip {
    double time = 0.0;
    Face outcome = Face::Heads;

    friend bool operator==(const Flip&, const Flip&) = default;
};

struct Bet {
    double time = 0.0;
    Face prediction = Face::Heads;

    friend bool operator==(const Bet&, const Bet&) = default;
};

struct GameConfig {
    double horizon = 1.0;
    double coin_bias = 0.5; ///< probability that a flip lands Heads
    std::uint64_t seed = 0;

    friend bool operator==(const GameConfig&, const GameConfig&) = default;
};

/// Complete record of one game. Construct through make_trace / simulate_game;
/// those enforce the ordering invariants and compute the resolutions.
class GameTrace {
public:
    const GameConfig& config() const noexcept { return config_; }
    std::span<const Flip> flips() const noexcept { return flips_; }
    std::span<const Bet> bets() const noexcept { return bets_; }
    /// resolutions()[i] is true when bet i won.
    const std::vector<bool>& resolutions() const noexcept { return resolutions_; }

    std::size_t wins() const noexcept;

    friend bool operator==(const GameTrace&, const GameTrace&) = default;

private:
    friend GameTrace make_trace(const GameConfig&, std::vector<Flip>, std::vector<Bet>);

    GameConfig config_;
    std::vector<Flip> flips_;
    std::vector<Bet> bets_;
    std::vector<bool> resolutions_;
};

/// Index of the flip governing time t: the latest flip with flip.time <= t.
/// A flip at exactly t governs (flips resolve before simultaneous bets).
/// Expects flips sorted by strictly increasing time with flips[0].time == 0.
std::size_t governing_flip(std::span<const Flip> flips, double t);

/// Face showing at time t.
/// Throws DomainError when t is outside [0, horizon], InvalidTraceError on an empty flip list.
Face coin_state_at(const GameTrace& trace, double t);

/// Same lookup against a bare flip record. Throws InvalidTraceError when flips is empty
/// or does not start at t = 0, DomainError when t < 0.
Face coin_state_at(std::span<const Flip> flips, double t);

/// Checks config and schedules; throws ValidationError listing every offense.
void validate_game_inputs(const GameConfig& config, std::span<const double> flip_times,
                          std::span<const Bet> bets);

/// Builds a trace from known flip outcomes and resolves every bet.
GameTrace make_trace(const GameConfig& config, std::vector<Flip> flips, std::vector<Bet> bets);

/// Draws outcomes for the given flip times from a generator seeded with config.seed,
/// one draw per flip in order. No validation; simulate_game is the checked entry point.
std::vector<Flip> draw_flips(const GameConfig& config, std::span<const double> flip_times);

/// Draws each flip outcome (Heads with probability config.coin_bias) from a generator
/// seeded with config.seed, in flip-time order, then resolves the bets.
GameTrace simulate_game(const GameConfig& config, std::span<const double> flip_times,
                        std::span<const Bet> bets);

} // namespace coinparadox
