#include "coinparadox/errors.hpp"
#include "coinparadox/game.hpp"
#include "coinparadox/json.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace coinparadox;

namespace {

constexpr Face H = Face::Heads;
constexpr Face T = Face::Tails;

GameConfig unit_config(double bias = 0.5, std::uint64_t seed = 0) { return {1.0, bias, seed}; }

} // namespace

TEST_CASE("face negation is an involution")
{
    for (Face f : {H, T}) {
        CHECK(opposite(f) != f);
        CHECK(opposite(opposite(f)) == f);
    }
    CHECK(parse_face("H") == H);
    CHECK(parse_face("t") == T);
    CHECK_THROWS_AS(parse_face("X"), DomainError);
}

TEST_CASE("coin_state_at")
{
    SUBCASE("single flip governs the whole game")
    {
        const auto trace = make_trace(unit_config(), {{0.0, H}}, {});
        CHECK(coin_state_at(trace, 0.7) == H);
        CHECK(coin_state_at(trace, 0.0) == H);
        CHECK(coin_state_at(trace, 1.0) == H);
    }
    SUBCASE("a flip at exactly t governs t")
    {
        const auto trace = make_trace(unit_config(), {{0.0, H}, {0.5, T}}, {});
        CHECK(coin_state_at(trace, 0.5) == T);
        CHECK(coin_state_at(trace, 0.49) == H);
    }
    SUBCASE("errors")
    {
        const auto trace = make_trace(unit_config(), {{0.0, H}}, {});
        CHECK_THROWS_AS(coin_state_at(trace, -0.1), DomainError);
        CHECK_THROWS_AS(coin_state_at(trace, 1.1), DomainError);
        CHECK_THROWS_AS(coin_state_at(std::span<const Flip>{}, 0.2), InvalidTraceError);
    }
}

TEST_CASE("make_trace resolves bets against supplied outcomes")
{
    CHECK(make_trace(unit_config(), {{0.0, H}}, {{0.3, H}, {0.7, H}}).resolutions() == std::vector<bool>{true, true});
    CHECK(make_trace(unit_config(), {{0.0, T}}, {{0.5, H}}).resolutions() == std::vector<bool>{false});
    CHECK(make_trace(unit_config(), {{0.0, H}, {0.4, T}}, {{0.2, H}, {0.6, H}}).resolutions() ==
          std::vector<bool>{true, false});
    // bet placed at the instant of a flip faces the new face
    CHECK(make_trace(unit_config(), {{0.0, H}, {0.4, T}}, {{0.4, T}}).resolutions() == std::vector<bool>{true});
    // equal-time bets keep input order
    const auto trace = make_trace(unit_config(), {{0.0, H}}, {{0.5, H}, {0.5, T}});
    CHECK(trace.bets()[0].prediction == H);
    CHECK(trace.resolutions() == std::vector<bool>{true, false});
}

TEST_CASE("input validation lists every offense")
{
    SUBCASE("missing t=0 flip")
    {
        CHECK_THROWS_AS(make_trace(unit_config(), {{0.1, H}}, {}), ValidationError);
        CHECK_THROWS_AS(make_trace(unit_config(), {}, {}), ValidationError);
    }
    SUBCASE("duplicate and out-of-order flips, bets out of range")
    {
        const std::vector<double> times{0.0, 0.5, 0.5, 0.2, 1.5};
        const std::vector<Bet> bets{{0.3, H}, {-0.1, T}, {2.0, H}};
        try {
            validate_game_inputs(unit_config(), times, bets);
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            const auto& o = e.offenses();
            CHECK(o.size() == 6);
            CHECK(o[0].find("duplicate") != std::string::npos);
            CHECK(o[1].find("precedes") != std::string::npos);
            CHECK(o[2].find("flip 4") != std::string::npos);
            CHECK(o[3].find("bet 1") != std::string::npos);
        }
    }
    SUBCASE("config")
    {
        CHECK_THROWS_AS(make_trace({0.0, 0.5, 0}, {{0.0, H}}, {}), ValidationError);
        CHECK_THROWS_AS(make_trace({1.0, 1.5, 0}, {{0.0, H}}, {}), ValidationError);
        CHECK_THROWS_AS(make_trace({1.0, -0.1, 0}, {{0.0, H}}, {}), ValidationError);
    }
    SUBCASE("bets must be time-ordered")
    {
        CHECK_THROWS_AS(make_trace(unit_config(), {{0.0, H}}, {{0.7, H}, {0.3, H}}), ValidationError);
    }
}

TEST_CASE("simulate_game")
{
    const std::vector<double> single{0.0};
    const std::vector<Bet> paradox_bets{{0.3, H}, {0.7, H}};

    SUBCASE("seed 3 draws Heads on a fair coin, so both paradox bets win")
    {
        const auto trace = simulate_game(unit_config(0.5, 3), single, paradox_bets);
        CHECK(trace.flips()[0].outcome == H);
        CHECK(trace.resolutions() == std::vector<bool>{true, true});
    }
    SUBCASE("seed 0 draws Tails")
    {
        CHECK(simulate_game(unit_config(0.5, 0), single, paradox_bets).flips()[0].outcome == T);
    }
    SUBCASE("no bets")
    {
        CHECK(simulate_game(unit_config(), single, {}).resolutions().empty());
    }
    SUBCASE("degenerate coins")
    {
        const std::vector<double> two{0.0, 0.5};
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            CHECK(simulate_game(unit_config(1.0, seed), two, std::vector<Bet>{{0.25, H}, {0.75, H}}).wins() == 2);
            CHECK(simulate_game(unit_config(0.0, seed), two, std::vector<Bet>{{0.25, T}, {0.75, T}}).wins() == 2);
        }
    }
    SUBCASE("validation errors propagate")
    {
        const std::vector<double> dup{0.0, 0.0};
        CHECK_THROWS_AS(simulate_game(unit_config(), dup, {}), ValidationError);
    }
}

TEST_CASE("property: resolution consistency and determinism" * doctest::description("1000 random games"))
{
    std::mt19937_64 rng(20261016);
    for (int iter = 0; iter < 1000; ++iter) {
        const auto c = oracle::random_case(rng, 6, 8, iter % 2 == 0);
        const auto a = simulate_game(c.config, c.flip_times, c.bets);
        const auto b = simulate_game(c.config, c.flip_times, c.bets);
        REQUIRE(a == b);
        REQUIRE(to_json(a).dump() == to_json(b).dump());

        const auto manual = make_trace(c.config, c.flips, c.bets);
        for (std::size_t i = 0; i < manual.bets().size(); ++i) {
            const Bet& bet = manual.bets()[i];
            REQUIRE(manual.resolutions()[i] == (bet.prediction == coin_state_at(manual, bet.time)));
            REQUIRE(manual.resolutions()[i] ==
                    (bet.prediction == oracle::state_at(c.flips, bet.time)));
        }
    }
}

TEST_CASE("Monte Carlo: single-flip win frequency converges to the bias")
{
    const std::vector<double> single{0.0};
    const std::vector<Bet> bet{{0.5, H}};
    constexpr int N = 20000;
    for (double p : {0.1, 0.5, 0.6, 0.9}) {
        int wins = 0;
        for (int i = 0; i < N; ++i)
            wins += static_cast<int>(simulate_game(unit_config(p, 1000 + i), single, bet).wins());
        const double freq = static_cast<double>(wins) / N;
        CHECK(std::abs(freq - p) <= 4.0 * std::sqrt(p * (1 - p) / N));
    }
}
