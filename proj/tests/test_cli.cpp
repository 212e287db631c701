#include "cli.hpp"

#include <doctest.h>
#include <filesystem>
#include <fstream>
#include "coinparadox/json.hpp"
#include <sstream>

namespace {

const std::filesystem::path kData = COINPARADOX_TEST_DATA;
const std::filesystem::path kGolden = COINPARADOX_GOLDEN_DIR;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = coinparadox::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (kData / name).string(); }

std::string golden(const char* name)
{
    std::ifstream in(kGolden / name, std::ios::binary);
    REQUIRE_MESSAGE(in, "missing golden file " << name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("simulate")
{
    const auto r = run({"simulate", "--horizon", "1", "--flip-times", "0", "--bias", "0.5", "--seed", "7", "--bets",
                        data("paradox_bets.csv")});
    CHECK(r.code == 0);
    CHECK(r.out == golden("simulate_seed7.json"));
    // deterministic
    CHECK(run({"simulate", "--horizon", "1", "--flip-times", "0", "--bias", "0.5", "--seed", "7", "--bets",
               data("paradox_bets.csv")})
              .out == r.out);

    const auto j = coinparadox::Json::parse(r.out);
    CHECK(j["bets"].size() == 2);
    CHECK(j["config"]["seed"] == 7);

    SUBCASE("--out writes a file")
    {
        const auto path = std::filesystem::temp_directory_path() / "coinparadox_cli_trace.json";
        const auto w = run({"simulate", "--horizon", "1", "--seed", "7", "--bets", data("paradox_bets.csv"), "--out",
                            path.string()});
        CHECK(w.code == 0);
        CHECK(w.out.empty());
        std::ifstream in(path);
        std::stringstream ss;
        ss << in.rdbuf();
        CHECK(ss.str() == r.out);
        std::filesystem::remove(path);
    }
}

TEST_CASE("simulate errors")
{
    const auto missing = run({"simulate", "--flip-times", "0"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("--horizon") != std::string::npos);

    const auto dup = run({"simulate", "--horizon", "1", "--flip-times", "0,0"});
    CHECK(dup.code == 2);
    CHECK(dup.err == "error: flip 1: duplicate flip time 0\n");

    const auto several = run({"simulate", "--horizon", "1", "--flip-times", "0.1,0.1,5"});
    CHECK(several.code == 2);
    CHECK(std::count(several.err.begin(), several.err.end(), '\n') == 3);

    CHECK(run({"simulate", "--horizon", "1", "--flip-times", "0,abc"}).code == 2);
    CHECK(run({"simulate", "--horizon", "1", "--bets", data("nope.csv")}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("analyze")
{
    const auto r = run({"analyze", "--flips", data("paradox_flips.csv"), "--bets", data("paradox_bets.csv")});
    CHECK(r.code == 0);
    CHECK(r.out == golden("analyze_paradox.json"));
    const auto j = coinparadox::Json::parse(r.out);
    CHECK(j["naive_compound"] == 0.25);
    CHECK(j["true_compound"] == 0.5);

    const auto rnd = run({"analyze", "--flips", data("paradox_flips.csv"), "--bets", data("paradox_bets.csv"),
                          "--randomize", "1000", "--seed", "3"});
    CHECK(rnd.code == 0);
    CHECK(rnd.out == golden("analyze_paradox_randomize.json"));
    CHECK(coinparadox::Json::parse(rnd.out)["randomization"][1]["change_fraction"] == 0.0);

    const auto conflict = run({"analyze", "--flips", data("conflict_flips.csv"), "--bets", data("conflict_bets.csv")});
    CHECK(conflict.code == 0);
    CHECK(conflict.out == golden("analyze_conflict.json"));
    CHECK(coinparadox::Json::parse(conflict.out)["true_compound"] == 0.0);

    const auto text = run({"analyze", "--flips", data("paradox_flips.csv"), "--bets", data("paradox_bets.csv"),
                           "--format", "text"});
    CHECK(text.code == 0);
    CHECK(text.out == golden("analyze_paradox.txt"));

    const auto dup = run({"analyze", "--flips", data("duplicate_flips.csv"), "--bets", data("paradox_bets.csv")});
    CHECK(dup.code == 2);
    CHECK(dup.err.find("duplicate-time: line 2") != std::string::npos);

    CHECK(run({"analyze", "--flips", data("paradox_flips.csv"), "--bets", data("paradox_bets.csv"), "--horizon",
               "0.5"})
              .code == 2);
    CHECK(run({"analyze", "--flips", data("paradox_flips.csv")}).code == 2);
}

TEST_CASE("significance")
{
    auto r = run({"significance", "--n", "10", "--p", "0.6"});
    CHECK(r.code == 0);
    CHECK(r.out == "0.1662386176\n");
    r = run({"significance", "--n", "100", "--p", "0.6"});
    CHECK(r.out.rfind("0.0167616865", 0) == 0);
    r = run({"significance", "--wins", "1", "--effective", "1"});
    CHECK(r.out == "0.5\n");

    CHECK(run({"significance", "--n", "10"}).code == 2);
    CHECK(run({"significance", "--n", "10", "--p", "0.6", "--wins", "1"}).code == 2);
    CHECK(run({"significance", "--wins", "3", "--effective", "2"}).code == 2);
    CHECK(run({"significance", "--n", "0", "--p", "0.6"}).code == 2);
    CHECK(run({"significance"}).code == 2);
}

TEST_CASE("paradox demo")
{
    const auto text = run({"paradox"});
    CHECK(text.code == 0);
    CHECK(text.out == golden("paradox.txt"));

    const auto json = run({"paradox", "--json"});
    CHECK(json.code == 0);
    CHECK(json.out == golden("paradox.json"));
    const auto j = coinparadox::Json::parse(json.out);
    CHECK(j["player_b_compound"] == 0.25);
    CHECK(j["player_a_compound"] == 0.5);
    CHECK(j["effective_events"] == 1);
    CHECK(j["second_bet_randomization"]["change_fraction"] == 0.0);

    const auto second = run({"paradox", "--with-second-flip", "--json"});
    CHECK(second.code == 0);
    CHECK(second.out == golden("paradox_second_flip.json"));
    const auto k = coinparadox::Json::parse(second.out);
    CHECK(k["player_b_compound"] == 0.25);
    CHECK(k["player_a_compound"] == 0.25);
    CHECK(k["effective_events"] == 2);
}
