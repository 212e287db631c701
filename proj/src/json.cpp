#include "coinparadox/json.hpp"

#include "coinparadox/errors.hpp"

#include <cmath>
#include <fmt/format.h>
#include <string>

namespace coinparadox {

using json = Json;

double round_significant(double x)
{
    if (!std::isfinite(x) || x == 0.0)
        return x;
    return std::stod(fmt::format("{:.12g}", x));
}

namespace {

std::string face_string(Face f) { return std::string(1, to_char(f)); }

} // namespace

json to_json(const GameTrace& trace)
{
    const auto& c = trace.config();
    json flips = json::array();
    for (const Flip& f : trace.flips())
        flips.push_back({{"time", round_significant(f.time)}, {"outcome", face_string(f.outcome)}});
    json bets = json::array();
    for (const Bet& b : trace.bets())
        bets.push_back({{"time", round_significant(b.time)}, {"prediction", face_string(b.prediction)}});
    json resolutions = json::array();
    for (bool won : trace.resolutions())
        resolutions.push_back(won);

    return {
        {"config",
         {{"horizon", round_significant(c.horizon)}, {"coin_bias", round_significant(c.coin_bias)}, {"seed", c.seed}}},
        {"flips", std::move(flips)},
        {"bets", std::move(bets)},
        {"resolutions", std::move(resolutions)},
    };
}

GameTrace trace_from_json(const json& j)
{
    const auto& c = j.at("config");
    GameConfig config{c.at("horizon").get<double>(), c.at("coin_bias").get<double>(),
                      c.at("seed").get<std::uint64_t>()};
    std::vector<Flip> flips;
    for (const auto& f : j.at("flips"))
        flips.push_back({f.at("time").get<double>(), parse_face(f.at("outcome").get<std::string>())});
    std::vector<Bet> bets;
    for (const auto& b : j.at("bets"))
        bets.push_back({b.at("time").get<double>(), parse_face(b.at("prediction").get<std::string>())});

    GameTrace trace = make_trace(config, std::move(flips), std::move(bets));
    if (j.contains("resolutions")) {
        const auto stored = j.at("resolutions").get<std::vector<bool>>();
        if (stored != trace.resolutions())
            throw ValidationError({"stored resolutions disagree with the flip record"});
    }
    return trace;
}

json to_json(const RandomizationResult& r)
{
    return {
        {"bet_index", r.bet_index},
        {"interval_lo", round_significant(r.interval.lo)},
        {"interval_hi", round_significant(r.interval.hi)},
        {"trials", r.trials},
        {"changed", r.changed},
        {"change_fraction", round_significant(r.change_fraction)},
    };
}

RandomizationResult randomization_from_json(const json& j)
{
    return {
        j.at("bet_index").get<std::size_t>(),
        {j.at("interval_lo").get<double>(), j.at("interval_hi").get<double>()},
        j.at("trials").get<std::int64_t>(),
        j.at("changed").get<std::int64_t>(),
        j.at("change_fraction").get<double>(),
    };
}

json to_json(const AnalysisReport& r)
{
    json j = {
        {"bet_count", r.bet_count},
        {"flip_count", r.flip_count},
        {"effective_events", r.effective_events},
        {"wins", r.wins},
        {"effective_wins", r.effective_wins},
        {"naive_compound", round_significant(r.naive_compound)},
        {"true_compound", round_significant(r.true_compound)},
        {"naive_pvalue", round_significant(r.naive_pvalue)},
        {"corrected_pvalue", round_significant(r.corrected_pvalue)},
    };
    if (r.randomization) {
        json list = json::array();
        for (const auto& res : *r.randomization)
            list.push_back(to_json(res));
        j["randomization"] = std::move(list);
    }
    return j;
}

AnalysisReport report_from_json(const json& j)
{
    AnalysisReport r;
    r.bet_count = j.at("bet_count").get<std::int64_t>();
    r.flip_count = j.at("flip_count").get<std::int64_t>();
    r.effective_events = j.at("effective_events").get<std::int64_t>();
    r.wins = j.at("wins").get<std::int64_t>();
    r.effective_wins = j.at("effective_wins").get<std::int64_t>();
    r.naive_compound = j.at("naive_compound").get<double>();
    r.true_compound = j.at("true_compound").get<double>();
    r.naive_pvalue = j.at("naive_pvalue").get<double>();
    r.corrected_pvalue = j.at("corrected_pvalue").get<double>();
    if (j.contains("randomization")) {
        std::vector<RandomizationResult> list;
        for (const auto& item : j.at("randomization"))
            list.push_back(randomization_from_json(item));
        r.randomization = std::move(list);
    }
    return r;
}

} // namespace coinparadox
