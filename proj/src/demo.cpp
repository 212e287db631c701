#include "coinparadox/demo.hpp"

#include "coinparadox/json.hpp"

#include <fmt/format.h>

namespace coinparadox {

GameTrace paradox_trace(bool second_flip)
{
    std::vector<Flip> flips{{0.0, Face::Heads}};
    if (second_flip)
        flips.push_back({0.5, Face::Heads});
    return make_trace({1.0, 0.5, 0}, std::move(flips), {{0.3, Face::Heads}, {0.7, Face::Heads}});
}

ParadoxDemo run_paradox_demo(bool second_flip, std::int64_t trials, std::uint64_t seed)
{
    GameTrace trace = paradox_trace(second_flip);
    AnalysisReport report = analyze(trace);
    RandomizationResult second = randomization_test(trace, 1, trials, seed);
    return {std::move(trace), std::move(report), second};
}

std::string format_demo_text(const ParadoxDemo& d)
{
    const auto& r = d.report;
    std::string out;
    out += fmt::format("Flips by A:      {}\n", d.trace.flips().size());
    for (const Flip& f : d.trace.flips())
        out += fmt::format("  t={:<6} {}\n", f.time, to_char(f.outcome));
    out += fmt::format("Bets by B:       {}\n", d.trace.bets().size());
    for (std::size_t i = 0; i < d.trace.bets().size(); ++i) {
        const Bet& b = d.trace.bets()[i];
        out += fmt::format("  t={:<6} {}  {}\n", b.time, to_char(b.prediction),
                           d.trace.resolutions()[i] ? "win" : "lose");
    }
    out += fmt::format("B (bets independent):  compound probability = {:.12g} ({:g}%)\n", r.naive_compound,
                       r.naive_compound * 100.0);
    out += fmt::format("A (knows the flips):   compound probability = {:.12g} ({:g}%)\n", r.true_compound,
                       r.true_compound * 100.0);
    out += fmt::format("Effective events:      {} of {} bets\n", r.effective_events, r.bet_count);
    out += fmt::format("Random reproduction p: naive {:.12g}, corrected {:.12g}\n", r.naive_pvalue,
                       r.corrected_pvalue);
    const auto& z = d.second_bet_randomization;
    out += fmt::format("Second bet moved within ({:g}, {:g}]: outcome changed {} of {} times (fraction {:.12g})\n",
                       z.interval.lo, z.interval.hi, z.changed, z.trials, z.change_fraction);
    return out;
}

Json demo_to_json(const ParadoxDemo& d)
{
    return {
        {"player_b_compound", round_significant(d.report.naive_compound)},
        {"player_a_compound", round_significant(d.report.true_compound)},
        {"effective_events", d.report.effective_events},
        {"trace", to_json(d.trace)},
        {"report", to_json(d.report)},
        {"second_bet_randomization", to_json(d.second_bet_randomization)},
    };
}

} // namespace coinparadox
