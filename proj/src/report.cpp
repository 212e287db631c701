#include "coinparadox/report.hpp"

#include "coinparadox/probability.hpp"
#include "coinparadox/significance.hpp"

#include <algorithm>

namespace coinparadox {

AnalysisReport analyze(const GameTrace& trace, const AnalysisOptions& options)
{
    const auto grouping = group_by_epoch(trace);
    const auto epochs = occupied_epoch_outcomes(trace, grouping);

    AnalysisReport r;
    r.bet_count = static_cast<std::int64_t>(trace.bets().size());
    r.flip_count = static_cast<std::int64_t>(trace.flips().size());
    r.effective_events = static_cast<std::int64_t>(epochs.size());
    r.wins = static_cast<std::int64_t>(trace.wins());
    r.effective_wins = std::count_if(epochs.begin(), epochs.end(), [](const EpochOutcome& e) { return e.won; });
    r.naive_compound = naive_compound_probability(trace);
    r.true_compound = true_compound_probability(trace);
    r.naive_pvalue = random_reproduction_pvalue(r.wins, r.bet_count);
    r.corrected_pvalue = random_reproduction_pvalue(r.effective_wins, r.effective_events);

    if (options.randomize_trials > 0) {
        std::vector<RandomizationResult> results;
        results.reserve(trace.bets().size());
        for (std::size_t i = 0; i < trace.bets().size(); ++i)
            results.push_back(randomization_test(trace, i, options.randomize_trials, options.seed));
        r.randomization = std::move(results);
    }
    return r;
}

} // namespace coinparadox
