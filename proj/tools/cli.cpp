#include "cli.hpp"

#include "coinparadox/demo.hpp"
#include "coinparadox/errors.hpp"
#include "coinparadox/ingest.hpp"
#include "coinparadox/json.hpp"
#include "coinparadox/report.hpp"
#include "coinparadox/significance.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fstream>
#include <optional>
#include <ostream>

namespace coinparadox::cli {

namespace {

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<double> parse_time_list(const std::string& text)
{
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto token = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(token, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (used != token.size() || token.empty())
            throw UsageError(fmt::format("--flip-times: '{}' is not a number", token));
        out.push_back(v);
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw UsageError(fmt::format("cannot write '{}'", path));
    file << text;
}

double inferred_horizon(const std::vector<Flip>& flips, const std::vector<Bet>& bets)
{
    double h = 0.0;
    if (!flips.empty())
        h = std::max(h, flips.back().time);
    if (!bets.empty())
        h = std::max(h, bets.back().time);
    return h > 0.0 ? h : 1.0;
}

std::string format_report_text(const AnalysisReport& r)
{
    std::string out;
    out += fmt::format("bets               {}\n", r.bet_count);
    out += fmt::format("flips              {}\n", r.flip_count);
    out += fmt::format("effective events   {}\n", r.effective_events);
    out += fmt::format("wins               {}\n", r.wins);
    out += fmt::format("effective wins     {}\n", r.effective_wins);
    out += fmt::format("naive compound     {:.12g}\n", r.naive_compound);
    out += fmt::format("true compound      {:.12g}\n", r.true_compound);
    out += fmt::format("naive p-value      {:.12g}\n", r.naive_pvalue);
    out += fmt::format("corrected p-value  {:.12g}\n", r.corrected_pvalue);
    if (r.randomization) {
        for (const auto& z : *r.randomization)
            out += fmt::format("bet {} moved in ({:g}, {:g}]: changed {}/{} (fraction {:.12g})\n", z.bet_index,
                               z.interval.lo, z.interval.hi, z.changed, z.trials, z.change_fraction);
    }
    return out;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Coin-flip betting game: compound probabilities and significance of betting records"};
    app.require_subcommand(1);

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Simulate a game and print the trace as JSON");
    std::optional<double> sim_horizon;
    std::string sim_flip_times = "0";
    double sim_bias = 0.5;
    std::uint64_t sim_seed = 0;
    std::string sim_bets;
    std::string sim_out;
    simulate->add_option("--horizon", sim_horizon, "Length of the game interval")->required();
    simulate->add_option("--flip-times", sim_flip_times, "Comma-separated flip times, first must be 0");
    simulate->add_option("--bias", sim_bias, "Probability that a flip lands Heads");
    simulate->add_option("--seed", sim_seed, "Random seed");
    simulate->add_option("--bets", sim_bets, "Bets CSV (time,prediction)");
    simulate->add_option("--out", sim_out, "Write the trace here instead of stdout");

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a recorded game");
    std::string an_flips;
    std::string an_bets;
    std::int64_t an_randomize = 0;
    std::uint64_t an_seed = 0;
    std::string an_format = "json";
    std::optional<double> an_horizon;
    double an_bias = 0.5;
    analyze_cmd->add_option("--flips", an_flips, "Flips CSV (time,outcome)")->required();
    analyze_cmd->add_option("--bets", an_bets, "Bets CSV (time,prediction)")->required();
    analyze_cmd->add_option("--randomize", an_randomize, "Randomization trials per bet (0 = off)")
        ->check(CLI::NonNegativeNumber);
    analyze_cmd->add_option("--seed", an_seed, "Seed for the randomization test");
    analyze_cmd->add_option("--format", an_format, "Output format")->check(CLI::IsMember({"json", "text"}));
    analyze_cmd->add_option("--horizon", an_horizon, "Game length (default: latest flip or bet time)");
    analyze_cmd->add_option("--bias", an_bias, "Probability that a flip lands Heads");

    // significance
    auto* significance = app.add_subcommand("significance", "Binomial tail probabilities");
    std::optional<std::int64_t> sig_n;
    std::optional<double> sig_p;
    std::optional<std::int64_t> sig_wins;
    std::optional<std::int64_t> sig_effective;
    auto* opt_n = significance->add_option("--n", sig_n, "Number of plays");
    auto* opt_p = significance->add_option("--p", sig_p, "Win probability per play");
    auto* opt_wins = significance->add_option("--wins", sig_wins, "Effective wins");
    auto* opt_eff = significance->add_option("--effective", sig_effective, "Effective events");
    opt_n->needs(opt_p);
    opt_p->needs(opt_n);
    opt_wins->needs(opt_eff);
    opt_eff->needs(opt_wins);
    opt_n->excludes(opt_wins);
    opt_n->excludes(opt_eff);
    opt_p->excludes(opt_wins);
    opt_p->excludes(opt_eff);

    // paradox
    auto* paradox = app.add_subcommand("paradox", "Walk through the two-bet paradox");
    bool px_json = false;
    bool px_second_flip = false;
    std::int64_t px_trials = 1000;
    std::uint64_t px_seed = 0;
    paradox->add_flag("--json", px_json, "Machine-readable output");
    paradox->add_flag("--with-second-flip", px_second_flip, "A flips again between the two bets");
    paradox->add_option("--trials", px_trials, "Randomization trials for the second bet")
        ->check(CLI::PositiveNumber);
    paradox->add_option("--seed", px_seed, "Seed for the randomization test");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (simulate->parsed()) {
            std::vector<Bet> bets;
            if (!sim_bets.empty())
                bets = load_bets(sim_bets);
            const auto times = parse_time_list(sim_flip_times);
            const GameTrace trace = simulate_game({*sim_horizon, sim_bias, sim_seed}, times, bets);
            write_output(to_json(trace).dump(2) + "\n", sim_out, out);
        } else if (analyze_cmd->parsed()) {
            auto flips = load_flips(an_flips, an_horizon);
            auto bets = load_bets(an_bets, an_horizon);
            const double horizon = an_horizon.value_or(inferred_horizon(flips, bets));
            const GameTrace trace = make_trace({horizon, an_bias, an_seed}, std::move(flips), std::move(bets));
            const AnalysisReport report = analyze(trace, {an_randomize, an_seed});
            out << (an_format == "text" ? format_report_text(report) : to_json(report).dump(2) + "\n");
        } else if (significance->parsed()) {
            if (sig_n)
                out << fmt::format("{:.12g}\n", losing_probability(*sig_n, *sig_p));
            else if (sig_wins)
                out << fmt::format("{:.12g}\n", random_reproduction_pvalue(*sig_wins, *sig_effective));
            else
                throw UsageError("significance needs --n/--p or --wins/--effective");
        } else if (paradox->parsed()) {
            const auto demo = run_paradox_demo(px_second_flip, px_trials, px_seed);
            out << (px_json ? demo_to_json(demo).dump(2) + "\n" : format_demo_text(demo));
        }
    } catch (const ValidationError& e) {
        for (const auto& offense : e.offenses())
            err << "error: " << offense << "\n";
        return kUsage;
    } catch (const IngestError& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidTraceError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kOk;
}

} // namespace coinparadox::cli
