#include "coinparadox/ingest.hpp"

#include "coinparadox/errors.hpp"
#include "coinparadox/json.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <fstream>

namespace coinparadox {

IngestError::IngestError(Kind kind, std::size_t line, const std::string& what)
    : std::runtime_error(line > 0 ? fmt::format("line {}: {}", line, what) : what), kind_(kind), line_(line)
{
}

const char* to_string(IngestError::Kind kind) noexcept
{
    switch (kind) {
    case IngestError::Kind::MissingFile: return "missing-file";
    case IngestError::Kind::MalformedRow: return "malformed-row";
    case IngestError::Kind::TimeOutOfRange: return "time-out-of-range";
    case IngestError::Kind::UnknownFace: return "unknown-face";
    case IngestError::Kind::DuplicateTime: return "duplicate-time";
    }
    return "unknown";
}

namespace {

struct Row {
    std::size_t line;
    double time;
    Face face;
};

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view s)
{
    double v = 0.0;
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        return std::nullopt;
    return v;
}

std::vector<Row> parse_rows(std::istream& in, std::optional<double> horizon)
{
    std::vector<Row> rows;
    std::string line;
    std::size_t lineno = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view = line;
        if (lineno == 1 && view.starts_with("\xEF\xBB\xBF"))
            view.remove_prefix(3);
        view = trim(view);
        if (view.empty())
            continue;

        const auto comma = view.find(',');
        if (comma == std::string_view::npos || view.find(',', comma + 1) != std::string_view::npos)
            throw IngestError(IngestError::Kind::MalformedRow, lineno,
                              fmt::format("expected two comma-separated fields, got '{}'", view));
        const auto time_field = trim(view.substr(0, comma));
        const auto face_field = trim(view.substr(comma + 1));

        const auto time = parse_number(time_field);
        if (!time) {
            if (first_content) { // header
                first_content = false;
                continue;
            }
            throw IngestError(IngestError::Kind::MalformedRow, lineno,
                              fmt::format("time field '{}' is not a number", time_field));
        }
        first_content = false;

        if (!std::isfinite(*time) || *time < 0.0 || (horizon && *time > *horizon))
            throw IngestError(IngestError::Kind::TimeOutOfRange, lineno,
                              horizon ? fmt::format("time {} outside [0, {}]", *time, *horizon)
                                      : fmt::format("time {} must be finite and non-negative", *time));

        Face face{};
        try {
            face = parse_face(face_field);
        } catch (const DomainError& e) {
            throw IngestError(IngestError::Kind::UnknownFace, lineno, e.what());
        }
        rows.push_back({lineno, *time, face});
    }
    return rows;
}

std::ifstream open(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IngestError(IngestError::Kind::MissingFile, 0, fmt::format("cannot open '{}'", path.string()));
    return in;
}

std::string format_time(double t) { return fmt::format("{}", round_significant(t)); }

} // namespace

std::vector<Flip> parse_flips(std::istream& in, std::optional<double> horizon)
{
    const auto rows = parse_rows(in, horizon);
    std::vector<Flip> flips;
    flips.reserve(rows.size());
    for (const Row& r : rows) {
        if (!flips.empty() && r.time <= flips.back().time) {
            if (r.time == flips.back().time)
                throw IngestError(IngestError::Kind::DuplicateTime, r.line,
                                  fmt::format("duplicate flip time {}", r.time));
            throw IngestError(IngestError::Kind::MalformedRow, r.line,
                              fmt::format("flip time {} precedes previous flip time {}", r.time, flips.back().time));
        }
        flips.push_back({r.time, r.face});
    }
    return flips;
}

std::vector<Bet> parse_bets(std::istream& in, std::optional<double> horizon)
{
    const auto rows = parse_rows(in, horizon);
    std::vector<Bet> bets;
    bets.reserve(rows.size());
    for (const Row& r : rows)
        bets.push_back({r.time, r.face});
    std::stable_sort(bets.begin(), bets.end(), [](const Bet& a, const Bet& b) { return a.time < b.time; });
    return bets;
}

std::vector<Flip> load_flips(const std::filesystem::path& path, std::optional<double> horizon)
{
    auto in = open(path);
    return parse_flips(in, horizon);
}

std::vector<Bet> load_bets(const std::filesystem::path& path, std::optional<double> horizon)
{
    auto in = open(path);
    return parse_bets(in, horizon);
}

std::string write_flips_csv(const std::vector<Flip>& flips)
{
    std::string out = "time,outcome\n";
    for (const Flip& f : flips)
        out += fmt::format("{},{}\n", format_time(f.time), to_char(f.outcome));
    return out;
}

std::string write_bets_csv(const std::vector<Bet>& bets)
{
    std::string out = "time,prediction\n";
    for (const Bet& b : bets)
        out += fmt::format("{},{}\n", format_time(b.time), to_char(b.prediction));
    return out;
}

} // namespace coinparadox
