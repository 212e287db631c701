#pragma once

#include "coinparadox/game.hpp"

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coinparadox {

class IngestError : public std::runtime_error {
public:
    enum class Kind { MissingFile, MalformedRow, TimeOutOfRange, UnknownFace, DuplicateTime };

    IngestError(Kind kind, std::size_t line, const std::string& what);

    Kind kind() const noexcept { return kind_; }
    /// 1-based line number, 0 when the error is not tied to a line.
    std::size_t line() const noexcept { return line_; }

private:
    Kind kind_;
    std::size_t line_;
};

const char* to_string(IngestError::Kind kind) noexcept;

/// CSV rows `time,face` with face in {H, T}. An optional header row is recognized by a
/// non-numeric first field. LF and CRLF line endings; blank lines are skipped.
/// Times must be finite, >= 0 and, when a horizon is given, <= horizon.
///
/// Flips must be listed in strictly increasing time order; repeated times are
/// rejected as DuplicateTime. Bets are stably sorted by time, so rows sharing a
/// timestamp keep their file order.
std::vector<Flip> parse_flips(std::istream& in, std::optional<double> horizon = std::nullopt);
std::vector<Bet> parse_bets(std::istream& in, std::optional<double> horizon = std::nullopt);

std::vector<Flip> load_flips(const std::filesystem::path& path, std::optional<double> horizon = std::nullopt);
std::vector<Bet> load_bets(const std::filesystem::path& path, std::optional<double> horizon = std::nullopt);

std::string write_flips_csv(const std::vector<Flip>& flips);
std::string write_bets_csv(const std::vector<Bet>& bets);

} // namespace coinparadox
